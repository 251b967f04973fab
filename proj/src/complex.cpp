#include "hss/complex.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hss/error.hpp"

namespace hss {

namespace {

std::string describe(const Generator& g) { return "'" + g.id + "' at " + to_string(g.position); }

}  // namespace

MultifilteredComplex::MultifilteredComplex(int n, PrimeField field, std::vector<Generator> generators,
                                           const std::vector<DifferentialEntry>& differential)
    : n_(n), field_(field), generators_(std::move(generators)),
      d_(LinearMap::zero(field, generators_.size(), generators_.size())) {
  if (n_ < 1) throw ValidationError("n must be at least 1");

  std::unordered_map<std::string, std::size_t> index;
  std::size_t with_degree = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!index.emplace(g.id, i).second) throw ValidationError("duplicate generator id '" + g.id + "'");
    if (g.position.size() != static_cast<std::size_t>(n_)) {
      throw ValidationError("generator '" + g.id + "' has a position of length " +
                            std::to_string(g.position.size()) + ", expected " + std::to_string(n_));
    }
    if (g.degree) ++with_degree;
  }
  if (with_degree != 0 && with_degree != generators_.size()) {
    throw ValidationError("degrees must be given for all generators or for none");
  }
  graded_ = with_degree != 0;

  Matrix images(generators_.size(), generators_.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : differential) {
    auto from = index.find(e.from);
    auto to = index.find(e.to);
    if (from == index.end()) throw ValidationError("differential entry refers to unknown generator '" + e.from + "'");
    if (to == index.end()) throw ValidationError("differential entry refers to unknown generator '" + e.to + "'");
    if (!seen.emplace(from->second, to->second).second) {
      throw ValidationError("duplicate differential entry " + e.from + " -> " + e.to);
    }
    Scalar c = field_.reduce(e.coeff);
    if (c == 0) {
      throw ValidationError("differential entry " + e.from + " -> " + e.to + " has coefficient " +
                            std::to_string(e.coeff) + ", which vanishes mod " +
                            std::to_string(field_.characteristic()));
    }
    const auto& gx = generators_[from->second];
    const auto& gy = generators_[to->second];
    if (!leq(gy.position, gx.position)) {
      throw ValidationError("monotonicity violation: d maps " + describe(gx) + " to " + describe(gy));
    }
    if (graded_ && *gy.degree != *gx.degree - 1) {
      throw ValidationError("differential entry " + e.from + " -> " + e.to + " does not lower the degree by one");
    }
    images.at(from->second, to->second) = c;
  }
  if (!multiply(images, images, field_).is_zero()) throw ValidationError("d∘d is not zero");
  d_ = LinearMap(field_, std::move(images));
}

Box MultifilteredComplex::support_box() const {
  std::vector<IVec> points;
  points.reserve(generators_.size());
  for (const auto& g : generators_) points.push_back(g.position);
  return Box::hull(points, static_cast<std::size_t>(n_));
}

Box MultifilteredComplex::working_box(const IVec& point) const {
  if (point.size() != static_cast<std::size_t>(n_)) {
    throw DimensionMismatch("position " + to_string(point) + " has the wrong length for n=" + std::to_string(n_));
  }
  std::vector<IVec> points{point};
  for (const auto& g : generators_) points.push_back(g.position);
  return Box::hull(points, static_cast<std::size_t>(n_)).inflated(1);
}

std::vector<bool> MultifilteredComplex::mask(const Downset& d) const {
  std::vector<bool> m(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& pos = generators_[i].position;
    if (!d.box().contains(pos)) throw DimensionMismatch("downset box does not cover the support");
    m[i] = d.contains(pos);
  }
  return m;
}

Subspace MultifilteredComplex::filtration_subspace(const Downset& d) const {
  return Subspace::coordinate(field_, mask(d));
}

std::vector<std::int64_t> MultifilteredComplex::degrees() const {
  std::set<std::int64_t> ds;
  for (std::size_t i = 0; i < generators_.size(); ++i) ds.insert(degree_of(i));
  if (ds.empty()) ds.insert(0);
  return {ds.begin(), ds.end()};
}

DegreeDims MultifilteredComplex::zero_dims() const {
  DegreeDims dims;
  for (auto k : degrees()) dims[k] = 0;
  return dims;
}

DegreeDims MultifilteredComplex::graded_dims(const Subspace& s) const {
  DegreeDims dims = zero_dims();
  for (auto col : s.pivots()) ++dims[degree_of(col)];
  return dims;
}

DegreeDims MultifilteredComplex::graded_dims(const Subquotient& s) const {
  DegreeDims dims = zero_dims();
  for (auto col : s.quotient_pivots()) ++dims[degree_of(col)];
  return dims;
}

nlohmann::ordered_json MultifilteredComplex::dims_json(const DegreeDims& dims) const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  if (!graded_) {
    std::size_t total = 0;
    for (const auto& [k, v] : dims) total += v;
    out["total"] = total;
    return out;
  }
  for (const auto& [k, v] : dims) out[std::to_string(k)] = v;
  return out;
}

nlohmann::ordered_json MultifilteredComplex::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n_;
  doc["characteristic"] = field_.characteristic();
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : generators_) {
    nlohmann::ordered_json item;
    item["id"] = g.id;
    if (g.degree) item["degree"] = *g.degree;
    item["position"] = g.position;
    gens.push_back(std::move(item));
  }
  doc["generators"] = std::move(gens);
  auto diff = nlohmann::ordered_json::array();
  const Matrix& m = d_.images();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      nlohmann::ordered_json item;
      item["from"] = generators_[i].id;
      item["to"] = generators_[j].id;
      item["coeff"] = m.at(i, j);
      diff.push_back(std::move(item));
    }
  }
  doc["differential"] = std::move(diff);
  return doc;
}

namespace {

const nlohmann::json& field_of(const nlohmann::json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw ValidationError(where + " must be a JSON object");
  auto it = object.find(key);
  if (it == object.end()) throw ValidationError(where + " is missing the field \"" + key + "\"");
  return *it;
}

std::int64_t integer_field(const nlohmann::json& object, const char* key, const std::string& where) {
  const auto& v = field_of(object, key, where);
  if (!v.is_number_integer()) throw ValidationError(where + ": \"" + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::string string_field(const nlohmann::json& object, const char* key, const std::string& where) {
  const auto& v = field_of(object, key, where);
  if (!v.is_string()) throw ValidationError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

MultifilteredComplex load_mfc(const nlohmann::json& document) {
  const std::string top = "complex document";
  auto n = integer_field(document, "n", top);
  if (n < 1 || n > 64) throw ValidationError("n must lie in 1..64");
  auto p = integer_field(document, "characteristic", top);
  if (p < 2 || p >= kMaxCharacteristic || !is_prime(p)) {
    throw ValidationError("characteristic " + std::to_string(p) + " is not a supported prime");
  }

  const auto& gens = field_of(document, "generators", top);
  if (!gens.is_array()) throw ValidationError("\"generators\" must be an array");
  std::vector<Generator> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generator #" + std::to_string(i);
    Generator g;
    g.id = string_field(gens[i], "id", where);
    if (gens[i].contains("degree")) g.degree = integer_field(gens[i], "degree", where);
    const auto& pos = field_of(gens[i], "position", where);
    if (!pos.is_array()) throw ValidationError(where + ": \"position\" must be an array");
    for (const auto& x : pos) {
      if (!x.is_number_integer()) throw ValidationError(where + ": position entries must be integers");
      g.position.push_back(x.get<std::int64_t>());
    }
    generators.push_back(std::move(g));
  }

  const auto& diff = field_of(document, "differential", top);
  if (!diff.is_array()) throw ValidationError("\"differential\" must be an array");
  std::vector<DifferentialEntry> entries;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    const std::string where = "differential entry #" + std::to_string(i);
    entries.push_back({string_field(diff[i], "from", where), string_field(diff[i], "to", where),
                       integer_field(diff[i], "coeff", where)});
  }
  return MultifilteredComplex(static_cast<int>(n), PrimeField(static_cast<std::uint32_t>(p)), std::move(generators),
                              entries);
}

MultifilteredComplex load_mfc_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": malformed JSON", e.byte);
  }
  return load_mfc(doc);
}

}  // namespace hss
