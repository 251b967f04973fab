#include "hss/engine.hpp"

#include "hss/error.hpp"
#include "hss/kernels.hpp"

namespace hss {

namespace {

/// Decomposes vectors of U + W as u + w. Rows [u | u] and [w | 0] are put in
/// echelon form once; reducing [v | 0] then leaves [0 | -u].
class Splitter {
 public:
  Splitter(const Subspace& u_space, const Subspace& w_space)
      : n_(u_space.ambient_dim()), tagged_(build(u_space, w_space)) {}

  /// Returns u; throws IllDefinedMap when v is not in U + W.
  Vector u_part(std::span<const Scalar> v) const {
    const auto& field = tagged_.field();
    Vector probe(2 * n_, 0);
    std::copy(v.begin(), v.end(), probe.begin());
    Vector r = tagged_.reduce(probe);
    for (std::size_t i = 0; i < n_; ++i) {
      if (r[i] != 0) throw IllDefinedMap("vector does not decompose along the given subspaces");
    }
    Vector u(n_);
    for (std::size_t i = 0; i < n_; ++i) u[i] = field.neg(r[n_ + i]);
    return u;
  }

 private:
  static Subspace build(const Subspace& u_space, const Subspace& w_space) {
    const std::size_t n = u_space.ambient_dim();
    Matrix stacked(0, 2 * n);
    Vector row(2 * n, 0);
    for (std::size_t i = 0; i < u_space.dim(); ++i) {
      auto b = u_space.basis().row(i);
      std::copy(b.begin(), b.end(), row.begin());
      std::copy(b.begin(), b.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
      stacked.append_row(row);
    }
    std::fill(row.begin() + static_cast<std::ptrdiff_t>(n), row.end(), 0);
    for (std::size_t i = 0; i < w_space.dim(); ++i) {
      auto b = w_space.basis().row(i);
      std::copy(b.begin(), b.end(), row.begin());
      stacked.append_row(row);
    }
    return Subspace::span(u_space.field(), std::move(stacked));
  }

  std::size_t n_;
  Subspace tagged_;
};

std::vector<bool> concat(std::initializer_list<const std::vector<bool>*> parts) {
  std::vector<bool> out;
  for (const auto* part : parts) out.insert(out.end(), part->begin(), part->end());
  return out;
}

}  // namespace

Subspace Engine::cycles(const Downset& p, const Downset& z) const {
  const auto mp = c_.mask(p);
  const auto mz = c_.mask(z);
  auto key = concat({&mp, &mz});
  {
    std::lock_guard lock(mutex_);
    auto it = cycles_cache_.find(key);
    if (it != cycles_cache_.end()) return it->second;
  }

  const auto& field = c_.field();
  const Matrix& d = c_.differential().images();
  const std::size_t n = c_.size();
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (mp[i]) rows.push_back(i);
    if (!mz[i]) cols.push_back(i);
  }
  // Left kernel of the block of d from p into the complement of z, via [M | I].
  const std::size_t width = cols.size() + rows.size();
  Matrix aug(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) aug.at(r, c) = d.at(rows[r], cols[c]);
    aug.at(r, cols.size() + r) = 1;
  }
  auto pivots = rref_in_place(aug, field);
  Matrix basis(0, n);
  Vector v(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] < cols.size()) continue;
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t k = 0; k < rows.size(); ++k) v[rows[k]] = aug.at(r, cols.size() + k);
    basis.append_row(v);
  }
  Subspace result = Subspace::span(field, std::move(basis));

  std::lock_guard lock(mutex_);
  cycles_cache_.emplace(std::move(key), result);
  return result;
}

Subspace Engine::boundaries(const Downset& b, const Downset& p) const {
  return image(c_.differential(), cycles(b, p));
}

ETerm Engine::e_term(const Downset& p, const Downset& q) const {
  if (!q.subset_of(p)) throw ValidationError("E-term needs q contained in p");
  Subspace a = cycles(p, q);
  Subspace den = intersect(sum(image(c_.differential(), filtration(p)), filtration(q)), a);
  return {Subquotient(std::move(a), std::move(den)), p, q};
}

STerm Engine::s_term(const DownsetQuad& quad, STermAlgorithm algorithm) const {
  if (!quad.is_ordered()) throw ValidationError("S-term needs z ⊆ q ⊆ p ⊆ b");
  if (algorithm == STermAlgorithm::ClosedForm) {
    const auto mb = c_.mask(quad.b), mp = c_.mask(quad.p), mq = c_.mask(quad.q), mz = c_.mask(quad.z);
    auto key = concat({&mb, &mp, &mq, &mz});
    {
      std::lock_guard lock(mutex_);
      auto it = s_term_cache_.find(key);
      if (it != s_term_cache_.end()) return {it->second, quad};
    }
    Subspace fq = filtration(quad.q);
    Subquotient value(sum(cycles(quad.p, quad.z), fq), sum(boundaries(quad.b, quad.p), fq));
    std::lock_guard lock(mutex_);
    s_term_cache_.emplace(std::move(key), value);
    return {std::move(value), quad};
  }

  const LinearMap& d = c_.differential();
  const ETerm epq = e_term(quad.p, quad.q);
  const ETerm eqz = e_term(quad.q, quad.z);
  const ETerm ebp = e_term(quad.b, quad.p);

  Matrix out = induced_map(d, epq.value, eqz.value);
  Subspace kernel_lift = epq.value.lift_subspace(matrix_kernel(out, c_.field()));

  Matrix in = induced_map(d, ebp.value, epq.value);
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < in.cols(); ++j) {
    Vector col(in.rows());
    for (std::size_t i = 0; i < in.rows(); ++i) col[i] = in.at(i, j);
    columns.push_back(std::move(col));
  }
  Subspace image_lift = epq.value.lift_subspace(columns);
  return {Subquotient(std::move(kernel_lift), std::move(image_lift)), quad};
}

DownsetQuad Engine::page_quad(const Word& w, const IVec& point) const {
  require_admissible(w);
  if (w.n() != c_.n()) throw DimensionMismatch("word and complex have different n");
  const Box box = c_.working_box(point);
  if (is_final(w)) return limit_quad(box);
  if (w.empty()) return representative_quad(w, 1, point, box);

  const auto& letters = w.letters();
  const Letter last = letters.back();
  if (last.kind == Letter::Kind::Saturate) {
    Word prefix(w.n(), {letters.begin(), letters.end() - 1});
    return step_quads(prefix, last.index, point, box).saturated;
  }
  if (last.kind == Letter::Kind::Extend) {
    const Letter sat = letters[letters.size() - 2];
    Word prefix(w.n(), {letters.begin(), letters.end() - 2});
    return step_quads(prefix, sat.index, point, box).extended;
  }
  const int j = saturated_sets(w).unsaturated.front();
  return representative_quad(w, j, point, box);
}

PageTerm Engine::page(const Word& w, const IVec& point) const {
  DownsetQuad quad = page_quad(w, point);
  STerm term = s_term(quad);
  DegreeDims d = dims(term.value);
  return {w, reduce_mod_lattice(point, lattice(w)), std::move(d), std::move(term)};
}

Matrix Engine::connecting_map(const STerm& source, const STerm& target) const {
  const LinearMap& d = c_.differential();
  const Subspace a = cycles(source.quad.p, source.quad.z);
  const Subspace fq = filtration(source.quad.q);

  const Splitter splitter(a, fq);

  const Subquotient& src = source.value;
  const Subquotient& dst = target.value;
  Matrix m(dst.dim(), src.dim());
  for (std::size_t col = 0; col < src.dim(); ++col) {
    Vector image_vec = d.apply(splitter.u_part(src.quotient_basis().row(col)));
    auto coords = dst.coords(image_vec);
    if (!coords) throw IllDefinedMap("connecting map leaves the target numerator");
    for (std::size_t row = 0; row < dst.dim(); ++row) m.at(row, col) = (*coords)[row];
  }
  const Subspace& den = src.denominator();
  for (std::size_t i = 0; i < den.dim(); ++i) {
    Vector image_vec = d.apply(splitter.u_part(den.basis().row(i)));
    if (!dst.denominator().contains(image_vec)) {
      throw IllDefinedMap("connecting map does not carry the denominator into the target denominator");
    }
  }
  return m;
}

PageDifferential Engine::page_differential(const Word& w, const IVec& point, int j) const {
  require_admissible(w.then(Letter::finite(j)));
  if (w.n() != c_.n()) throw DimensionMismatch("word and complex have different n");
  const IVec a = differential_data(w).a[static_cast<std::size_t>(j - 1)];
  const IVec above = point + a;
  const IVec below = point - a;
  const Box box = c_.working_box(point).joined(c_.working_box(above)).joined(c_.working_box(below));

  PageDifferential out{s_term(representative_quad(w, j, above, box)),
                       s_term(representative_quad(w, j, point, box)),
                       s_term(representative_quad(w, j, below, box)),
                       {},
                       {}};
  out.incoming = connecting_map(out.source, out.middle);
  out.outgoing = connecting_map(out.middle, out.target);
  return out;
}

PageTerm Engine::saturate(const Word& w, const IVec& point, int j) const {
  return page(w.then(Letter::saturate(j)), point);
}

STerm Engine::finite_stage(const Word& w, const IVec& point, int j, std::int64_t k) const {
  if (k < 0) throw ValidationError("stage index must be nonnegative");
  require_admissible(w.then(Letter::finite(j)));
  const Box box = c_.working_box(point);
  LexFrame frame(w, j, point);
  return s_term({frame.b_iter(k).materialize(box), frame.p().materialize(box), frame.q().materialize(box),
                 frame.z_iter(k).materialize(box)});
}

std::int64_t Engine::stabilization_index(const Word& w, const IVec& point, int j) const {
  require_admissible(w.then(Letter::saturate(j)));
  const Box box = c_.working_box(point);
  LexFrame frame(w, j, point);
  const auto b_limit = c_.mask(frame.b_limit().materialize(box));
  const auto z_limit = c_.mask(frame.z_limit().materialize(box));
  constexpr std::int64_t kCap = 1 << 20;
  for (std::int64_t k = 0; k < kCap; ++k) {
    if (c_.mask(frame.b_iter(k).materialize(box)) == b_limit &&
        c_.mask(frame.z_iter(k).materialize(box)) == z_limit) {
      return k;
    }
  }
  throw InternalError("saturation did not stabilize on a finite support");
}

ExtensionReport Engine::extension_filtration(const Word& w, const IVec& point, int j) const {
  require_admissible(w.then(Letter::saturate(j)).then(Letter::extend()));
  if (w.n() != c_.n()) throw DimensionMismatch("word and complex have different n");
  const Box box = c_.working_box(point);
  LexFrame frame(w, j, point);

  const Downset upper = frame.p_upper_limit().materialize(box);
  const Downset lower = frame.p_lower_limit().materialize(box);
  const Downset b_limit = frame.b_limit().materialize(box);
  const Downset z_limit = frame.z_limit().materialize(box);

  const Subspace den = sum(boundaries(b_limit, upper), filtration(lower));
  ExtensionReport report;
  Subquotient total(sum(cycles(upper, z_limit), filtration(lower)), den);
  report.total = dims(total);

  std::optional<std::int64_t> lo, hi;
  for (const auto& g : c_.generators()) {
    if (!upper.contains(g.position) || lower.contains(g.position)) continue;
    auto i = frame.extension_index(g.position);
    if (!i) throw InternalError("support point in the extension slice without an index");
    lo = lo ? std::min(*lo, *i) : *i;
    hi = hi ? std::max(*hi, *i) : *i;
  }
  if (!lo) {
    report.first_index = 0;
    report.filtration.push_back(report.total);
    report.pieces.push_back(total);
    return report;
  }

  report.first_index = *lo - 1;
  const IVec& delta = frame.delta();
  for (std::int64_t i = *lo - 1; i <= *hi; ++i) {
    Downset pi = frame.p_shift(i).materialize(box);
    Subquotient f(sum(cycles(pi, z_limit), den), den);
    report.filtration.push_back(dims(f));
    report.pieces.push_back(std::move(f));
    if (i >= *lo) report.graded_pieces.push_back(saturate(w, point + scaled(delta, i), j).dims);
  }
  return report;
}

DegreeDims Engine::limit() const {
  return dims(s_term(limit_quad(c_.support_box().inflated(1))).value);
}

nlohmann::ordered_json page_report(const MultifilteredComplex& c, const PageTerm& term) {
  nlohmann::ordered_json doc;
  doc["word"] = term.word.to_string();
  doc["position"] = term.position_class;
  auto basis = nlohmann::ordered_json::array();
  for (const auto& v : lattice(term.word)) basis.push_back(v);
  doc["lattice"] = std::move(basis);
  doc["dims"] = c.dims_json(term.dims);
  return doc;
}

}  // namespace hss
