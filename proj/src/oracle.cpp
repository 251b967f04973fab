#include "hss/oracle.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "hss/error.hpp"

namespace hss {

namespace {

using Row = std::vector<std::int64_t>;

struct Mod {
  std::int64_t p;

  std::int64_t norm(std::int64_t v) const { return ((v % p) + p) % p; }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t result = 1, base = norm(a), e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
};

/// Row echelon form by textbook elimination; returns the rank and leaves the
/// pivot rows at the top of `rows`.
std::size_t eliminate(std::vector<Row>& rows, const Mod& m) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pick = rank;
    while (pick < rows.size() && m.norm(rows[pick][col]) == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    const std::int64_t scale = m.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = m.norm(x * scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const std::int64_t f = m.norm(rows[r][col]);
      if (f == 0) continue;
      for (std::size_t c = 0; c < width; ++c) rows[r][c] = m.norm(rows[r][c] - f * rows[rank][c]);
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

std::size_t rank_of(std::vector<Row> rows, const Mod& m) { return eliminate(rows, m); }

/// Basis of { x : x * M = 0 } for the given rows of M.
std::vector<Row> left_null_space(const std::vector<Row>& matrix, std::size_t width, const Mod& m) {
  const std::size_t h = matrix.size();
  std::vector<Row> aug(h, Row(width + h, 0));
  for (std::size_t i = 0; i < h; ++i) {
    std::copy(matrix[i].begin(), matrix[i].end(), aug[i].begin());
    aug[i][width + i] = 1;
  }
  eliminate(aug, m);
  std::vector<Row> out;
  for (const auto& r : aug) {
    if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(width), [](auto v) { return v == 0; })) {
      out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(width), r.end());
    }
  }
  return out;
}

struct Flat {
  Mod m;
  std::vector<std::int64_t> degree;
  std::vector<std::int64_t> position;  // first coordinate (singly filtered use)
  std::vector<Row> d;                  // d[i][j]: coefficient of g_j in d(g_i)
};

Flat flatten(const MultifilteredComplex& c) {
  Flat f{Mod{static_cast<std::int64_t>(c.field().characteristic())}, {}, {}, {}};
  const auto& images = c.differential().images();
  for (std::size_t i = 0; i < c.size(); ++i) {
    f.degree.push_back(c.generators()[i].degree.value_or(0));
    f.position.push_back(c.generators()[i].position.front());
    Row r(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) r[j] = images.at(i, j);
    f.d.push_back(std::move(r));
  }
  return f;
}

/// The classical filtration pieces of one homological degree. For ungraded
/// complexes the single "degree" uses every generator on both sides.
class DegreeSlice {
 public:
  DegreeSlice(const Flat& f, std::optional<std::int64_t> k) : f_(f) {
    for (std::size_t i = 0; i < f.degree.size(); ++i) {
      if (!k || f.degree[i] == *k) here_.push_back(i);
      if (!k || f.degree[i] == *k + 1) above_.push_back(i);
    }
  }

  /// Elements of this degree at positions <= top whose boundary lies at positions <= bound.
  std::vector<Row> cycles(std::optional<std::int64_t> top, std::optional<std::int64_t> bound) const {
    return cycles_in(here_, top, bound);
  }

  /// Boundaries of the elements one degree up chosen the same way.
  std::vector<Row> boundaries(std::optional<std::int64_t> top, std::optional<std::int64_t> bound) const {
    std::vector<Row> out;
    for (const auto& x : cycles_in(above_, top, bound)) out.push_back(apply(x));
    return out;
  }

 private:
  std::size_t width() const { return f_.degree.size(); }

  Row apply(const Row& x) const {
    Row y(width(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) y[j] = f_.m.norm(y[j] + x[i] * f_.d[i][j]);
    }
    return y;
  }

  /// An empty `top` means no restriction; an empty `bound` means the boundary must vanish.
  std::vector<Row> cycles_in(const std::vector<std::size_t>& gens, std::optional<std::int64_t> top,
                             std::optional<std::int64_t> bound) const {
    std::vector<std::size_t> rows;
    for (auto g : gens)
      if (!top || f_.position[g] <= *top) rows.push_back(g);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < width(); ++j)
      if (!bound || f_.position[j] > *bound) cols.push_back(j);
    std::vector<Row> block;
    for (auto g : rows) {
      Row r;
      for (auto j : cols) r.push_back(f_.d[g][j]);
      block.push_back(std::move(r));
    }
    std::vector<Row> out;
    for (const auto& coeffs : left_null_space(block, cols.size(), f_.m)) {
      Row x(width(), 0);
      for (std::size_t i = 0; i < rows.size(); ++i) x[rows[i]] = coeffs[i];
      out.push_back(std::move(x));
    }
    return out;
  }

  const Flat& f_;
  std::vector<std::size_t> here_, above_;
};

std::size_t quotient_dim(const std::vector<Row>& numerator, std::vector<Row> denominator, const Mod& m) {
  return numerator.size() - rank_of(std::move(denominator), m);
}

std::vector<Row> joined(std::vector<Row> a, const std::vector<Row>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

DegreeDims homology_total(const MultifilteredComplex& c) {
  Flat f = flatten(c);
  DegreeDims out;
  if (!c.graded()) {
    out[0] = c.size() - 2 * rank_of(f.d, f.m);
    return out;
  }
  auto block_rank = [&](std::int64_t k) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (f.degree[i] != k) continue;
      Row r;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (f.degree[j] == k - 1) r.push_back(f.d[i][j]);
      rows.push_back(std::move(r));
    }
    return rank_of(rows, f.m);
  };
  for (auto k : c.degrees()) {
    std::size_t count = 0;
    for (auto deg : f.degree) count += deg == k ? 1 : 0;
    out[k] = count - block_rank(k) - block_rank(k + 1);
  }
  return out;
}

DegreeDims ClassicalSpectralSequence::page(std::int64_t r, std::int64_t position) const {
  if (r < 1) throw ValidationError("classical pages start at r = 1");
  if (pages.empty()) return {};
  const auto& chosen = pages[static_cast<std::size_t>(std::min<std::int64_t>(r, static_cast<std::int64_t>(pages.size())) - 1)];
  if (position < lo || position > hi) {
    DegreeDims zero = chosen.front();
    for (auto& [k, v] : zero) v = 0;
    return zero;
  }
  return chosen[static_cast<std::size_t>(position - lo)];
}

DegreeDims ClassicalSpectralSequence::limit_term(std::int64_t position) const {
  if (infinity.empty()) return {};
  if (position < lo || position > hi) {
    DegreeDims zero = infinity.front();
    for (auto& [k, v] : zero) v = 0;
    return zero;
  }
  return infinity[static_cast<std::size_t>(position - lo)];
}

ClassicalSpectralSequence classical_ss(const MultifilteredComplex& c, std::int64_t max_page) {
  if (c.n() != 1) throw ValidationError("the classical spectral sequence needs n = 1");
  const Flat f = flatten(c);
  ClassicalSpectralSequence ss;
  if (c.size() == 0) {
    ss.lo = ss.hi = 0;
  } else {
    ss.lo = *std::min_element(f.position.begin(), f.position.end());
    ss.hi = *std::max_element(f.position.begin(), f.position.end());
  }
  const std::int64_t last = std::max(max_page, ss.hi - ss.lo + 2);

  std::vector<std::pair<std::int64_t, DegreeSlice>> slices;
  if (c.graded()) {
    for (auto k : c.degrees()) slices.emplace_back(k, DegreeSlice(f, k));
  } else {
    slices.emplace_back(0, DegreeSlice(f, std::nullopt));
  }

  // E^r_P = Z^r_P / (Z^{r-1}_{P-1} + d Z^{r-1}_{P+r-1}),  Z^r_P = F_P ∩ d⁻¹ F_{P-r}.
  for (std::int64_t r = 1; r <= last; ++r) {
    std::vector<DegreeDims> column;
    for (std::int64_t pos = ss.lo; pos <= ss.hi; ++pos) {
      DegreeDims dims;
      for (const auto& [k, s] : slices) {
        auto z = s.cycles(pos, pos - r);
        auto den = joined(s.cycles(pos - 1, pos - r), s.boundaries(pos + r - 1, pos));
        dims[k] = quotient_dim(z, std::move(den), f.m);
      }
      column.push_back(std::move(dims));
    }
    ss.pages.push_back(std::move(column));
  }

  // E^inf_P = Z^inf_P / (Z^inf_{P-1} + F_P ∩ im d).
  for (std::int64_t pos = ss.lo; pos <= ss.hi; ++pos) {
    DegreeDims dims;
    for (const auto& [k, s] : slices) {
      auto z = s.cycles(pos, std::nullopt);
      auto den = joined(s.cycles(pos - 1, std::nullopt), s.boundaries(std::nullopt, pos));
      dims[k] = quotient_dim(z, std::move(den), f.m);
    }
    ss.infinity.push_back(std::move(dims));
  }
  return ss;
}

namespace {

/// Inverse of a unipotent matrix that is lower triangular in generator order.
std::vector<Row> unipotent_inverse(const std::vector<Row>& g, const Mod& m) {
  const std::size_t n = g.size();
  std::vector<Row> inv(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    inv[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      // (G * inv)[i][j] = sum_k g[i][k] inv[k][j] = 0 for j < i.
      std::int64_t acc = 0;
      for (std::size_t k = j; k < i; ++k) acc = m.norm(acc + g[i][k] * inv[k][j]);
      inv[i][j] = m.norm(-acc);
    }
  }
  return inv;
}

std::vector<Row> product(const std::vector<Row>& a, const std::vector<Row>& b, const Mod& m) {
  const std::size_t n = a.size();
  std::vector<Row> out(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] = m.norm(out[i][j] + a[i][k] * b[k][j]);
    }
  return out;
}

}  // namespace

MultifilteredComplex random_complex(std::uint64_t seed, const RandomComplexOptions& options) {
  const auto n = static_cast<std::size_t>(options.n);
  if (options.lo.size() != n || options.hi.size() != n) throw DimensionMismatch("random complex box has the wrong dimension");
  std::mt19937_64 rng(seed);
  const Mod m{static_cast<std::int64_t>(options.prime)};
  std::uniform_int_distribution<int> count(0, std::max(0, options.max_per_cell));
  std::uniform_int_distribution<std::int64_t> coeff(1, m.p - 1);
  std::bernoulli_distribution pair(options.pair_probability);
  std::bernoulli_distribution mix(options.mix_probability);

  // Generators sorted so that every position-nonincreasing map is lower
  // triangular: lexicographic position order refines the componentwise one.
  const Box box(options.lo, options.hi);
  std::vector<Generator> gens;
  const std::int64_t dlo = options.graded ? options.degree_lo : 0;
  const std::int64_t dhi = options.graded ? options.degree_hi : 0;
  for (std::size_t cell = 0; cell < box.size(); ++cell) {
    IVec pos = box.point(cell);
    for (std::int64_t k = dlo; k <= dhi; ++k) {
      int c = count(rng);
      for (int i = 0; i < c; ++i) {
        Generator g;
        g.id = "g" + std::to_string(gens.size());
        if (options.graded) g.degree = k;
        g.position = pos;
        gens.push_back(std::move(g));
      }
    }
  }
  const std::size_t size = gens.size();
  auto degree = [&](std::size_t i) { return gens[i].degree.value_or(0); };
  auto below = [&](std::size_t j, std::size_t i) { return leq(gens[j].position, gens[i].position); };

  // Elementary pieces: each generator is the source of at most one x -> y.
  std::vector<Row> d0(size, Row(size, 0));
  std::vector<bool> used(size, false);
  std::vector<std::size_t> order(size);
  for (std::size_t i = 0; i < size; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (auto x : order) {
    if (used[x] || !pair(rng)) continue;
    std::vector<std::size_t> targets;
    for (std::size_t y = 0; y < size; ++y) {
      if (y == x || used[y] || !below(y, x)) continue;
      if (options.graded ? degree(y) != degree(x) - 1 : false) continue;
      targets.push_back(y);
    }
    if (targets.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    std::size_t y = targets[pick(rng)];
    used[x] = used[y] = true;
    d0[x][y] = coeff(rng);
  }

  // Change of basis G = I + N, N strictly lower, degree- and filtration-preserving.
  std::vector<Row> g(size, Row(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    g[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (degree(j) == degree(i) && below(j, i) && mix(rng)) g[i][j] = coeff(rng);
    }
  }
  const std::vector<Row> d = product(product(g, d0, m), unipotent_inverse(g, m), m);

  std::vector<DifferentialEntry> entries;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (d[i][j] != 0) entries.push_back({gens[i].id, gens[j].id, d[i][j]});
  return MultifilteredComplex(options.n, PrimeField(options.prime), std::move(gens), entries);
}

}  // namespace hss
