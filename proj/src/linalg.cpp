#include "hss/linalg.hpp"

#include <algorithm>
#include <string>

#include "hss/error.hpp"
#include "hss/kernels.hpp"

namespace hss {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) {
    throw DimensionMismatch("row of length " + std::to_string(values.size()) +
                            " appended to matrix with " + std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::truncate_rows(std::size_t rows) {
  if (rows >= rows_) return;
  rows_ = rows;
  data_.resize(rows_ * cols_);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                   data_.begin() + b * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

std::vector<std::size_t> rref_in_place(Matrix& m, const PrimeField& field) {
  const auto& k = kernels::active();
  const std::uint32_t p = field.characteristic();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.rows(); ++c) {
    std::size_t r = rank;
    while (r < m.rows() && m.at(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(rank, r);
    // The pivot row is zero left of c, so all row operations start at c.
    auto pivot_row = m.row(rank).subspan(c);
    if (pivot_row[0] != 1) k.scale(pivot_row.data(), field.inv(pivot_row[0]), p, pivot_row.size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      Scalar coeff = m.at(i, c);
      if (coeff == 0) continue;
      auto target = m.row(i).subspan(c);
      k.axpy(target.data(), pivot_row.data(), p - coeff, p, target.size());
    }
    pivots.push_back(c);
    ++rank;
  }
  m.truncate_rows(rank);
  return pivots;
}

std::size_t rank(Matrix m, const PrimeField& field) { return rref_in_place(m, field).size(); }

Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& field) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product with incompatible shapes");
  const auto& k = kernels::active();
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      Scalar c = a.at(i, l);
      if (c != 0) k.axpy(dst.data(), b.row(l).data(), c, field.characteristic(), dst.size());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

LinearMap LinearMap::identity(PrimeField field, std::size_t n) {
  return LinearMap(field, Matrix::identity(n));
}

LinearMap LinearMap::zero(PrimeField field, std::size_t src, std::size_t dst) {
  return LinearMap(field, Matrix(src, dst));
}

Vector LinearMap::apply(std::span<const Scalar> v) const {
  if (v.size() != src_dim()) throw DimensionMismatch("vector does not match map source");
  const auto& k = kernels::active();
  Vector out(dst_dim(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) k.axpy(out.data(), images_.row(i).data(), v[i], field_.characteristic(), out.size());
  }
  return out;
}

LinearMap LinearMap::after(const LinearMap& inner) const {
  if (inner.dst_dim() != src_dim()) throw DimensionMismatch("composition of incompatible maps");
  return LinearMap(field_, multiply(inner.images(), images_, field_));
}

// ---------------------------------------------------------------------------

Subspace Subspace::zero(PrimeField field, std::size_t ambient) {
  return Subspace(field, ambient, Matrix(0, ambient), {});
}

Subspace Subspace::full(PrimeField field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(field, ambient, Matrix::identity(ambient), std::move(pivots));
}

Subspace Subspace::coordinate(PrimeField field, const std::vector<bool>& mask) {
  Matrix basis(0, mask.size());
  std::vector<std::size_t> pivots;
  Vector unit(mask.size(), 0);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    unit[i] = 1;
    basis.append_row(unit);
    unit[i] = 0;
    pivots.push_back(i);
  }
  return Subspace(field, mask.size(), std::move(basis), std::move(pivots));
}

Subspace Subspace::span(PrimeField field, Matrix rows) {
  std::size_t ambient = rows.cols();
  auto pivots = rref_in_place(rows, field);
  return Subspace(field, ambient, std::move(rows), std::move(pivots));
}

Subspace Subspace::span(PrimeField field, std::size_t ambient, const std::vector<Vector>& rows) {
  Matrix m(0, ambient);
  for (const auto& r : rows) m.append_row(r);
  return span(field, std::move(m));
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector does not match subspace ambient");
  const auto& k = kernels::active();
  const std::uint32_t p = field_.characteristic();
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c == 0) continue;
    std::size_t start = pivots_[i];
    k.axpy(r.data() + start, basis_.row(i).data() + start, p - c, p, ambient_ - start);
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Scalar s) { return s == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspaces of dimension " + std::to_string(a.ambient_dim()) + " and " +
                            std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  Matrix m(0, a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m.append_row(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) m.append_row(b.basis().row(i));
  return Subspace::span(a.field(), std::move(m));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.field(), n);
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  // Zassenhaus: rows [a | a] and [b | 0]; echelon rows with a zero left half
  // carry a basis of the intersection in their right half.
  Matrix m(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto src = a.basis().row(i);
    std::copy(src.begin(), src.end(), m.row(i).begin());
    std::copy(src.begin(), src.end(), m.row(i).begin() + n);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    auto src = b.basis().row(i);
    std::copy(src.begin(), src.end(), m.row(a.dim() + i).begin());
  }
  auto pivots = rref_in_place(m, a.field());
  Matrix out(0, n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < n) continue;
    out.append_row(m.row(i).subspan(n));
  }
  return Subspace::span(a.field(), std::move(out));
}

Subspace image(const LinearMap& f, const Subspace& s) {
  if (s.ambient_dim() != f.src_dim()) throw DimensionMismatch("image: subspace outside map source");
  Matrix m(0, f.dst_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) m.append_row(f.apply(s.basis().row(i)));
  return Subspace::span(f.field(), std::move(m));
}

Subspace preimage(const LinearMap& f, const Subspace& s) {
  if (s.ambient_dim() != f.dst_dim()) throw DimensionMismatch("preimage: subspace outside map target");
  const std::size_t src = f.src_dim();
  const std::size_t dst = f.dst_dim();
  // x -> f(x) mod s is linear; its left kernel is read off [R | I].
  Matrix m(src, dst + src);
  for (std::size_t i = 0; i < src; ++i) {
    auto r = s.reduce(f.images().row(i));
    std::copy(r.begin(), r.end(), m.row(i).begin());
    m.at(i, dst + i) = 1;
  }
  auto pivots = rref_in_place(m, f.field());
  Matrix out(0, src);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < dst) continue;
    out.append_row(m.row(i).subspan(dst));
  }
  return Subspace::span(f.field(), std::move(out));
}

Subspace kernel(const LinearMap& f) { return preimage(f, Subspace::zero(f.field(), f.dst_dim())); }

// ---------------------------------------------------------------------------

Subquotient::Subquotient(Subspace numerator, Subspace denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (!numerator_.contains(denominator_)) {
    throw InternalError("subquotient denominator is not contained in its numerator");
  }
  Matrix residues(0, numerator_.ambient_dim());
  for (std::size_t i = 0; i < numerator_.dim(); ++i) {
    residues.append_row(denominator_.reduce(numerator_.basis().row(i)));
  }
  quotient_pivots_ = rref_in_place(residues, numerator_.field());
  quotient_basis_ = std::move(residues);
  if (quotient_basis_.rows() + denominator_.dim() != numerator_.dim()) {
    throw InternalError("quotient basis has the wrong size");
  }
}

std::optional<Vector> Subquotient::coords(std::span<const Scalar> v) const {
  const auto& field = numerator_.field();
  auto r = denominator_.reduce(v);
  Vector c(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) c[i] = r[quotient_pivots_[i]];
  // Residues vanish on the denominator pivots, so r must equal sum c_i q_i exactly.
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (c[i] != 0) k.axpy(r.data(), quotient_basis_.row(i).data(), field.neg(c[i]),
                          field.characteristic(), r.size());
  }
  if (!std::all_of(r.begin(), r.end(), [](Scalar s) { return s == 0; })) return std::nullopt;
  return c;
}

Vector Subquotient::lift(std::span<const Scalar> coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("coordinate vector does not match subquotient");
  const auto& k = kernels::active();
  Vector v(numerator_.ambient_dim(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) k.axpy(v.data(), quotient_basis_.row(i).data(), coords[i],
                               numerator_.field().characteristic(), v.size());
  }
  return v;
}

Subspace Subquotient::lift_subspace(const std::vector<Vector>& coord_vectors) const {
  Matrix m(0, numerator_.ambient_dim());
  for (std::size_t i = 0; i < denominator_.dim(); ++i) m.append_row(denominator_.basis().row(i));
  for (const auto& c : coord_vectors) m.append_row(lift(c));
  return Subspace::span(numerator_.field(), std::move(m));
}

Matrix induced_map(const LinearMap& f, const Subquotient& src, const Subquotient& dst) {
  if (f.src_dim() != src.numerator().ambient_dim() || f.dst_dim() != dst.numerator().ambient_dim()) {
    throw DimensionMismatch("induced_map: map does not fit the subquotients");
  }
  for (std::size_t i = 0; i < src.denominator().dim(); ++i) {
    if (!dst.denominator().contains(f.apply(src.denominator().basis().row(i)))) {
      throw IllDefinedMap("induced_map: denominator is not carried into the target denominator");
    }
  }
  Matrix out(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    auto c = dst.coords(f.apply(src.quotient_basis().row(j)));
    if (!c) throw IllDefinedMap("induced_map: numerator is not carried into the target numerator");
    for (std::size_t i = 0; i < dst.dim(); ++i) out.at(i, j) = (*c)[i];
  }
  return out;
}

std::vector<Vector> matrix_kernel(const Matrix& m, const PrimeField& field) {
  // Kernel of the column action equals the left kernel of the transpose.
  LinearMap f(field, m.transpose());
  auto k = kernel(f);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    auto r = k.basis().row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

}  // namespace hss
