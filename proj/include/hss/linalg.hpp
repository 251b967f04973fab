#pragma once

// Exact dense linear algebra over a prime field: reduced echelon forms,
// canonical subspaces, and subquotients with their induced maps.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hss/field.hpp"

namespace hss {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of field residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void append_row(std::span<const Scalar> values);
  void truncate_rows(std::size_t rows);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;
  bool is_zero() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Bring `m` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref_in_place(Matrix& m, const PrimeField& field);

std::size_t rank(Matrix m, const PrimeField& field);

/// Ordinary product a*b.
Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& field);

/// A linear map F^src -> F^dst stored by the images of the source basis
/// vectors (row i is the image of e_i).
class LinearMap {
 public:
  LinearMap(PrimeField field, Matrix images) : field_(field), images_(std::move(images)) {}

  static LinearMap identity(PrimeField field, std::size_t n);
  static LinearMap zero(PrimeField field, std::size_t src, std::size_t dst);

  std::size_t src_dim() const noexcept { return images_.rows(); }
  std::size_t dst_dim() const noexcept { return images_.cols(); }
  const PrimeField& field() const noexcept { return field_; }
  const Matrix& images() const noexcept { return images_; }

  Vector apply(std::span<const Scalar> v) const;
  /// this ∘ inner
  LinearMap after(const LinearMap& inner) const;

 private:
  PrimeField field_;
  Matrix images_;
};

/// A subspace of F^ambient held in canonical reduced echelon form, so that
/// two subspaces are equal exactly when their representations are.
class Subspace {
 public:
  static Subspace zero(PrimeField field, std::size_t ambient);
  static Subspace full(PrimeField field, std::size_t ambient);
  /// Span of the unit vectors e_i with mask[i] set.
  static Subspace coordinate(PrimeField field, const std::vector<bool>& mask);
  /// Span of arbitrary (possibly dependent) rows.
  static Subspace span(PrimeField field, Matrix rows);
  static Subspace span(PrimeField field, std::size_t ambient, const std::vector<Vector>& rows);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const PrimeField& field() const noexcept { return field_; }

  /// Residue of v after clearing every pivot coordinate with basis rows.
  Vector reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && field_ == other.field_ && basis_ == other.basis_;
  }

 private:
  Subspace(PrimeField field, std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : field_(field), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  PrimeField field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace image(const LinearMap& f, const Subspace& s);
/// { x : f(x) in s }
Subspace preimage(const LinearMap& f, const Subspace& s);
Subspace kernel(const LinearMap& f);

/// numerator / denominator, both subspaces of the same ambient space.
class Subquotient {
 public:
  Subquotient(Subspace numerator, Subspace denominator);

  const Subspace& numerator() const noexcept { return numerator_; }
  const Subspace& denominator() const noexcept { return denominator_; }
  std::size_t dim() const noexcept { return quotient_basis_.rows(); }

  /// Canonical quotient basis: the reduced echelon form of the numerator's
  /// residues modulo the denominator. Every row lies in the numerator.
  const Matrix& quotient_basis() const noexcept { return quotient_basis_; }
  const std::vector<std::size_t>& quotient_pivots() const noexcept { return quotient_pivots_; }

  /// Coordinates of v in the quotient basis, or nullopt when v is not in the numerator.
  std::optional<Vector> coords(std::span<const Scalar> v) const;

  /// Ambient vector sum_i c_i * quotient_basis[i].
  Vector lift(std::span<const Scalar> coords) const;

  /// Span of lifted coordinate vectors plus the denominator.
  Subspace lift_subspace(const std::vector<Vector>& coord_vectors) const;

  bool operator==(const Subquotient& other) const {
    return numerator_ == other.numerator_ && denominator_ == other.denominator_;
  }

 private:
  Subspace numerator_;
  Subspace denominator_;
  Matrix quotient_basis_;
  std::vector<std::size_t> quotient_pivots_;
};

/// Matrix (dst.dim x src.dim, column j = image of source basis vector j) of the
/// map induced by f. Throws IllDefinedMap unless f carries the numerator into
/// the target numerator and the denominator into the target denominator.
Matrix induced_map(const LinearMap& f, const Subquotient& src, const Subquotient& dst);

/// Basis (as column-coordinate vectors) of the kernel of a matrix acting on columns.
std::vector<Vector> matrix_kernel(const Matrix& m, const PrimeField& field);

}  // namespace hss
