#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hss {

/// A point or vector of Z^n.
using IVec = std::vector<std::int64_t>;

/// Small dense integer matrix, row-major.
class IMat {
 public:
  IMat() = default;
  IMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IMat identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static IMat from_columns(const std::vector<IVec>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IVec row(std::size_t i) const;
  IVec column(std::size_t j) const;
  IVec apply(const IVec& v) const;

  bool operator==(const IMat& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IMat operator*(const IMat& a, const IMat& b);

/// Exact determinant (fraction-free elimination).
std::int64_t determinant(const IMat& m);

IVec operator+(const IVec& a, const IVec& b);
IVec operator-(const IVec& a, const IVec& b);
IVec operator-(const IVec& a);
IVec scaled(const IVec& v, std::int64_t factor);
IVec unit_vector(std::size_t n, std::size_t i);
bool leq(const IVec& a, const IVec& b);

/// Row-style Hermite normal form of the lattice spanned by `generators`:
/// nonzero rows only, positive pivots strictly moving right, entries above
/// each pivot reduced into [0, pivot).
std::vector<IVec> hermite_normal_form(const std::vector<IVec>& generators, std::size_t n);

/// Canonical representative of v modulo the lattice with the given HNF basis.
IVec reduce_mod_lattice(const IVec& v, const std::vector<IVec>& hnf);

std::string to_string(const IVec& v);

}  // namespace hss
