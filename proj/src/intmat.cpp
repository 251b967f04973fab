#include "hss/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "hss/error.hpp"

namespace hss {

IMat IMat::identity(std::size_t n) {
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::from_columns(const std::vector<IVec>& columns) {
  if (columns.empty()) return {};
  IMat m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = columns[j][i];
  return m;
}

IVec IMat::row(std::size_t i) const { return IVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

IVec IMat::column(std::size_t j) const {
  IVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IVec IMat::apply(const IVec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("integer matrix applied to vector of wrong length");
  IVec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

IMat operator*(const IMat& a, const IMat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("integer matrix product with incompatible shapes");
  IMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      auto c = a.at(i, l);
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += c * b.at(l, j);
    }
  return out;
}

std::int64_t determinant(const IMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IMat a = m;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  // Bareiss: every intermediate division is exact.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IVec operator+(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("adding vectors of different length");
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IVec operator-(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("subtracting vectors of different length");
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IVec operator-(const IVec& a) { return scaled(a, -1); }

IVec scaled(const IVec& v, std::int64_t factor) {
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

IVec unit_vector(std::size_t n, std::size_t i) {
  IVec e(n, 0);
  e.at(i) = 1;
  return e;
}

bool leq(const IVec& a, const IVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<IVec> hermite_normal_form(const std::vector<IVec>& generators, std::size_t n) {
  std::vector<IVec> rows;
  for (const auto& g : generators) {
    if (g.size() != n) throw DimensionMismatch("lattice generator of wrong length");
    rows.push_back(g);
  }
  std::vector<IVec> basis;
  std::size_t col = 0;
  while (!rows.empty() && col < n) {
    // Euclid on column `col` until at most one row is nonzero there.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      bool others = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == best || rows[i][col] == 0) continue;
        others = true;
        std::int64_t q = rows[i][col] / rows[best][col];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[best][j];
      }
      if (!others) {
        IVec pivot = rows[best];
        if (pivot[col] < 0) pivot = -pivot;
        basis.push_back(pivot);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IVec& r) {
                                return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
                              }),
               rows.end());
    ++col;
  }
  // Reduce entries above each pivot.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t pc = 0;
    while (basis[i][pc] == 0) ++pc;
    for (std::size_t r = 0; r < i; ++r) {
      std::int64_t q = floor_div(basis[r][pc], basis[i][pc]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) basis[r][j] -= q * basis[i][j];
    }
  }
  return basis;
}

IVec reduce_mod_lattice(const IVec& v, const std::vector<IVec>& hnf) {
  IVec out = v;
  for (const auto& row : hnf) {
    std::size_t pc = 0;
    while (row[pc] == 0) ++pc;
    std::int64_t q = floor_div(out[pc], row[pc]);
    if (q == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= q * row[j];
  }
  return out;
}

std::string to_string(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace hss
