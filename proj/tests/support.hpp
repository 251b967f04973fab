#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "hss/complex.hpp"
#include "hss/linalg.hpp"

namespace hss::fixture {

struct Gen {
  std::string id;
  std::int64_t degree;
  IVec position;
};

inline MultifilteredComplex graded_complex(int n, std::uint32_t p, std::vector<Gen> gens,
                                           std::vector<DifferentialEntry> d = {}) {
  std::vector<Generator> out;
  for (auto& g : gens) out.push_back({g.id, g.degree, g.position});
  return MultifilteredComplex(n, PrimeField(p), std::move(out), d);
}

inline Vector vec(std::initializer_list<Scalar> v) { return Vector(v); }

inline Matrix matrix(std::size_t cols, std::initializer_list<std::initializer_list<Scalar>> rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(Vector(r));
  return m;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::uint32_t p,
                            double density = 0.5) {
  std::uniform_int_distribution<std::uint32_t> value(1, p - 1);
  std::bernoulli_distribution keep(density);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) m.at(i, j) = value(rng);
  return m;
}

}  // namespace hss::fixture
