#pragma once

// Planning n = 2 pages: the normal vector of a final word, recovery of the
// word from (N, j1) by row subtraction, and the continued-fraction view.

#include <cstdint>
#include <optional>
#include <vector>

#include "hss/intmat.hpp"
#include "hss/word.hpp"

namespace hss {

/// Row j2 of T_w for a final word of shape tau * j1^inf e * j2^k * j2^inf e.
IVec normal_vector(const Word& w);

struct Plan {
  IVec normal;
  int j1 = 1;
  int j2 = 2;
  std::int64_t k = 0;
  IVec complement;          // N' in the starting matrix
  std::vector<int> trace;   // q_1, q_2, ...: the row modified at each subtraction
  Word tau;
  Word omega;
};

/// Throws ValidationError for a non-primitive or negative N, or N = e_{j1}.
Plan plan_word(const IVec& normal, int j1, std::int64_t k = 0);

struct ContinuedFraction {
  /// Slope x = 0: the expansion is the single symbol infinity.
  bool infinite = false;
  /// Euclidean expansion of y/x.
  std::vector<std::int64_t> digits;
  /// The other expansion (last digit split off as ..., a - 1, 1), when one exists.
  std::optional<std::vector<std::int64_t>> alternate;
};

ContinuedFraction continued_fraction(const IVec& normal);

/// 1^{a0} 2^{a1} 1^{a2} ...
Word tau_from_digits(const std::vector<std::int64_t>& digits);

/// The tau that the continued-fraction description assigns to (N, j1).
Word tau_from_continued_fraction(const IVec& normal, int j1);

/// T_{(12)^k}.
IMat fibonacci_check(int k);
/// [[f_{2k-1}, f_{2k}], [f_{2k}, f_{2k+1}]].
IMat fibonacci_matrix(int k);

}  // namespace hss
