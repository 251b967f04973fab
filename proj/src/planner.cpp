#include "hss/planner.hpp"

#include <limits>
#include <numeric>
#include <tuple>

#include "hss/error.hpp"

namespace hss {

namespace {

void require_query(const IVec& normal, int j1) {
  if (normal.size() != 2) throw ValidationError("normal vector must have two entries");
  if (j1 != 1 && j1 != 2) throw ValidationError("j1 must be 1 or 2");
  if (normal[0] < 0 || normal[1] < 0) throw ValidationError("normal vector must be nonnegative");
  if (std::gcd(normal[0], normal[1]) != 1) {
    throw ValidationError("normal vector " + to_string(normal) + " is not primitive");
  }
  if (normal == unit_vector(2, static_cast<std::size_t>(j1 - 1))) {
    throw ValidationError("normal vector e_" + std::to_string(j1) + " is impossible for j1 = " + std::to_string(j1));
  }
}

/// (g, s, t) with s*a + t*b = g = gcd(a, b).
std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  if (b == 0) return {a, 1, 0};
  auto [g, s, t] = extended_gcd(b, a % b);
  return {g, t, s - (a / b) * t};
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

/// Smallest nonnegative N' = (a, b) with det [N'; N] = a*y - b*x = 1 where N = (x, y).
IVec minimal_complement(const IVec& n) {
  const std::int64_t x = n[0], y = n[1];
  auto [g, s, t] = extended_gcd(y, x);
  if (g != 1) throw InternalError("normal vector is not primitive");
  std::int64_t a = s, b = -t;           // a*y - b*x = 1; family (a + m*x, b + m*y)
  std::int64_t m = std::numeric_limits<std::int64_t>::min();
  if (x > 0) m = std::max(m, ceil_div(-a, x));
  if (y > 0) m = std::max(m, ceil_div(-b, y));
  if (m == std::numeric_limits<std::int64_t>::min()) throw InternalError("degenerate normal vector");
  return {a + m * x, b + m * y};
}

}  // namespace

IVec normal_vector(const Word& w) {
  require_admissible(w);
  if (w.n() != 2) throw InadmissibleWord("normal vectors are defined for n = 2 only", 0);
  if (!is_final(w)) throw InadmissibleWord("word " + w.to_string() + " is not final", 0);
  const auto& letters = w.letters();
  std::size_t s = 0;
  while (s < letters.size() && letters[s].kind == Letter::Kind::Finite) ++s;
  // s points at j1^inf; then e, then j2^k, j2^inf, e.
  const int j1 = letters[s].index;
  const int j2 = 3 - j1;
  std::size_t i = s + 2;
  while (i < letters.size() && letters[i] == Letter::finite(j2)) ++i;
  if (i + 2 != letters.size() || letters[i] != Letter::saturate(j2)) {
    throw InadmissibleWord("word " + w.to_string() + " is not of the shape tau j1^inf e j2^k j2^inf e", 0);
  }
  return t_matrix(w).row(static_cast<std::size_t>(j2 - 1));
}

Plan plan_word(const IVec& normal, int j1, std::int64_t k) {
  require_query(normal, j1);
  if (k < 0) throw ValidationError("k must be nonnegative");
  Plan plan;
  plan.normal = normal;
  plan.j1 = j1;
  plan.j2 = 3 - j1;
  plan.k = k;

  // Put N in row j2 and N' in row j1 so that det M = 1.
  IVec complement;
  if (plan.j2 == 2) {
    complement = minimal_complement(normal);
  } else {
    const IVec swapped = minimal_complement({normal[1], normal[0]});
    complement = {swapped[1], swapped[0]};
  }
  complement = complement + scaled(normal, k);
  plan.complement = complement;

  std::vector<IVec> rows(2);
  rows[static_cast<std::size_t>(plan.j2 - 1)] = normal;
  rows[static_cast<std::size_t>(j1 - 1)] = complement;
  const IVec e1 = unit_vector(2, 0), e2 = unit_vector(2, 1);
  while (!(rows[0] == e1 && rows[1] == e2)) {
    if (leq(rows[1], rows[0])) {
      rows[0] = rows[0] - rows[1];
      plan.trace.push_back(1);
    } else if (leq(rows[0], rows[1])) {
      rows[1] = rows[1] - rows[0];
      plan.trace.push_back(2);
    } else {
      throw InternalError("row subtraction got stuck at " + to_string(rows[0]) + ", " + to_string(rows[1]));
    }
  }

  std::vector<Letter> letters;
  for (auto it = plan.trace.rbegin(); it != plan.trace.rend(); ++it) letters.push_back(Letter::finite(*it));
  plan.tau = Word(2, letters);
  letters.push_back(Letter::saturate(j1));
  letters.push_back(Letter::extend());
  letters.push_back(Letter::saturate(plan.j2));
  letters.push_back(Letter::extend());
  plan.omega = Word(2, letters);
  require_admissible(plan.omega);
  return plan;
}

ContinuedFraction continued_fraction(const IVec& normal) {
  if (normal.size() != 2 || normal[0] < 0 || normal[1] < 0 || std::gcd(normal[0], normal[1]) != 1) {
    throw ValidationError("continued fractions need a primitive nonnegative vector");
  }
  ContinuedFraction cf;
  std::int64_t x = normal[0], y = normal[1];
  if (x == 0) {
    cf.infinite = true;
    return cf;
  }
  while (x != 0) {
    cf.digits.push_back(y / x);
    std::int64_t r = y % x;
    y = x;
    x = r;
  }
  if (cf.digits.back() >= 1) {
    auto alt = cf.digits;
    alt.back() -= 1;
    alt.push_back(1);
    cf.alternate = std::move(alt);
  }
  return cf;
}

Word tau_from_digits(const std::vector<std::int64_t>& digits) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    for (std::int64_t r = 0; r < digits[i]; ++r) letters.push_back(Letter::finite(i % 2 == 0 ? 1 : 2));
  }
  return Word(2, std::move(letters));
}

Word tau_from_continued_fraction(const IVec& normal, int j1) {
  require_query(normal, j1);
  ContinuedFraction cf = continued_fraction(normal);
  if (cf.infinite) return Word(2);
  std::vector<Word> candidates{tau_from_digits(cf.digits)};
  if (cf.alternate) candidates.push_back(tau_from_digits(*cf.alternate));
  for (const auto& tau : candidates) {
    if (tau.empty() || tau.letters().back() != Letter::finite(j1)) return tau;
  }
  throw InternalError("no continued-fraction expansion fits j1 = " + std::to_string(j1));
}

IMat fibonacci_check(int k) {
  std::vector<Letter> letters;
  for (int i = 0; i < k; ++i) {
    letters.push_back(Letter::finite(1));
    letters.push_back(Letter::finite(2));
  }
  return t_matrix(Word(2, std::move(letters)));
}

IMat fibonacci_matrix(int k) {
  std::vector<std::int64_t> f{0, 1};
  while (f.size() < static_cast<std::size_t>(2 * k + 2)) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  auto at = [&](int i) { return f[static_cast<std::size_t>(i)]; };
  IMat m(2, 2);
  m.at(0, 0) = at(2 * k - 1);
  m.at(0, 1) = at(2 * k);
  m.at(1, 0) = at(2 * k);
  m.at(1, 1) = at(2 * k + 1);
  return m;
}

}  // namespace hss
