#pragma once

// Words over the alphabet {1..n, 1^inf..n^inf, e} and the integer data a word
// carries: differential directions, their increments, the zonotope B, the
// lattice V, the unimodular change of basis T and the corner u.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hss/intmat.hpp"

namespace hss {

struct Letter {
  enum class Kind : std::uint8_t { Finite, Saturate, Extend };

  Kind kind = Kind::Extend;
  int index = 0;  // 1-based; unused for Extend

  static Letter finite(int j) { return {Kind::Finite, j}; }
  static Letter saturate(int j) { return {Kind::Saturate, j}; }
  static Letter extend() { return {Kind::Extend, 0}; }

  bool operator==(const Letter&) const = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(int n, std::vector<Letter> letters = {});

  /// Tokenize a word string (digits, `^` suffix, `e`; dot-separated for n > 9).
  static Word parse(std::string_view text, int n);

  int n() const noexcept { return n_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word then(Letter letter) const;
  Word then(const Word& suffix) const;
  /// True when every letter is finite (the word lies in [n]^*).
  bool is_plain() const;

  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  int n_ = 1;
  std::vector<Letter> letters_;
};

/// Explanation of the first violated admissibility condition, or empty when admissible.
struct AdmissibilityVerdict {
  int condition = 0;  // 0 when admissible
  std::string message;
  explicit operator bool() const noexcept { return condition == 0; }
};

AdmissibilityVerdict check_admissible(const Word& w);
bool is_admissible(const Word& w);
/// Throws InadmissibleWord naming the violated condition.
void require_admissible(const Word& w);

bool is_final(const Word& w);

struct SaturatedSets {
  std::vector<int> saturated;    // X: j with j^inf e a subword
  std::vector<int> unsaturated;  // Y: the rest, ascending
};
SaturatedSets saturated_sets(const Word& w);

/// a^i (negated differential directions) and delta^i (their increments), i = 1..n,
/// stored at index i-1.
struct DifferentialData {
  std::vector<IVec> a;
  std::vector<IVec> delta;
};
DifferentialData differential_data(const Word& w);

/// Inverse of the column matrix (delta^1 ... delta^n); nonnegative, determinant 1.
IMat t_matrix(const Word& w);

/// The step matrix Delta^k_w = id + e_k * 1_{Y(w) minus k}^T (k 1-based).
IMat step_matrix(const Word& w, int k);

/// Corner of the transformed zonotope: u_eps = 0, u_{w*j} = e_j + Delta^j_w u_w.
/// For plain words and n >= 2 this is cross-checked against (T*1 - 1)/(n-1).
IVec u_vec(const Word& w);

/// HNF basis of V_w (empty for the trivial lattice).
std::vector<IVec> lattice(const Word& w);

/// B_w with saturate rays truncated to {0..truncation} and extension lines
/// to {-truncation..truncation}.
std::set<IVec> b_region(const Word& w, std::int64_t truncation = 0);

/// Rewrite every maximal run j^k j^inf to j^inf.
Word normalize(const Word& w);

}  // namespace hss
