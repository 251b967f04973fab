#pragma once

// Downsets of Z^n represented extensionally inside a finite box, the
// sigma-lexicographic downset formulas, and the downset quadruples that
// realize the pages of a word.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hss/intmat.hpp"
#include "hss/word.hpp"

namespace hss {

struct Box {
  IVec lo;
  IVec hi;

  Box() = default;
  Box(IVec low, IVec high);

  /// Smallest box containing every point (a single origin point when empty).
  static Box hull(const std::vector<IVec>& points, std::size_t n);

  std::size_t dim() const noexcept { return lo.size(); }
  std::size_t size() const;
  bool contains(const IVec& x) const;
  std::size_t index(const IVec& x) const;
  IVec point(std::size_t index) const;
  Box inflated(std::int64_t margin) const;
  Box translated(const IVec& v) const;
  Box joined(const Box& other) const;

  bool operator==(const Box&) const = default;
};

class Downset {
 public:
  Downset() = default;
  /// `below_rule` records whether the downset has members below the box
  /// (equivalently: whether it is nonempty as a subset of Z^n).
  Downset(Box box, std::vector<bool> members, bool below_rule);

  static Downset empty(const Box& box);
  static Downset everything(const Box& box);

  const Box& box() const noexcept { return box_; }
  bool below_rule() const noexcept { return below_rule_; }
  /// Membership for a point of the box.
  bool contains(const IVec& x) const;
  std::size_t count() const;
  std::vector<IVec> points() const;

  bool is_downward_closed() const;
  bool subset_of(const Downset& other) const;
  Downset translated(const IVec& v) const;
  Downset unite(const Downset& other) const;
  Downset meet(const Downset& other) const;

  bool operator==(const Downset&) const = default;

 private:
  void require_same_box(const Downset& other) const;

  Box box_;
  std::vector<bool> members_;
  bool below_rule_ = false;
};

/// Coordinate permutation: slot[i] is the (0-based) lexicographic slot that
/// coordinate i is compared in; slot 0 is the most significant.
using SlotPermutation = std::vector<int>;

/// A threshold entry in Z or one of the two infinities.
struct Bound {
  enum class Kind : std::uint8_t { Finite, PlusInfinity, MinusInfinity };
  Kind kind = Kind::Finite;
  std::int64_t value = 0;

  static Bound finite(std::int64_t v) { return {Kind::Finite, v}; }
  static Bound plus_infinity() { return {Kind::PlusInfinity, 0}; }
  static Bound minus_infinity() { return {Kind::MinusInfinity, 0}; }
};

/// { x : slots(T (x - shift)) <=_lex threshold }, or < when strict.
class LexRule {
 public:
  LexRule(IMat t, SlotPermutation slots, IVec shift, std::vector<Bound> threshold, bool strict = false);

  bool contains(const IVec& x) const;
  bool nonempty() const;
  Downset materialize(const Box& box) const;
  LexRule translated(const IVec& v) const;

 private:
  bool compare(const IVec& transformed) const;

  IMat t_;
  SlotPermutation slots_;
  std::vector<std::size_t> coord_at_slot_;
  IVec shift_;
  std::vector<Bound> threshold_;
  bool strict_;
};

/// { x : T x <=_sigma T P } (or strictly below), clipped to the box.
Downset lex_downset(const IVec& point, const IMat& t, const SlotPermutation& slots, const Box& box,
                    bool strict);

/// Connected component of the origin in the unit-distance graph on `cells`.
std::set<IVec> comp0(const std::set<IVec>& cells);

/// (b, p, q, z) with z <= q <= p <= b.
struct DownsetQuad {
  Downset b, p, q, z;

  bool is_ordered() const;
  DownsetQuad translated(const IVec& v) const;
  bool operator==(const DownsetQuad&) const = default;
};

/// Lexicographic frame of a word w and a direction j (w*j admissible),
/// translated to a base point P. All representative downsets of the pages of
/// w, w*j, w*j^k, w*j^inf and w*j^inf e are expressed in it.
class LexFrame {
 public:
  LexFrame(const Word& w, int j, IVec base);

  const SlotPermutation& slots() const noexcept { return slots_; }
  const IMat& t() const noexcept { return t_; }
  const IVec& a() const noexcept { return a_; }
  const IVec& delta() const noexcept { return delta_; }
  const IVec& base() const noexcept { return base_; }
  int direction() const noexcept { return j_; }
  std::size_t saturated_count() const noexcept { return k_; }

  LexRule p() const;
  LexRule q() const;
  LexRule b() const;
  LexRule z() const;
  LexRule b_star() const;
  LexRule z_star() const;
  /// b + i*delta and z - i*delta.
  LexRule b_iter(std::int64_t i) const;
  LexRule z_iter(std::int64_t i) const;
  LexRule b_limit() const;
  LexRule z_limit() const;
  /// p + i*delta and the two limits of that family.
  LexRule p_shift(std::int64_t i) const;
  LexRule p_upper_limit() const;
  LexRule p_lower_limit() const;

  /// For x in the base slice (all slots before j's slot vanish in T(x - P)),
  /// the index i with x in p + i*delta but not in p + (i-1)*delta.
  std::optional<std::int64_t> extension_index(const IVec& x) const;

 private:
  LexRule rule(const IVec& shift, std::size_t zero_slots, Bound tail) const;

  int j_;
  std::size_t n_;
  std::size_t k_;
  IMat t_;
  SlotPermutation slots_;
  IVec a_;
  IVec delta_;
  IVec base_;
};

/// The deterministic slot permutation used for (w, j): unsaturated indices
/// other than j ascending, then j, then saturated indices ascending.
SlotPermutation frame_slots(const Word& w, int j);

DownsetQuad representative_quad(const Word& w, int j, const IVec& point, const Box& box);

struct StepQuads {
  DownsetQuad next;       // realizes S(P; w*j)
  DownsetQuad saturated;  // realizes S(P; w*j^inf)
  DownsetQuad extended;   // realizes S(P; w*j^inf e)
};
StepQuads step_quads(const Word& w, int j, const IVec& point, const Box& box);

/// (everything, everything, empty, empty): the limit term.
DownsetQuad limit_quad(const Box& box);

}  // namespace hss
