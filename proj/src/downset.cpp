#include "hss/downset.hpp"

#include <algorithm>
#include <deque>

#include "hss/error.hpp"

namespace hss {

Box::Box(IVec low, IVec high) : lo(std::move(low)), hi(std::move(high)) {
  if (lo.size() != hi.size()) throw DimensionMismatch("box corners of different dimension");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw ValidationError("box with lo > hi in coordinate " + std::to_string(i + 1));
}

Box Box::hull(const std::vector<IVec>& points, std::size_t n) {
  if (points.empty()) return Box(IVec(n, 0), IVec(n, 0));
  IVec lo = points.front();
  IVec hi = points.front();
  for (const auto& x : points) {
    if (x.size() != n) throw DimensionMismatch("point of wrong dimension in box hull");
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  }
  return Box(lo, hi);
}

std::size_t Box::size() const {
  std::size_t s = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) s *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  return s;
}

bool Box::contains(const IVec& x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

std::size_t Box::index(const IVec& x) const {
  if (!contains(x)) throw BoxTooSmall("point " + to_string(x) + " outside box");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < lo.size(); ++i)
    idx = idx * static_cast<std::size_t>(hi[i] - lo[i] + 1) + static_cast<std::size_t>(x[i] - lo[i]);
  return idx;
}

IVec Box::point(std::size_t index) const {
  IVec x(lo.size());
  for (std::size_t i = lo.size(); i-- > 0;) {
    auto extent = static_cast<std::size_t>(hi[i] - lo[i] + 1);
    x[i] = lo[i] + static_cast<std::int64_t>(index % extent);
    index /= extent;
  }
  return x;
}

Box Box::inflated(std::int64_t margin) const {
  IVec l = lo, h = hi;
  for (std::size_t i = 0; i < l.size(); ++i) {
    l[i] -= margin;
    h[i] += margin;
  }
  return Box(l, h);
}

Box Box::translated(const IVec& v) const { return Box(lo + v, hi + v); }

Box Box::joined(const Box& other) const {
  return hull({lo, hi, other.lo, other.hi}, lo.size());
}

// ---------------------------------------------------------------------------

Downset::Downset(Box box, std::vector<bool> members, bool below_rule)
    : box_(std::move(box)), members_(std::move(members)), below_rule_(below_rule) {
  if (members_.size() != box_.size()) throw DimensionMismatch("downset membership does not match its box");
}

Downset Downset::empty(const Box& box) { return Downset(box, std::vector<bool>(box.size(), false), false); }

Downset Downset::everything(const Box& box) { return Downset(box, std::vector<bool>(box.size(), true), true); }

bool Downset::contains(const IVec& x) const { return members_[box_.index(x)]; }

std::size_t Downset::count() const { return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true)); }

std::vector<IVec> Downset::points() const {
  std::vector<IVec> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i]) out.push_back(box_.point(i));
  return out;
}

bool Downset::is_downward_closed() const {
  bool any = false;
  for (std::size_t idx = 0; idx < members_.size(); ++idx) {
    if (!members_[idx]) continue;
    any = true;
    IVec x = box_.point(idx);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == box_.lo[k]) continue;
      --x[k];
      bool below = members_[box_.index(x)];
      ++x[k];
      if (!below) return false;
    }
  }
  return !any || below_rule_;
}

void Downset::require_same_box(const Downset& other) const {
  if (!(box_ == other.box_)) throw DimensionMismatch("downsets over different boxes");
}

bool Downset::subset_of(const Downset& other) const {
  require_same_box(other);
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] && !other.members_[i]) return false;
  return !below_rule_ || other.below_rule_;
}

Downset Downset::translated(const IVec& v) const { return Downset(box_.translated(v), members_, below_rule_); }

Downset Downset::unite(const Downset& other) const {
  require_same_box(other);
  std::vector<bool> m(members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = members_[i] || other.members_[i];
  return Downset(box_, std::move(m), below_rule_ || other.below_rule_);
}

Downset Downset::meet(const Downset& other) const {
  require_same_box(other);
  std::vector<bool> m(members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = members_[i] && other.members_[i];
  return Downset(box_, std::move(m), below_rule_ && other.below_rule_);
}

// ---------------------------------------------------------------------------

LexRule::LexRule(IMat t, SlotPermutation slots, IVec shift, std::vector<Bound> threshold, bool strict)
    : t_(std::move(t)), slots_(std::move(slots)), shift_(std::move(shift)), threshold_(std::move(threshold)),
      strict_(strict) {
  const std::size_t n = slots_.size();
  if (t_.rows() != n || t_.cols() != n || shift_.size() != n || threshold_.size() != n) {
    throw DimensionMismatch("lexicographic rule with inconsistent dimensions");
  }
  coord_at_slot_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto s = static_cast<std::size_t>(slots_[i]);
    if (s >= n || coord_at_slot_[s] != n) throw ValidationError("slot assignment is not a permutation");
    coord_at_slot_[s] = i;
  }
}

bool LexRule::contains(const IVec& x) const {
  if (x.size() != slots_.size()) throw DimensionMismatch("point dimension does not match rule");
  return compare(t_.apply(x - shift_));
}

bool LexRule::compare(const IVec& y) const {
  for (std::size_t s = 0; s < threshold_.size(); ++s) {
    const Bound& bound = threshold_[s];
    if (bound.kind == Bound::Kind::PlusInfinity) return true;
    if (bound.kind == Bound::Kind::MinusInfinity) return false;
    auto v = y[coord_at_slot_[s]];
    if (v < bound.value) return true;
    if (v > bound.value) return false;
  }
  return !strict_;
}

bool LexRule::nonempty() const { return threshold_.front().kind != Bound::Kind::MinusInfinity; }

Downset LexRule::materialize(const Box& box) const {
  const std::size_t n = slots_.size();
  if (box.dim() != n) throw DimensionMismatch("box dimension does not match rule");
  std::vector<bool> members(box.size());
  if (members.empty()) return Downset(box, std::move(members), nonempty());
  // Walk the box in index order (last coordinate fastest), updating y = T(x - shift)
  // by one column of T per step.
  IVec x = box.lo;
  IVec y = t_.apply(x - shift_);
  for (std::size_t i = 0;; ++i) {
    members[i] = compare(y);
    if (i + 1 == members.size()) break;
    std::size_t c = n;
    while (c-- > 0) {
      if (x[c] < box.hi[c]) {
        ++x[c];
        for (std::size_t r = 0; r < n; ++r) y[r] += t_.at(r, c);
        break;
      }
      const auto span = x[c] - box.lo[c];
      x[c] = box.lo[c];
      for (std::size_t r = 0; r < n; ++r) y[r] -= span * t_.at(r, c);
    }
  }
  return Downset(box, std::move(members), nonempty());
}

LexRule LexRule::translated(const IVec& v) const {
  return LexRule(t_, slots_, shift_ + v, threshold_, strict_);
}

Downset lex_downset(const IVec& point, const IMat& t, const SlotPermutation& slots, const Box& box, bool strict) {
  if (t.rows() != t.cols() || determinant(t) != 1) {
    throw ValidationError("lex_downset needs a unimodular matrix");
  }
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (t.at(i, j) < 0) throw ValidationError("lex_downset needs a nonnegative matrix");
  std::vector<Bound> zero(point.size(), Bound::finite(0));
  return LexRule(t, slots, point, zero, strict).materialize(box);
}

std::set<IVec> comp0(const std::set<IVec>& cells) {
  std::set<IVec> seen;
  if (cells.empty()) return seen;
  IVec origin(cells.begin()->size(), 0);
  if (!cells.count(origin)) return seen;
  std::deque<IVec> queue{origin};
  seen.insert(origin);
  while (!queue.empty()) {
    IVec x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (std::int64_t step : {-1, 1}) {
        IVec y = x;
        y[k] += step;
        if (cells.count(y) && seen.insert(y).second) queue.push_back(y);
      }
    }
  }
  return seen;
}

bool DownsetQuad::is_ordered() const { return z.subset_of(q) && q.subset_of(p) && p.subset_of(b); }

DownsetQuad DownsetQuad::translated(const IVec& v) const {
  return {b.translated(v), p.translated(v), q.translated(v), z.translated(v)};
}

// ---------------------------------------------------------------------------

SlotPermutation frame_slots(const Word& w, int j) {
  auto sets = saturated_sets(w);
  SlotPermutation slots(static_cast<std::size_t>(w.n()));
  int next = 0;
  for (int i : sets.unsaturated)
    if (i != j) slots[static_cast<std::size_t>(i - 1)] = next++;
  slots[static_cast<std::size_t>(j - 1)] = next++;
  for (int i : sets.saturated) slots[static_cast<std::size_t>(i - 1)] = next++;
  return slots;
}

LexFrame::LexFrame(const Word& w, int j, IVec base)
    : j_(j), n_(static_cast<std::size_t>(w.n())), base_(std::move(base)) {
  if (j < 1 || j > w.n()) throw ValidationError("direction index out of range");
  require_admissible(w.then(Letter::finite(j)));
  if (base_.size() != n_) throw DimensionMismatch("base point of wrong dimension");
  k_ = saturated_sets(w).saturated.size();
  t_ = t_matrix(w);
  slots_ = frame_slots(w, j);
  auto data = differential_data(w);
  a_ = data.a[static_cast<std::size_t>(j - 1)];
  delta_ = data.delta[static_cast<std::size_t>(j - 1)];
}

LexRule LexFrame::rule(const IVec& shift, std::size_t zero_slots, Bound tail) const {
  std::vector<Bound> threshold(n_, tail);
  for (std::size_t s = 0; s < zero_slots; ++s) threshold[s] = Bound::finite(0);
  // With no saturated slots the tail is empty; a -inf tail then means strictness.
  const bool strict = tail.kind == Bound::Kind::MinusInfinity;
  return LexRule(t_, slots_, shift, std::move(threshold), strict);
}

LexRule LexFrame::p() const { return rule(base_, n_ - k_, Bound::plus_infinity()); }
LexRule LexFrame::q() const { return rule(base_, n_ - k_, Bound::minus_infinity()); }
LexRule LexFrame::b() const { return rule(base_ + a_, n_ - k_, Bound::minus_infinity()); }
LexRule LexFrame::z() const { return rule(base_ - a_, n_ - k_, Bound::plus_infinity()); }
LexRule LexFrame::b_star() const { return rule(base_ + a_, n_ - k_, Bound::plus_infinity()); }
LexRule LexFrame::z_star() const { return rule(base_ - a_, n_ - k_, Bound::minus_infinity()); }

LexRule LexFrame::b_iter(std::int64_t i) const {
  return rule(base_ + a_ + scaled(delta_, i), n_ - k_, Bound::minus_infinity());
}
LexRule LexFrame::z_iter(std::int64_t i) const {
  return rule(base_ - a_ - scaled(delta_, i), n_ - k_, Bound::plus_infinity());
}
LexRule LexFrame::b_limit() const { return rule(base_ + a_, n_ - k_ - 1, Bound::plus_infinity()); }
LexRule LexFrame::z_limit() const { return rule(base_ - a_, n_ - k_ - 1, Bound::minus_infinity()); }

LexRule LexFrame::p_shift(std::int64_t i) const {
  return rule(base_ + scaled(delta_, i), n_ - k_, Bound::plus_infinity());
}
LexRule LexFrame::p_upper_limit() const { return rule(base_, n_ - k_ - 1, Bound::plus_infinity()); }
LexRule LexFrame::p_lower_limit() const { return rule(base_, n_ - k_ - 1, Bound::minus_infinity()); }

std::optional<std::int64_t> LexFrame::extension_index(const IVec& x) const {
  IVec y = t_.apply(x - base_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (static_cast<std::size_t>(slots_[i]) + 1 < n_ - k_ && y[i] != 0) return std::nullopt;
  }
  return y[static_cast<std::size_t>(j_ - 1)];
}

namespace {

void require_point_in_box(const IVec& point, const Box& box) {
  if (!box.contains(point)) {
    throw BoxTooSmall("box [" + to_string(box.lo) + ", " + to_string(box.hi) + "] does not contain " +
                      to_string(point));
  }
}

DownsetQuad materialize(const LexRule& b, const LexRule& p, const LexRule& q, const LexRule& z, const Box& box) {
  return {b.materialize(box), p.materialize(box), q.materialize(box), z.materialize(box)};
}

}  // namespace

DownsetQuad representative_quad(const Word& w, int j, const IVec& point, const Box& box) {
  require_point_in_box(point, box);
  LexFrame f(w, j, point);
  return materialize(f.b(), f.p(), f.q(), f.z(), box);
}

StepQuads step_quads(const Word& w, int j, const IVec& point, const Box& box) {
  require_point_in_box(point, box);
  LexFrame f(w, j, point);
  return {materialize(f.b_star(), f.p(), f.q(), f.z_star(), box),
          materialize(f.b_limit(), f.p(), f.q(), f.z_limit(), box),
          materialize(f.b_limit(), f.p_upper_limit(), f.p_lower_limit(), f.z_limit(), box)};
}

DownsetQuad limit_quad(const Box& box) {
  return {Downset::everything(box), Downset::everything(box), Downset::empty(box), Downset::empty(box)};
}

}  // namespace hss
