#include "rveer/curves.hpp"

#include "lifts.hpp"
#include "rveer/circle_order.hpp"

namespace rveer {

CyclicWord::CyclicWord(std::span<const Letter> w) : letters_(least_rotation(cyclic_reduce(w))) {}

CyclicWord CyclicWord::reversed() const { return CyclicWord(inverse(letters_)); }

CyclicWord CyclicWord::unoriented() const {
  CyclicWord r = reversed();
  return lex_less(r.letters_, letters_) ? r : *this;
}

bool same_unoriented_curve(const CyclicWord& a, const CyclicWord& b) { return a.unoriented() == b.unoriented(); }

bool is_essential(const CyclicWord& curve) { return !curve.empty(); }

namespace {

// Counts lifts of v linking the axis of u, one per crossing of u with v.
// With v == u every crossing is seen twice.
int linked_lifts(const Surface& surface, const Word& u, const Word& v, bool stop_at_first) {
  const CircleOrder order(surface, surface.ribbon_order().front());
  BoundaryPoint lo = BoundaryPoint::ray({}, u);
  BoundaryPoint hi = BoundaryPoint::ray({}, inverse(u));
  if (order.less(hi, lo)) std::swap(lo, hi);
  const auto inside = [&](const BoundaryPoint& p) { return order.less(lo, p) && order.less(p, hi); };

  int count = 0;
  bool done = false;
  const std::size_t n = u.size();
  detail::for_each_axis_lift(
      u, n, [&](std::size_t m) { return u[(m + n - 1) % n]; }, v, [&](const detail::AxisLift& lift) {
        if (done) return;
        if (inside(lift.plus) != inside(lift.minus)) {
          ++count;
          if (stop_at_first) done = true;
        }
      });
  return count;
}

}  // namespace

bool is_simple(const CyclicWord& curve, const Surface& surface) {
  if (curve.empty()) return true;
  if (is_proper_power(curve.letters())) return false;
  return linked_lifts(surface, curve.letters(), curve.letters(), true) == 0;
}

int geometric_intersection(const CyclicWord& u, const CyclicWord& v, const Surface& surface) {
  if (!is_simple(u, surface) || !is_simple(v, surface)) {
    throw UnsupportedInput("geometric intersection is only supported for simple closed curves");
  }
  if (u.empty() || v.empty() || same_unoriented_curve(u, v)) return 0;
  return linked_lifts(surface, u.letters(), v.letters(), false);
}

}  // namespace rveer
