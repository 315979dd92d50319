#pragma once

// Shared machinery for lifts of closed curves to the universal cover.

#include <span>

#include "rveer/circle_order.hpp"
#include "rveer/word.hpp"

namespace rveer::detail {

/// A lift of a closed curve through vertex `vertex` of a tree path:
/// the axis path[0:vertex] * axis(rotation), with ends `plus` and `minus`.
struct AxisLift {
  std::size_t vertex;
  Word rotation;
  BoundaryPoint plus;
  BoundaryPoint minus;
};

/// Calls `f(const AxisLift&)` for every lift of `curve` meeting the tree path
/// spelled by `path`, exactly once per lift, at the first path vertex it
/// visits. `arrival(m)` is the letter read when the path reaches vertex m
/// (0 when the path starts there at a corner). `vertices` is the number of
/// path vertices to scan (one period for closed paths).
template <class Arrival, class F>
void for_each_axis_lift(std::span<const Letter> path, std::size_t vertices, Arrival arrival,
                        std::span<const Letter> curve, F&& f) {
  const std::size_t len = curve.size();
  Word prefix;
  for (std::size_t m = 0; m < vertices; ++m) {
    if (m > 0) prefix.push_back(path[m - 1]);
    const Letter prev = arrival(m);
    for (std::size_t r = 0; r < len; ++r) {
      const Letter first = curve[r];
      const Letter last = curve[(r + len - 1) % len];
      // The lift already passed through the previous path vertex.
      if (prev != 0 && (first == -prev || last == prev)) continue;
      Word rot = rotate(curve, r);
      BoundaryPoint plus = BoundaryPoint::ray(prefix, rot);
      BoundaryPoint minus = BoundaryPoint::ray(prefix, inverse(rot));
      f(AxisLift{m, std::move(rot), std::move(plus), std::move(minus)});
    }
  }
}

}  // namespace rveer::detail
