#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "rveer/surface.hpp"
#include "rveer/word.hpp"

namespace rveer {

/// A point on the boundary circle of the universal cover: either a lifted
/// boundary point sitting in a corner of the tree vertex reached by `prefix`,
/// or an end at infinity `prefix * period^infinity` (period non-empty).
///
/// Points in one corner are ordered by `slot` along the boundary orientation;
/// arcs start in slot 0 and end in slot 1.
struct BoundaryPoint {
  Word prefix;
  Word period;
  Letter corner = 0;
  int slot = 0;

  static BoundaryPoint at_corner(Word path, Letter corner, int slot);
  /// The end of the ray start * cyclic^infinity. `cyclic` must be cyclically
  /// reduced and non-empty; any cancellation against `start` is performed.
  static BoundaryPoint ray(std::span<const Letter> start, std::span<const Letter> cyclic);

  bool is_end() const noexcept { return !period.empty(); }
  bool has_letter(std::size_t i) const noexcept { return is_end() || i < prefix.size(); }
  Letter letter(std::size_t i) const noexcept {
    return i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
  }
};

/// Linear order on the boundary circle of the universal cover obtained by
/// cutting the circle at a lifted basepoint and walking counterclockwise
/// (the induced boundary orientation). The cut point is the corner `base` at
/// the root vertex, slot 0; it precedes every other point.
///
/// Two points are compared at the first index where their tree paths diverge;
/// the ribbon order at that vertex decides.
class CircleOrder {
 public:
  CircleOrder(const Surface& surface, Letter base) : surface_(&surface), base_(base) {}

  /// <0, 0, >0. `shared` is a number of leading letters the caller knows to
  /// coincide; comparison starts there.
  int compare(const BoundaryPoint& p, const BoundaryPoint& q, std::size_t shared = 0) const;
  bool less(const BoundaryPoint& p, const BoundaryPoint& q, std::size_t shared = 0) const {
    return compare(p, q, shared) < 0;
  }

  Letter base() const noexcept { return base_; }
  const Surface& surface() const noexcept { return *surface_; }

 private:
  int letter_token(Letter x, Letter reference) const;
  int corner_token(Letter corner, int slot, Letter reference) const;

  const Surface* surface_;
  Letter base_;
};

}  // namespace rveer
