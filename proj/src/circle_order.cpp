#include "rveer/circle_order.hpp"

#include <algorithm>

namespace rveer {

BoundaryPoint BoundaryPoint::at_corner(Word path, Letter corner, int slot) {
  BoundaryPoint p;
  p.prefix = std::move(path);
  p.corner = corner;
  p.slot = slot;
  return p;
}

BoundaryPoint BoundaryPoint::ray(std::span<const Letter> start, std::span<const Letter> cyclic) {
  // Cancel the tail of `start` against the periodic word cyclic^infinity.
  std::size_t k = 0;
  const std::size_t n = cyclic.size();
  while (k < start.size() && start[start.size() - 1 - k] == -cyclic[k % n]) ++k;
  BoundaryPoint p;
  p.prefix.assign(start.begin(), start.end() - static_cast<std::ptrdiff_t>(k));
  p.period = rotate(cyclic, k % n);
  return p;
}

// Tokens encode the counterclockwise position around a tree vertex, measured
// from the reference half-edge (the direction back to the root, or the base
// corner's half-edge at the root). Corner f holds tokens 4f+slot; the f-th
// half-edge after the reference has token 4f-2, so it lies between corners
// f-1 and f.
int CircleOrder::letter_token(Letter x, Letter reference) const {
  const int m = surface_->half_edge_count();
  int r = ((surface_->position(x) - surface_->position(reference)) % m + m) % m;
  if (r == 0) r = m;
  return 4 * r - 2;
}

int CircleOrder::corner_token(Letter corner, int slot, Letter reference) const {
  const int m = surface_->half_edge_count();
  if (m == 0) return slot;
  const int f = ((surface_->position(corner) - surface_->position(reference)) % m + m) % m;
  return 4 * f + slot;
}

int CircleOrder::compare(const BoundaryPoint& p, const BoundaryPoint& q, std::size_t i) const {
  const bool both_ends = p.is_end() && q.is_end();
  const std::size_t limit =
      both_ends ? std::max(p.prefix.size(), q.prefix.size()) + p.period.size() + q.period.size() + 1 : 0;
  while (true) {
    const bool hp = p.has_letter(i);
    const bool hq = q.has_letter(i);
    if (hp && hq && p.letter(i) == q.letter(i)) {
      ++i;
      if (both_ends && i > limit) return 0;
      continue;
    }
    const Letter reference = i == 0 ? base_ : -p.letter(i - 1);
    const int tp = hp ? letter_token(p.letter(i), reference) : corner_token(p.corner, p.slot, reference);
    const int tq = hq ? letter_token(q.letter(i), reference) : corner_token(q.corner, q.slot, reference);
    return tp < tq ? -1 : (tp > tq ? 1 : 0);
  }
}

}  // namespace rveer
