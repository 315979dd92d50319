#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "rveer/circle_order.hpp"
#include "rveer/curves.hpp"
#include "rveer/surface.hpp"
#include "rveer/word.hpp"

namespace rveer {

/// A properly embedded arc up to isotopy fixing both endpoints. It starts at
/// the basepoint of boundary component `start` and ends at the basepoint of
/// `target`; when start == target the far end sits just after the basepoint in
/// the boundary orientation. `word` is the reduced edge path between the two
/// basepoint corners, which determines the class completely.
struct Arc {
  int start = 1;
  int target = 1;
  Word word;

  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class Side { Right, Left, Equal };

std::string to_string(Side side);

/// Builds an arc after validating components and reducing the word.
Arc make_arc(const Surface& surface, int start, int target, std::span<const Letter> word);

BoundaryPoint start_point(const Surface& surface, const Arc& arc);
BoundaryPoint end_point(const Surface& surface, const Arc& arc);
/// The circle order cut at the lift of the arc's starting basepoint.
CircleOrder order_at_start(const Surface& surface, const Arc& arc);

/// Shortest representative of the arc modulo sliding the far endpoint around
/// its boundary component (word * d_target^k), ties broken lexicographically.
/// This forgets the endpoint winding, so it is a coarser class than Arc.
Arc canonicalize_arc(const Arc& arc, const Surface& surface);

/// Embedded representative exists: no two lifts of the arc have interleaved
/// endpoints on the boundary circle.
bool is_simple(const Arc& arc, const Surface& surface);

/// Local form of the same test, read off shared segments of two lifts of the
/// path. With `end` unset only crossings already forced by the prefix are
/// reported, which makes it usable for pruning a search; with `end` set it is
/// a complete simplicity test.
bool has_forced_crossing(const Surface& surface, Letter start_corner, std::span<const Letter> path,
                         std::optional<Letter> end_corner);

/// Where `beta` leaves the common basepoint relative to `alpha`: Right when
/// beta's tangent followed by alpha's is positively oriented, Equal when the
/// classes coincide. Throws InputError unless both start at the same basepoint.
Side side_of(const Arc& alpha, const Arc& beta, const Surface& surface);

int geometric_intersection(const Arc& arc, const CyclicWord& curve, const Surface& surface);
int geometric_intersection(const CyclicWord& curve, const Arc& arc, const Surface& surface);
/// Interior crossings of two arcs. Endpoints sharing a basepoint corner are
/// separated by slot (starts before ends) and never counted.
int geometric_intersection(const Arc& a, const Arc& b, const Surface& surface);

/// Calls `visit` on every simple arc with the given start and word length
/// exactly `length`, in lexicographic word order and then target order.
/// Returning false from `visit` stops the walk; the function then returns false.
bool for_each_arc_of_length(const Surface& surface, int start, int length, const std::function<bool(const Arc&)>& visit);

}  // namespace rveer
