#include "rveer/arcs.hpp"

#include <algorithm>
#include <set>

#include "lifts.hpp"

namespace rveer {

std::string to_string(Side side) {
  switch (side) {
    case Side::Right:
      return "Right";
    case Side::Left:
      return "Left";
    case Side::Equal:
      return "Equal";
  }
  return "?";
}

Arc make_arc(const Surface& surface, int start, int target, std::span<const Letter> word) {
  for (int c : {start, target}) {
    if (c < 1 || c > surface.boundary_count()) {
      throw InputError("boundary component " + std::to_string(c) + " does not exist on this surface");
    }
  }
  if (surface.rank() == 0 && !word.empty()) throw InputError("the disk has no edges; arcs on it have empty words");
  return Arc{start, target, reduce(word, surface.rank())};
}

BoundaryPoint start_point(const Surface& surface, const Arc& arc) {
  return BoundaryPoint::at_corner({}, surface.basepoint(arc.start), 0);
}

BoundaryPoint end_point(const Surface& surface, const Arc& arc) {
  return BoundaryPoint::at_corner(arc.word, surface.basepoint(arc.target), 1);
}

CircleOrder order_at_start(const Surface& surface, const Arc& arc) {
  return CircleOrder(surface, surface.basepoint(arc.start));
}

Arc canonicalize_arc(const Arc& arc, const Surface& surface) {
  const Word& d = surface.boundary_word(arc.target);
  if (d.empty()) return arc;
  const int bound = static_cast<int>(2 * arc.word.size() / d.size()) + 1;
  Word best = arc.word;
  for (int k = -bound; k <= bound; ++k) {
    Word candidate = multiply(arc.word, power(d, k));
    if (shortlex_less(candidate, best)) best = std::move(candidate);
  }
  return Arc{arc.start, arc.target, std::move(best)};
}

bool is_simple(const Arc& arc, const Surface& surface) {
  const CircleOrder order = order_at_start(surface, arc);
  const BoundaryPoint y = end_point(surface, arc);
  const Letter start_corner = surface.basepoint(arc.start);
  const Letter end_corner = surface.basepoint(arc.target);
  const Word& w = arc.word;
  // Any other lift meeting this one shares a tree vertex: g = w[0:i] w[0:j]^-1.
  std::set<Word> seen;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (std::size_t j = 0; j <= w.size(); ++j) {
      if (i == j) continue;
      Word g(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      append_reduced(g, inverse(std::span<const Letter>(w.data(), j)));
      if (g.empty() || !seen.insert(g).second) continue;
      const BoundaryPoint gx = BoundaryPoint::at_corner(g, start_corner, 0);
      const BoundaryPoint gy = BoundaryPoint::at_corner(multiply(g, w), end_corner, 1);
      if (order.less(gx, y) != order.less(gy, y)) return false;
    }
  }
  return true;
}

namespace {

// A direction out of a tree vertex: a half-edge, or a point in a corner.
struct Direction {
  bool known = false;
  bool corner = false;
  Letter letter = 0;
  int slot = 0;

  bool operator==(const Direction& o) const {
    return known && o.known && corner == o.corner && letter == o.letter && slot == o.slot;
  }
};

Direction half(Letter x) { return Direction{true, false, x, 0}; }
Direction corner_dir(Letter h, int slot) { return Direction{true, true, h, slot}; }

class LocalOrder {
 public:
  explicit LocalOrder(const Surface& s) : s_(s), modulus_(4 * s.half_edge_count()) {}

  int token(const Direction& d) const {
    return d.corner ? 4 * s_.position(d.letter) + 2 + d.slot : 4 * s_.position(d.letter);
  }
  /// Counterclockwise distance from `from` to `x` around the vertex.
  int rank(const Direction& from, const Direction& x) const {
    return ((token(x) - token(from)) % modulus_ + modulus_) % modulus_;
  }

 private:
  const Surface& s_;
  int modulus_;
};

}  // namespace

bool has_forced_crossing(const Surface& surface, Letter start_corner, std::span<const Letter> path,
                         std::optional<Letter> end_corner) {
  const std::size_t k = path.size();
  if (k == 0) return false;
  const LocalOrder local(surface);
  const auto in = [&](std::size_t t) { return t == 0 ? corner_dir(start_corner, 0) : half(-path[t - 1]); };
  const auto out = [&](std::size_t t) {
    if (t < k) return half(path[t]);
    return end_corner ? corner_dir(*end_corner, 1) : Direction{};
  };
  const auto below = [&](const Direction& d, const Direction& a, const Direction& b) {
    return local.rank(d, a) < local.rank(d, b);
  };

  for (std::size_t s = 0; s <= k; ++s) {
    for (std::size_t t = 0; t <= k; ++t) {
      if (s == t) continue;
      const Direction in_s = in(s), out_s = out(s), in_t = in(t), out_t = out(t);
      if (!out_s.known || !out_t.known) continue;
      // Start each shared segment where the arc first meets the other lift.
      if (in_s == in_t || in_s == out_t) continue;

      if (out_s == out_t) {
        std::size_t a = s + 1, b = t + 1;
        while (out(a).known && out(b).known && out(a) == out(b)) ++a, ++b;
        if (!out(a).known || !out(b).known) continue;
        if (below(out_s, in_s, in_t) == below(in(a), out(a), out(b))) return true;
      } else if (out_s == in_t) {
        std::size_t a = s + 1, b = t - 1;
        while (out(a).known && out(a) == in(b)) ++a, --b;
        if (!out(a).known) continue;
        if (below(out_s, in_s, out_t) == below(in(a), out(a), in(b))) return true;
      } else {
        const int span_out = local.rank(in_s, out_s);
        const bool in_between = local.rank(in_s, in_t) < span_out;
        const bool out_between = local.rank(in_s, out_t) < span_out;
        if (in_between != out_between) return true;
      }
    }
  }
  return false;
}

Side side_of(const Arc& alpha, const Arc& beta, const Surface& surface) {
  if (alpha.start != beta.start) {
    throw InputError("side comparison needs a common basepoint (boundary " + std::to_string(alpha.start) + " vs " +
                     std::to_string(beta.start) + ")");
  }
  if (alpha == beta) return Side::Equal;
  const CircleOrder order = order_at_start(surface, alpha);
  // Endpoints further counterclockwise from the basepoint leave more to the left.
  return order.less(end_point(surface, beta), end_point(surface, alpha)) ? Side::Right : Side::Left;
}

int geometric_intersection(const Arc& arc, const CyclicWord& curve, const Surface& surface) {
  if (!is_simple(arc, surface) || !is_simple(curve, surface)) {
    throw UnsupportedInput("geometric intersection is only supported for simple arcs and curves");
  }
  if (curve.empty()) return 0;
  const CircleOrder order = order_at_start(surface, arc);
  const BoundaryPoint y = end_point(surface, arc);
  const Word& w = arc.word;
  int count = 0;
  detail::for_each_axis_lift(
      w, w.size() + 1, [&](std::size_t m) { return m == 0 ? Letter{0} : w[m - 1]; }, curve.letters(),
      [&](const detail::AxisLift& lift) {
        if (order.less(lift.plus, y, lift.vertex) != order.less(lift.minus, y, lift.vertex)) ++count;
      });
  return count;
}

int geometric_intersection(const CyclicWord& curve, const Arc& arc, const Surface& surface) {
  return geometric_intersection(arc, curve, surface);
}

int geometric_intersection(const Arc& a, const Arc& b, const Surface& surface) {
  if (!is_simple(a, surface) || !is_simple(b, surface)) {
    throw UnsupportedInput("geometric intersection is only supported for simple arcs");
  }
  const CircleOrder order = order_at_start(surface, a);
  const BoundaryPoint x = start_point(surface, a);
  const BoundaryPoint y = end_point(surface, a);
  const Letter b_start = surface.basepoint(b.start);
  const Letter b_end = surface.basepoint(b.target);
  std::set<Word> seen;
  int count = 0;
  for (std::size_t i = 0; i <= a.word.size(); ++i) {
    for (std::size_t j = 0; j <= b.word.size(); ++j) {
      Word g(a.word.begin(), a.word.begin() + static_cast<std::ptrdiff_t>(i));
      append_reduced(g, inverse(std::span<const Letter>(b.word.data(), j)));
      if (!seen.insert(g).second) continue;
      const BoundaryPoint p = BoundaryPoint::at_corner(g, b_start, 0);
      const BoundaryPoint q = BoundaryPoint::at_corner(multiply(g, b.word), b_end, 1);
      if (order.compare(p, x) == 0 || order.compare(p, y) == 0 || order.compare(q, x) == 0 ||
          order.compare(q, y) == 0) {
        continue;
      }
      if (order.less(p, y) != order.less(q, y)) ++count;
    }
  }
  return count;
}

bool for_each_arc_of_length(const Surface& surface, int start, int length, const std::function<bool(const Arc&)>& visit) {
  if (start < 1 || start > surface.boundary_count()) throw InputError("no such boundary component");
  const Letter start_corner = surface.basepoint(start);
  std::vector<Letter> alphabet;
  for (int e = 1; e <= surface.rank(); ++e) alphabet.insert(alphabet.end(), {e, -e});

  Word path;
  std::function<bool()> dfs = [&]() -> bool {
    if (static_cast<int>(path.size()) == length) {
      for (int target = 1; target <= surface.boundary_count(); ++target) {
        if (has_forced_crossing(surface, start_corner, path, surface.basepoint(target))) continue;
        if (!visit(Arc{start, target, path})) return false;
      }
      return true;
    }
    for (Letter x : alphabet) {
      if (!path.empty() && path.back() == -x) continue;
      path.push_back(x);
      const bool pruned = has_forced_crossing(surface, start_corner, path, std::nullopt);
      const bool keep_going = pruned || dfs();
      path.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return dfs();
}

}  // namespace rveer
