#include "rveer/mapping_class.hpp"

#include <algorithm>

#include "lifts.hpp"

namespace rveer {

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::Nonseparating:
      return "nonseparating";
    case CurveKind::Separating:
      return "separating";
    case CurveKind::BoundaryParallel:
      return "boundary-parallel";
    case CurveKind::User:
      return "user";
  }
  return "?";
}

namespace {

std::string boundary_list(int from, int to) {
  if (from > to) return "none";
  std::string out;
  for (int j = from; j <= to; ++j) out += (out.empty() ? "" : ",") + std::to_string(j);
  return out;
}

}  // namespace

CurveLibrary::CurveLibrary(const Surface& surface) : surface_(&surface) {
  const int g = surface.spec().genus;
  const int b = surface.spec().boundary_count;

  for (int e = 1; e <= surface.rank(); ++e) {
    const Letter x = e;
    if (e <= 2 * g) {
      add(surface.edge_name(e), CyclicWord(std::span<const Letter>(&x, 1)), CurveKind::Nonseparating, "nonseparating");
    } else {
      add(surface.edge_name(e), CyclicWord(std::span<const Letter>(&x, 1)), CurveKind::BoundaryParallel,
          "boundary-parallel to boundary " + std::to_string(e - 2 * g + 1));
    }
  }

  for (int k = 1; k < g; ++k) {
    const Word w{2 * k - 1, 2 * k, -(2 * k + 1), -2 * k};
    add("c" + std::to_string(k), CyclicWord(w), CurveKind::Nonseparating, "nonseparating");
  }
  if (g >= 1) {
    chain_.push_back(surface.edge_name(1));
    chain_.push_back(surface.edge_name(2));
    for (int k = 1; k < g; ++k) {
      chain_.push_back("c" + std::to_string(k));
      chain_.push_back(surface.edge_name(2 * k + 2));
    }
  }

  if (surface.rank() > 0) {
    for (int j = 1; j <= b; ++j) {
      add("d" + std::to_string(j), CyclicWord(surface.boundary_word(j)), CurveKind::BoundaryParallel,
          "boundary-parallel to boundary " + std::to_string(j));
    }
  }

  // Contiguous runs of the outer boundary word cut off a subsurface.
  for (int h = 0; h <= g; ++h) {
    for (int m = 0; m <= b - 1; ++m) {
      const bool inner_trivial = (h == 0 && m <= 1);
      const bool outer_trivial = (h == g && m == b - 1);
      if (inner_trivial || outer_trivial) continue;
      Word w;
      for (int k = g - h + 1; k <= g; ++k) {
        const Letter a = 2 * k - 1, bb = 2 * k;
        w.insert(w.end(), {a, -bb, -a, bb});
      }
      for (int z = 1; z <= m; ++z) w.push_back(2 * g + z);
      add("s" + std::to_string(h) + "_" + std::to_string(m), CyclicWord(w), CurveKind::Separating,
          "separating: genus " + std::to_string(h) + " with boundary " + boundary_list(2, m + 1) + " | genus " +
              std::to_string(g - h) + " with boundary " + ("1" + std::string(m + 2 <= b ? "," : "") +
                                                           (m + 2 <= b ? boundary_list(m + 2, b) : "")));
    }
  }

  for (const LibraryCurve& c : curves_) {
    if (!is_simple(c.curve, surface)) throw std::logic_error("library curve " + c.name + " is not simple");
  }
}

void CurveLibrary::add(std::string name, CyclicWord curve, CurveKind kind, std::string type) {
  curves_.push_back(LibraryCurve{std::move(name), std::move(curve), kind, std::move(type)});
}

const LibraryCurve* CurveLibrary::find(const std::string& name) const {
  for (const LibraryCurve& c : curves_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const LibraryCurve& CurveLibrary::at(const std::string& name) const {
  if (const LibraryCurve* c = find(name)) return *c;
  throw InputError("unknown curve '" + name + "'");
}

std::vector<const LibraryCurve*> CurveLibrary::type_representatives() const {
  std::vector<const LibraryCurve*> out;
  bool have_nonseparating = false;
  for (const LibraryCurve& c : curves_) {
    switch (c.kind) {
      case CurveKind::Nonseparating:
        if (!have_nonseparating) out.push_back(&c);
        have_nonseparating = true;
        break;
      case CurveKind::Separating:
        out.push_back(&c);
        break;
      case CurveKind::BoundaryParallel:
        if (c.name.size() > 1 && c.name[0] == 'd') out.push_back(&c);
        break;
      case CurveKind::User:
        break;
    }
  }
  return out;
}

const LibraryCurve& CurveLibrary::add_user_curve(const std::string& name, const CyclicWord& curve) {
  if (name.empty()) throw InputError("curve name is empty");
  if (find(name)) throw InputError("curve '" + name + "' is already defined");
  if (!is_essential(curve)) throw InputError("curve '" + name + "' is null-homotopic");
  if (!is_simple(curve, *surface_)) throw InputError("curve '" + name + "' is not simple");
  add(name, curve, CurveKind::User, "user");
  return curves_.back();
}

TwistWord operator*(const TwistWord& a, const TwistWord& b) {
  TwistWord out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

TwistWord make_twist_word(const CurveLibrary& library, const std::vector<std::pair<std::string, int>>& factors) {
  TwistWord tw;
  for (const auto& [name, exponent] : factors) tw.factors.push_back({name, library.at(name).curve, exponent});
  return tw;
}

namespace {

Arc twist_unchecked(const Surface& surface, const CyclicWord& curve, int sign, const Arc& arc) {
  if (curve.empty()) return arc;
  const CircleOrder order = order_at_start(surface, arc);
  const BoundaryPoint y = end_point(surface, arc);
  const Word& w = arc.word;

  struct Crossing {
    BoundaryPoint inner;
    Word translation;
  };
  std::vector<Crossing> crossings;
  detail::for_each_axis_lift(
      w, w.size() + 1, [&](std::size_t m) { return m == 0 ? Letter{0} : w[m - 1]; }, curve.letters(),
      [&](const detail::AxisLift& lift) {
        const bool plus_below = order.less(lift.plus, y, lift.vertex);
        if (plus_below == order.less(lift.minus, y, lift.vertex)) return;
        // A right twist turns right onto the axis, towards its end nearer the basepoint.
        const bool forward = plus_below == (sign > 0);
        Word t(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(lift.vertex));
        append_reduced(t, forward ? lift.rotation : inverse(lift.rotation));
        append_reduced(t, inverse(std::span<const Letter>(w.data(), lift.vertex)));
        crossings.push_back({plus_below ? lift.plus : lift.minus, std::move(t)});
      });
  std::sort(crossings.begin(), crossings.end(),
            [&](const Crossing& p, const Crossing& q) { return order.less(p.inner, q.inner); });

  Word image;
  for (const Crossing& c : crossings) append_reduced(image, c.translation);
  append_reduced(image, w);
  return Arc{arc.start, arc.target, std::move(image)};
}

void require_simple(const Surface& surface, const CyclicWord& curve) {
  if (!is_simple(curve, surface)) throw InputError("Dehn twists need a simple closed curve");
}

}  // namespace

Arc twist_arc(const Surface& surface, const CyclicWord& curve, int sign, const Arc& arc) {
  require_simple(surface, curve);
  return twist_unchecked(surface, curve, sign, arc);
}

CyclicWord twist_curve(const Surface& surface, const CyclicWord& curve, int sign, const CyclicWord& target) {
  require_simple(surface, curve);
  if (target.empty()) return target;
  return CyclicWord(twist_unchecked(surface, curve, sign, Arc{1, 1, target.letters()}).word);
}

Arc act(const Surface& surface, const TwistWord& tw, const Arc& arc) {
  for (const TwistFactor& f : tw.factors) require_simple(surface, f.curve);
  Arc out = arc;
  for (auto it = tw.factors.rbegin(); it != tw.factors.rend(); ++it) {
    const int sign = it->exponent > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(it->exponent); ++i) out = twist_unchecked(surface, it->curve, sign, out);
  }
  return out;
}

CyclicWord act(const Surface& surface, const TwistWord& tw, const CyclicWord& curve) {
  if (curve.empty()) return curve;
  return CyclicWord(act(surface, tw, Arc{1, 1, curve.letters()}).word);
}

TwistWord inverse(const TwistWord& tw) {
  TwistWord out;
  for (auto it = tw.factors.rbegin(); it != tw.factors.rend(); ++it) {
    out.factors.push_back({it->name, it->curve, -it->exponent});
  }
  return out;
}

TwistWord conjugate(const TwistWord& f, const TwistWord& h) { return f * h * inverse(f); }

std::vector<Arc> filling_arcs(const Surface& surface) {
  std::vector<Arc> arcs;
  for (int e = 1; e <= 2 * surface.spec().genus; ++e) {
    Arc loop{1, 1, Word{e}};
    if (!is_simple(loop, surface)) loop.word = Word{-e};
    arcs.push_back(std::move(loop));
  }
  for (int j = 2; j <= surface.boundary_count(); ++j) arcs.push_back(Arc{1, j, {}});
  return arcs;
}

bool is_identity(const Surface& surface, const TwistWord& tw) {
  for (const Arc& arc : filling_arcs(surface)) {
    if (act(surface, tw, arc) != arc) return false;
  }
  return true;
}

}  // namespace rveer
