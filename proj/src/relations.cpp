#include "rveer/relations.hpp"

#include <algorithm>
#include <random>

#include "rveer/notation.hpp"

namespace rveer {

std::vector<Arc> relation_test_arcs(const Surface& surface, std::size_t extra) {
  std::vector<Arc> arcs = filling_arcs(surface);
  std::size_t added = 0;
  for (int len = 0; added < extra && len <= 64; ++len) {
    for (int component = 1; component <= surface.boundary_count() && added < extra; ++component) {
      for_each_arc_of_length(surface, component, len, [&](const Arc& a) {
        if (std::find(arcs.begin(), arcs.end(), a) == arcs.end()) {
          arcs.push_back(a);
          ++added;
        }
        return added < extra;
      });
    }
    if (surface.rank() == 0) break;
  }
  return arcs;
}

bool same_action(const Surface& surface, const TwistWord& f, const TwistWord& g, const std::vector<Arc>& arcs) {
  return std::all_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return act(surface, f, a) == act(surface, g, a); });
}

namespace {

TwistWord twist(const LibraryCurve& c, int exponent = 1) { return TwistWord{{TwistFactor{c.name, c.curve, exponent}}}; }

}  // namespace

std::vector<RelationCheck> check_relations(const Surface& surface, const CurveLibrary& library, std::size_t extra_arcs,
                                           int random_pairs, std::uint64_t seed) {
  const std::vector<Arc> arcs = relation_test_arcs(surface, extra_arcs);
  const std::vector<std::string>& chain = library.standard_chain();
  std::vector<RelationCheck> out;

  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      const TwistWord a = twist(library.at(chain[i])), b = twist(library.at(chain[j]));
      RelationCheck r;
      r.checks = arcs.size();
      if (j == i + 1) {
        r.name = "braid " + chain[i] + " " + chain[j];
        r.passed = same_action(surface, a * b * a, b * a * b, arcs);
      } else {
        r.name = "commute " + chain[i] + " " + chain[j];
        r.passed = same_action(surface, a * b, b * a, arcs);
      }
      out.push_back(std::move(r));
    }
  }

  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    for (int s : {1, -1}) {
      const LibraryCurve& a = library.at(chain[i]);
      const LibraryCurve& b = library.at(chain[i + 1]);
      const TwistWord f = twist(a, s);
      const CyclicWord image = act(surface, f, b.curve);
      const TwistWord moved{{TwistFactor{"image", image, 1}}};
      RelationCheck r;
      r.name = "naturality T(" + a.name + ")^" + std::to_string(s) + " T(" + b.name + ")";
      r.checks = arcs.size();
      r.passed = is_simple(image, surface) && same_action(surface, conjugate(f, twist(b)), moved, arcs);
      out.push_back(std::move(r));
    }
  }

  if (random_pairs > 0 && surface.rank() > 0) {
    std::mt19937_64 rng(seed);
    const auto& curves = library.curves();
    const auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    RelationCheck inv{"act o inverse = id", true, 0, ""};
    RelationCheck comp{"act(f g) = act(f) o act(g)", true, 0, ""};
    for (int t = 0; t < random_pairs; ++t) {
      TwistWord f, g;
      for (TwistWord* w : {&f, &g}) {
        const std::size_t len = 1 + pick(5);
        for (std::size_t k = 0; k < len; ++k) {
          const int e = static_cast<int>(pick(2)) + 1;
          *w = *w * twist(curves[pick(curves.size())], pick(2) ? e : -e);
        }
      }
      const Arc& a = arcs[pick(arcs.size())];
      ++inv.checks;
      ++comp.checks;
      if (act(surface, inverse(f), act(surface, f, a)) != a) {
        inv.passed = false;
        inv.detail = format_twist_word(f);
      }
      if (act(surface, f * g, a) != act(surface, f, act(surface, g, a))) comp.passed = false;
    }
    out.push_back(std::move(inv));
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace rveer
