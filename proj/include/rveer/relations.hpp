#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rveer/arcs.hpp"
#include "rveer/mapping_class.hpp"
#include "rveer/surface.hpp"

namespace rveer {

struct RelationCheck {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;
};

/// The filling arcs followed by the first `extra` other simple arcs in
/// enumeration order (all basepoints).
std::vector<Arc> relation_test_arcs(const Surface& surface, std::size_t extra);

/// True iff both words act identically on every arc in `arcs`.
bool same_action(const Surface& surface, const TwistWord& f, const TwistWord& g, const std::vector<Arc>& arcs);

/// Braid relations for adjacent standard chain curves, commutation for the
/// disjoint pairs, twist naturality for adjacent pairs, and the action laws on
/// `random_pairs` random (word, arc) pairs drawn with `seed`.
std::vector<RelationCheck> check_relations(const Surface& surface, const CurveLibrary& library, std::size_t extra_arcs,
                                           int random_pairs, std::uint64_t seed);

}  // namespace rveer
