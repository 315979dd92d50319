#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rveer/arcs.hpp"
#include "rveer/mapping_class.hpp"
#include "rveer/surface.hpp"

namespace rveer {

/// An arc sent strictly to its left: a certificate that h is not right-veering.
struct Witness {
  Arc arc;
  Arc image;
  int basepoint = 1;
  Side side = Side::Left;
};

enum class VerdictKind { Overtwisted, RightVeeringPositive, InconclusiveAtBound, NotApplicable };
enum class OvertwistedReason { SyntacticTheorem1, WitnessFound };

std::string to_string(VerdictKind kind);
std::string to_string(OvertwistedReason reason);

struct Verdict {
  VerdictKind kind = VerdictKind::InconclusiveAtBound;
  std::optional<OvertwistedReason> reason;
  std::optional<Witness> witness;
  int bound = 0;
  std::uint64_t arcs_checked = 0;
  std::string note;
};

struct SearchOptions {
  int max_len = 8;
  /// Worker threads for the witness search; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct SearchResult {
  std::optional<Witness> witness;
  /// Arcs examined in search order, up to and including the witness.
  std::uint64_t arcs_checked = 0;
};

/// Simple arcs starting at boundary `component` with word length <= max_len,
/// ordered by length, then word, then target component.
std::vector<Arc> enumerate_arcs(const Surface& surface, int component, int max_len);

/// True iff h(arc) lies strictly to the left of arc.
bool maps_to_left(const Surface& surface, const TwistWord& h, const Arc& arc);

/// Re-checks a witness from scratch: simple arc, image recomputed, Left.
bool verify_witness(const Surface& surface, const TwistWord& h, const Witness& witness);

/// First arc in search order (basepoints by component, then length, then
/// word) that h sends to the left. The result does not depend on `threads`.
SearchResult find_witness(const Surface& surface, const TwistWord& h, const SearchOptions& options = {});

Verdict classify_open_book(const Surface& surface, const TwistWord& h, const SearchOptions& options = {});

/// t_a^-1 * f^-1 for positive f: never right-veering.
TwistWord lemma_r7_family(const TwistFactor& a, const TwistWord& f);

}  // namespace rveer
