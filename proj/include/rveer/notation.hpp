#pragma once

#include <string>
#include <string_view>

#include "rveer/arcs.hpp"
#include "rveer/curves.hpp"
#include "rveer/mapping_class.hpp"
#include "rveer/surface.hpp"

namespace rveer {

/// Where a fragment of text sits in its source, for error positions.
struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Words are written as edge names, capitalized for inverses (`a B A b`,
/// `a1 B1`, `z2`), or as `e<k>` / `E<k>`. Tokens may be concatenated when the
/// split is unambiguous (`aBAb`), a letter may carry a power (`a^-2`), and
/// `1` is the empty word.
Word parse_word(const Surface& surface, std::string_view text, SourcePos pos = {});
std::string format_word(const Surface& surface, std::span<const Letter> word);

/// `arc from ∂1 to ∂2 : <word>`, `arc ∂1→∂2 : <word>` or `d1 -> d2 : <word>`.
Arc parse_arc(const Surface& surface, std::string_view text, SourcePos pos = {});
std::string format_arc(const Surface& surface, const Arc& arc);

/// `curve <name> : <word>`; returns the name and the curve.
std::pair<std::string, CyclicWord> parse_curve_definition(const Surface& surface, std::string_view text,
                                                          SourcePos pos = {});

/// `T(a)^-1 T(b) T(c)^2`; `id` or empty text is the identity.
TwistWord parse_twist_word(const CurveLibrary& library, std::string_view text, SourcePos pos = {});
std::string format_twist_word(const TwistWord& tw);

}  // namespace rveer
