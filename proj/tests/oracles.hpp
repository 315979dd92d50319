#pragma once

// Independent reference computations used to check the library.

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rveer/arcs.hpp"
#include "rveer/curves.hpp"
#include "rveer/mapping_class.hpp"
#include "rveer/surface.hpp"

namespace oracle {

using rveer::Arc;
using rveer::CyclicWord;
using rveer::Letter;
using rveer::Surface;
using rveer::Word;

/// Boundary words of the canonical ribbon graph computed with an explicit
/// permutation model: sigma is the rotation at the vertex, iota the edge
/// involution, and faces are the cycles of sigma o iota.
std::vector<std::vector<int>> face_cycles(int genus, int boundary_count);

/// Exponent-sum vector (abelianization) of a word over n generators.
std::vector<int> homology(const Word& w, int rank);

/// Closed-form intersection numbers on the one-holed torus and the pair of
/// pants: slopes meet in |det| points, boundary-parallel curves meet an
/// essential arc once per endpoint on their boundary component.
int torus_curve_curve(const CyclicWord& u, const CyclicWord& v);
int torus_arc_curve(const Arc& arc, const CyclicWord& c);
int pants_arc_curve(const Arc& arc, const CyclicWord& c);

/// Simple closed curves on the one-holed torus: conjugates of primitive
/// elements (balanced words in a^e, b^f with coprime exponent sums) and of
/// the boundary word. On the pants: the three boundary-parallel classes.
bool torus_curve_is_simple(const CyclicWord& c);
bool pants_curve_is_simple(const CyclicWord& c);

/// All cyclically reduced words of length 1..max_len, one per oriented
/// conjugacy class.
std::vector<CyclicWord> all_cyclic_words(int rank, int max_len);
/// All reduced words of length exactly `len`.
std::vector<Word> all_reduced_words(int rank, int len);

/// Same arcs as the pruned enumeration, from an unpruned scan of every reduced
/// word followed by the global lift test.
std::vector<Arc> brute_force_arcs(const Surface& surface, int start, int max_len);

rveer::TwistWord random_word(std::mt19937_64& rng, const rveer::CurveLibrary& library,
                             const std::vector<std::string>& names, int max_factors, int sign);

}  // namespace oracle
