#pragma once

#include <span>

#include "rveer/surface.hpp"
#include "rveer/word.hpp"

namespace rveer {

/// Free homotopy class of an oriented closed curve: a cyclically reduced word
/// stored in its least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// Cyclically reduces and rotates `w` into canonical position.
  explicit CyclicWord(std::span<const Letter> w);

  const Word& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  CyclicWord reversed() const;
  /// Canonical form of the unoriented curve: the lesser of the two orientations.
  CyclicWord unoriented() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend bool operator<(const CyclicWord& a, const CyclicWord& b) { return shortlex_less(a.letters_, b.letters_); }

 private:
  Word letters_;
};

bool same_unoriented_curve(const CyclicWord& a, const CyclicWord& b);

/// Not null-homotopic. In a free group every non-empty cyclically reduced word
/// is non-trivial, so boundary-parallel curves count as essential.
bool is_essential(const CyclicWord& curve);

/// True iff the free homotopy class contains an embedded representative:
/// primitive and no two lifts of the curve link on the boundary circle.
bool is_simple(const CyclicWord& curve, const Surface& surface);

/// Minimal transverse intersection count of two simple closed curves.
/// Throws UnsupportedInput for non-simple or trivial input.
int geometric_intersection(const CyclicWord& u, const CyclicWord& v, const Surface& surface);

}  // namespace rveer
