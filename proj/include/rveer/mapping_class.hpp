#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rveer/arcs.hpp"
#include "rveer/curves.hpp"
#include "rveer/surface.hpp"

namespace rveer {

enum class CurveKind { Nonseparating, Separating, BoundaryParallel, User };

std::string to_string(CurveKind kind);

struct LibraryCurve {
  std::string name;
  CyclicWord curve;
  CurveKind kind;
  /// Human-readable topological type, e.g. "separating: genus 1 + 0 extra boundary | genus 1 + boundary 1".
  std::string type;
};

/// Named simple closed curves on one surface.
///
/// Standard curves, for genus g and b boundary components:
///  - every spine edge as a curve (a, b, z, or a1, b1, ..., z1, ...);
///  - chain curves c_k = a_k b_k A_{k+1} B_k for 1 <= k < g, so that
///    a1, b1, c1, b2, c2, ..., b_g is a chain (consecutive curves meet once,
///    all others are disjoint);
///  - d_j, the curve parallel to boundary component j;
///  - s<h>_<m>, separating off genus h together with the extra boundary
///    components 2..m+1, for every (h, m) where both sides carry topology.
class CurveLibrary {
 public:
  explicit CurveLibrary(const Surface& surface);

  const std::vector<LibraryCurve>& curves() const noexcept { return curves_; }
  const LibraryCurve* find(const std::string& name) const;
  const LibraryCurve& at(const std::string& name) const;
  /// a1, b1, c1, b2, ..., b_g (a, b on genus one; empty on planar surfaces).
  const std::vector<std::string>& standard_chain() const noexcept { return chain_; }
  /// One representative per topological type: nonseparating, each separating
  /// type, and each boundary-parallel curve.
  std::vector<const LibraryCurve*> type_representatives() const;

  /// Adds a user curve; throws InputError unless it is simple, essential and
  /// the name is free.
  const LibraryCurve& add_user_curve(const std::string& name, const CyclicWord& curve);

 private:
  void add(std::string name, CyclicWord curve, CurveKind kind, std::string type);

  const Surface* surface_;
  std::vector<LibraryCurve> curves_;
  std::vector<std::string> chain_;
};

struct TwistFactor {
  std::string name;
  CyclicWord curve;
  int exponent = 1;

  friend bool operator==(const TwistFactor&, const TwistFactor&) = default;
};

/// A mapping class written as a product of Dehn twists. The word
/// [f1, f2, ..., fm] is the composition f1 o f2 o ... o fm: the rightmost
/// factor acts first. Positive exponents are right-handed twists.
struct TwistWord {
  std::vector<TwistFactor> factors;

  bool empty() const noexcept { return factors.empty(); }
  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

TwistWord operator*(const TwistWord& a, const TwistWord& b);
TwistWord make_twist_word(const CurveLibrary& library, const std::vector<std::pair<std::string, int>>& factors);

/// Image of `arc` under t_curve^sign (sign = +1 or -1). The arc need not be
/// simple: the action is on path classes between basepoints.
Arc twist_arc(const Surface& surface, const CyclicWord& curve, int sign, const Arc& arc);
CyclicWord twist_curve(const Surface& surface, const CyclicWord& curve, int sign, const CyclicWord& target);

Arc act(const Surface& surface, const TwistWord& tw, const Arc& arc);
CyclicWord act(const Surface& surface, const TwistWord& tw, const CyclicWord& curve);

TwistWord inverse(const TwistWord& tw);
/// f * h * f^-1.
TwistWord conjugate(const TwistWord& f, const TwistWord& h);

/// Arcs through the basepoint of boundary 1 whose images determine a mapping
/// class: the loops along a_k and b_k (in their embedded orientation) and
/// one spanning arc to every other boundary component. Together with the
/// boundary loops, which every mapping class fixes, they generate the
/// fundamental groupoid of the basepoints.
std::vector<Arc> filling_arcs(const Surface& surface);

bool is_identity(const Surface& surface, const TwistWord& tw);

}  // namespace rveer
