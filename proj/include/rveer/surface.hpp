#pragma once

#include <span>
#include <string>
#include <vector>

#include "rveer/word.hpp"

namespace rveer {

struct SurfaceSpec {
  int genus = 0;
  int boundary_count = 1;

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// One traced boundary component. `corners[t]` is the half-edge immediately
/// before the t-th corner visited (the disk has the single corner 0);
/// `word[t]` is the letter read when leaving that corner. corners[0] is the
/// basepoint, so `word` is the boundary word read from the basepoint.
struct BoundaryCycle {
  std::vector<Letter> corners;
  Word word;

  Letter basepoint() const { return corners.front(); }
};

/// Compact oriented surface modelled as a thickened one-vertex ribbon graph.
///
/// Edges: n = 2g + b - 1 loops. Half-edges are named by the letter read when
/// leaving the vertex along them (e_k outgoing end, E_k incoming end). The
/// ribbon order is counterclockwise as seen from the positive side:
///
///   a1 b1 A1 B1  a2 b2 A2 B2 ... ag bg Ag Bg  z1 Z1 ... z_{b-1} Z_{b-1}
///
/// with a_k = e_{2k-1}, b_k = e_{2k}, z_m = e_{2g+m}. Boundary components are
/// the orbits of x -> next(x^-1) (face tracing), numbered in the order their
/// first letter appears in the ribbon order. With this layout boundary 1 reads
/// [a1 B1 A1 b1]...[ag Bg Ag bg] z1 ... z_{b-1} and boundary m+1 reads Z_m.
class Surface {
 public:
  explicit Surface(SurfaceSpec spec);

  const SurfaceSpec& spec() const noexcept { return spec_; }
  int rank() const noexcept { return rank_; }
  int half_edge_count() const noexcept { return 2 * rank_; }
  int euler_characteristic() const noexcept { return 1 - rank_; }
  int boundary_count() const noexcept { return spec_.boundary_count; }

  std::span<const Letter> ribbon_order() const noexcept { return ribbon_; }
  /// Position of a half-edge in the ribbon order.
  int position(Letter x) const { return position_[static_cast<std::size_t>(x + rank_)]; }
  /// The half-edge following x counterclockwise.
  Letter next(Letter x) const;

  std::span<const BoundaryCycle> boundary_cycles() const noexcept { return cycles_; }
  /// 1-based boundary component owning the corner after half-edge `corner`.
  int boundary_of_corner(Letter corner) const;
  Letter basepoint(int component) const;
  const Word& boundary_word(int component) const;

  const std::string& edge_name(int edge) const { return names_.at(static_cast<std::size_t>(edge - 1)); }
  std::string letter_name(Letter x) const;
  std::span<const std::string> edge_names() const noexcept { return names_; }

  friend bool operator==(const Surface& a, const Surface& b) { return a.spec_ == b.spec_; }

 private:
  SurfaceSpec spec_;
  int rank_;
  std::vector<Letter> ribbon_;
  std::vector<int> position_;
  std::vector<BoundaryCycle> cycles_;
  std::vector<int> corner_owner_;
  std::vector<std::string> names_;
};

/// Validates the spec and builds the surface; rejects closed and negative specs.
Surface build_surface(const SurfaceSpec& spec);

/// Parses "g=<int> b=<int>" (optionally prefixed by the keyword "surface").
SurfaceSpec parse_surface_spec(const std::string& text);

/// Deterministic JSON text describing edges, ribbon order and boundary cycles.
std::string dump_surface(const Surface& surface);

/// Graphviz rendering of the ribbon graph; `annotations` are printed as a
/// legend (for example arc words).
std::string surface_dot(const Surface& surface, std::span<const std::string> annotations = {});

}  // namespace rveer
