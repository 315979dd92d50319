#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace oracle {

std::vector<std::vector<int>> face_cycles(int genus, int boundary_count) {
  const int n = 2 * genus + boundary_count - 1;
  // Half-edge ids: 2k for e_{k+1} outgoing, 2k+1 for its incoming end.
  std::vector<int> rotation;
  for (int k = 1; k <= genus; ++k) {
    const int a = 2 * k - 2, b = 2 * k - 1;
    rotation.insert(rotation.end(), {2 * a, 2 * b, 2 * a + 1, 2 * b + 1});
  }
  for (int m = 1; m < boundary_count; ++m) {
    const int z = 2 * genus + m - 1;
    rotation.insert(rotation.end(), {2 * z, 2 * z + 1});
  }
  const int h = 2 * n;
  std::vector<int> sigma(static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i) sigma[static_cast<std::size_t>(rotation[static_cast<std::size_t>(i)])] = rotation[static_cast<std::size_t>((i + 1) % h)];
  const auto letter = [](int id) { return id % 2 == 0 ? id / 2 + 1 : -(id / 2 + 1); };

  std::vector<std::vector<int>> faces;
  if (n == 0) return {{}};
  std::vector<bool> seen(static_cast<std::size_t>(h), false);
  for (int start : rotation) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> face;
    int x = start;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      face.push_back(letter(x));
      x = sigma[static_cast<std::size_t>(x ^ 1)];
    }
    faces.push_back(face);
  }
  return faces;
}

std::vector<int> homology(const Word& w, int rank) {
  std::vector<int> v(static_cast<std::size_t>(rank), 0);
  for (Letter x : w) v[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  return v;
}

namespace {

int det(const std::vector<int>& p, const std::vector<int>& q) { return std::abs(p[0] * q[1] - p[1] * q[0]); }

bool is_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

// Power of the cyclic word `base` (in either orientation) equal to w, if any.
bool is_power_of(const Word& w, const Word& base) {
  if (w.empty()) return true;
  for (const Word& b : {base, rveer::inverse(base)}) {
    if (w.size() % b.size() != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = w[i] == b[i % b.size()];
    if (ok) return true;
  }
  return false;
}

bool conjugate_to_power(const CyclicWord& c, const Word& base, int exponent_abs) {
  const CyclicWord p(rveer::power(base, exponent_abs));
  return c == p || c == p.reversed();
}

}  // namespace

int torus_curve_curve(const CyclicWord& u, const CyclicWord& v) {
  return det(homology(u.letters(), 2), homology(v.letters(), 2));
}

int torus_arc_curve(const Arc& arc, const CyclicWord& c) {
  const Word d{1, -2, -1, 2};
  const bool trivial_arc = is_power_of(arc.word, d);
  if (trivial_arc) return 0;
  const std::vector<int> hc = homology(c.letters(), 2);
  if (is_zero(hc)) return 2;
  return det(homology(arc.word, 2), hc);
}

int pants_arc_curve(const Arc& arc, const CyclicWord& c) {
  // Boundary words from the basepoints: d1 = z1 z2, d2 = Z1, d3 = Z2.
  const std::vector<Word> d = {{1, 2}, {-1}, {-2}};
  const bool trivial_arc = arc.start == arc.target && is_power_of(arc.word, d[static_cast<std::size_t>(arc.start - 1)]);
  if (trivial_arc) return 0;
  for (int j = 1; j <= 3; ++j) {
    if (conjugate_to_power(c, d[static_cast<std::size_t>(j - 1)], 1)) {
      return (arc.start == j ? 1 : 0) + (arc.target == j ? 1 : 0);
    }
  }
  return -1;
}

bool torus_curve_is_simple(const CyclicWord& c) {
  if (c.empty()) return true;
  if (conjugate_to_power(c, Word{1, -2, -1, 2}, 1)) return true;
  const Word& w = c.letters();
  Letter a = 0, b = 0;
  for (Letter x : w) {
    Letter& slot = std::abs(x) == 1 ? a : b;
    if (slot == 0) slot = x;
    if (slot != x) return false;
  }
  const int p = static_cast<int>(std::count(w.begin(), w.end(), a != 0 ? a : 99));
  const int q = static_cast<int>(w.size()) - p;
  if (std::gcd(p, q) != 1) return false;
  // Balanced: any two cyclic factors of equal length differ by at most one a.
  const std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    int lo = 1 << 30, hi = -1;
    for (std::size_t s = 0; s < n; ++s) {
      int count = 0;
      for (std::size_t t = 0; t < len; ++t) count += w[(s + t) % n] == a ? 1 : 0;
      lo = std::min(lo, count);
      hi = std::max(hi, count);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

bool pants_curve_is_simple(const CyclicWord& c) {
  if (c.empty()) return true;
  return conjugate_to_power(c, Word{1}, 1) || conjugate_to_power(c, Word{2}, 1) ||
         conjugate_to_power(c, Word{1, 2}, 1);
}

std::vector<Word> all_reduced_words(int rank, int len) {
  std::vector<Word> out;
  Word w;
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.size()) == len) {
      out.push_back(w);
      return;
    }
    for (int e = 1; e <= rank; ++e) {
      for (Letter x : {e, -e}) {
        if (!w.empty() && w.back() == -x) continue;
        w.push_back(x);
        rec();
        w.pop_back();
      }
    }
  };
  rec();
  return out;
}

std::vector<CyclicWord> all_cyclic_words(int rank, int max_len) {
  std::set<CyclicWord> seen;
  for (int len = 1; len <= max_len; ++len) {
    for (const Word& w : all_reduced_words(rank, len)) {
      if (w.front() == -w.back()) continue;
      seen.insert(CyclicWord(w));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Arc> brute_force_arcs(const Surface& surface, int start, int max_len) {
  std::vector<Arc> out;
  for (int len = 0; len <= max_len; ++len) {
    const std::vector<Word> words = len == 0 ? std::vector<Word>{Word{}} : all_reduced_words(surface.rank(), len);
    for (const Word& w : words) {
      for (int target = 1; target <= surface.boundary_count(); ++target) {
        const Arc a{start, target, w};
        if (rveer::is_simple(a, surface)) out.push_back(a);
      }
    }
  }
  return out;
}

rveer::TwistWord random_word(std::mt19937_64& rng, const rveer::CurveLibrary& library,
                             const std::vector<std::string>& names, int max_factors, int sign) {
  rveer::TwistWord tw;
  const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_factors));
  for (int i = 0; i < len; ++i) {
    const rveer::LibraryCurve& c = library.at(names[rng() % names.size()]);
    const int s = sign != 0 ? sign : (rng() % 2 ? 1 : -1);
    tw.factors.push_back({c.name, c.curve, s});
  }
  return tw;
}

}  // namespace oracle
