#include "rveer/veer.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace rveer {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Overtwisted:
      return "Overtwisted";
    case VerdictKind::RightVeeringPositive:
      return "RightVeeringPositive";
    case VerdictKind::InconclusiveAtBound:
      return "InconclusiveAtBound";
    case VerdictKind::NotApplicable:
      return "NotApplicable";
  }
  return "?";
}

std::string to_string(OvertwistedReason reason) {
  switch (reason) {
    case OvertwistedReason::SyntacticTheorem1:
      return "SyntacticTheorem1";
    case OvertwistedReason::WitnessFound:
      return "WitnessFound";
  }
  return "?";
}

std::vector<Arc> enumerate_arcs(const Surface& surface, int component, int max_len) {
  if (max_len < 0) throw InputError("max_len must be nonnegative");
  std::vector<Arc> arcs;
  for (int len = 0; len <= max_len; ++len) {
    for_each_arc_of_length(surface, component, len, [&](const Arc& a) {
      arcs.push_back(a);
      return true;
    });
  }
  return arcs;
}

bool maps_to_left(const Surface& surface, const TwistWord& h, const Arc& arc) {
  return side_of(arc, act(surface, h, arc), surface) == Side::Left;
}

bool verify_witness(const Surface& surface, const TwistWord& h, const Witness& witness) {
  if (witness.arc.start != witness.basepoint || witness.side != Side::Left) return false;
  if (!is_simple(witness.arc, surface)) return false;
  const Arc image = act(surface, h, witness.arc);
  if (image != witness.image || !is_simple(image, surface)) return false;
  return side_of(witness.arc, image, surface) == Side::Left;
}

namespace {

// Smallest index in `arcs` that h sends left, or arcs.size().
std::size_t first_left(const Surface& surface, const TwistWord& h, const std::vector<Arc>& arcs, unsigned threads) {
  const std::size_t n = arcs.size();
  if (threads <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) {
      if (maps_to_left(surface, h, arcs[i])) return i;
    }
    return n;
  }
  std::atomic<std::size_t> best{n};
  std::atomic<std::size_t> next{0};
  const std::size_t chunk = std::max<std::size_t>(16, n / (8 * threads));
  auto worker = [&] {
    for (;;) {
      const std::size_t lo = next.fetch_add(chunk);
      if (lo >= n || lo >= best.load()) return;
      const std::size_t hi = std::min(n, lo + chunk);
      for (std::size_t i = lo; i < hi && i < best.load(); ++i) {
        if (maps_to_left(surface, h, arcs[i])) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return best.load();
}

}  // namespace

SearchResult find_witness(const Surface& surface, const TwistWord& h, const SearchOptions& options) {
  if (options.max_len < 0) throw InputError("max_len must be nonnegative");
  const unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  SearchResult result;
  for (const TwistFactor& f : h.factors) {
    if (!is_simple(f.curve, surface)) throw InputError("Dehn twists need a simple closed curve ('" + f.name + "')");
  }
  for (int component = 1; component <= surface.boundary_count(); ++component) {
    for (int len = 0; len <= options.max_len; ++len) {
      std::vector<Arc> arcs;
      for_each_arc_of_length(surface, component, len, [&](const Arc& a) {
        arcs.push_back(a);
        return true;
      });
      const std::size_t i = first_left(surface, h, arcs, threads);
      if (i == arcs.size()) {
        result.arcs_checked += arcs.size();
        continue;
      }
      result.arcs_checked += i + 1;
      Witness w{arcs[i], act(surface, h, arcs[i]), component, Side::Left};
      if (!verify_witness(surface, h, w)) throw std::logic_error("witness failed re-verification");
      result.witness = std::move(w);
      return result;
    }
  }
  return result;
}

Verdict classify_open_book(const Surface& surface, const TwistWord& h, const SearchOptions& options) {
  Verdict v;
  v.bound = options.max_len;
  if (is_identity(surface, h)) {
    v.kind = VerdictKind::NotApplicable;
    v.note = "trivial monodromy";
    return v;
  }
  const bool all_negative =
      std::all_of(h.factors.begin(), h.factors.end(), [](const TwistFactor& f) { return f.exponent < 0; });
  const bool all_positive =
      std::all_of(h.factors.begin(), h.factors.end(), [](const TwistFactor& f) { return f.exponent > 0; });
  const bool all_essential =
      std::all_of(h.factors.begin(), h.factors.end(), [](const TwistFactor& f) { return is_essential(f.curve); });

  const SearchResult search = find_witness(surface, h, options);
  v.arcs_checked = search.arcs_checked;
  if (all_negative && all_essential) {
    v.kind = VerdictKind::Overtwisted;
    v.reason = OvertwistedReason::SyntacticTheorem1;
    v.witness = search.witness;
    v.note = "product of left-handed twists about essential curves";
  } else if (search.witness) {
    v.kind = VerdictKind::Overtwisted;
    v.reason = OvertwistedReason::WitnessFound;
    v.witness = search.witness;
    v.note = "an arc is sent to its left, so the monodromy is not right-veering";
  } else if (all_positive) {
    v.kind = VerdictKind::RightVeeringPositive;
    v.note = "product of right-handed twists: right-veering, supports a Stein fillable structure";
  } else {
    v.kind = VerdictKind::InconclusiveAtBound;
    v.note = "no witness up to the search bound; tightness is never asserted";
  }
  return v;
}

TwistWord lemma_r7_family(const TwistFactor& a, const TwistWord& f) {
  for (const TwistFactor& x : f.factors) {
    if (x.exponent <= 0) throw InputError("the family needs a positive twist word f");
  }
  TwistWord out;
  out.factors.push_back({a.name, a.curve, -1});
  return out * inverse(f);
}

}  // namespace rveer
