#include "rveer/word.hpp"

#include <algorithm>

namespace rveer {

InputError::InputError(const std::string& what, int line, int column)
    : std::invalid_argument(what),
      line_(line),
      column_(column) {}

bool lex_less(std::span<const Letter> a, std::span<const Letter> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return letter_key(a[i]) < letter_key(b[i]);
  }
  return a.size() < b.size();
}

bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

Word inverse(std::span<const Letter> w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = -w[w.size() - 1 - i];
  return out;
}

void push_reduced(Word& w, Letter x) {
  if (!w.empty() && w.back() == -x) {
    w.pop_back();
  } else {
    w.push_back(x);
  }
}

void append_reduced(Word& w, std::span<const Letter> tail) {
  for (Letter x : tail) push_reduced(w, x);
}

Word reduce(std::span<const Letter> w, int rank) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (x == 0 || (rank > 0 && (x > rank || x < -rank))) {
      throw InputError("letter index " + std::to_string(x) + " is outside the alphabet of rank " +
                       std::to_string(rank));
    }
    push_reduced(out, x);
  }
  return out;
}

bool is_reduced(std::span<const Letter> w) noexcept {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == -w[i + 1] || w[i] == 0) return false;
  }
  return w.empty() || w.back() != 0;
}

Word multiply(std::span<const Letter> a, std::span<const Letter> b) {
  Word out(a.begin(), a.end());
  append_reduced(out, b);
  return out;
}

Word cyclic_reduce(std::span<const Letter> w) {
  Word r = reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

bool is_cyclically_reduced(std::span<const Letter> w) noexcept {
  return is_reduced(w) && (w.size() < 2 || w.front() != -w.back());
}

Word rotate(std::span<const Letter> w, std::size_t start) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(start + i) % w.size()]);
  return out;
}

Word least_rotation(std::span<const Letter> w) {
  Word best(w.begin(), w.end());
  for (std::size_t s = 1; s < w.size(); ++s) {
    Word r = rotate(w, s);
    if (lex_less(r, best)) best = std::move(r);
  }
  return best;
}

bool is_proper_power(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return true;
  }
  return false;
}

Word power(std::span<const Letter> w, int k) {
  Word base = k < 0 ? inverse(w) : Word(w.begin(), w.end());
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) append_reduced(out, base);
  return out;
}

}  // namespace rveer
