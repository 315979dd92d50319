#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rveer {

/// A letter of the free group on the spine edges: +k is e_k, -k is its inverse.
using Letter = int;
using Word = std::vector<Letter>;

/// Thrown for malformed user input. Carries an optional 1-based line/column
/// (0 when unknown); what() is the bare message.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what, int line = 0, int column = 0);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Thrown when an operation is asked to handle a class it does not support
/// (for instance intersection numbers of non-simple curves).
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr Letter inverse(Letter x) noexcept { return -x; }

/// Fixed total order on letters: e1 < E1 < e2 < E2 < ...
constexpr int letter_key(Letter x) noexcept { return 2 * ((x < 0 ? -x : x) - 1) + (x < 0 ? 1 : 0); }

/// Lexicographic comparison under letter_key.
bool lex_less(std::span<const Letter> a, std::span<const Letter> b);
/// Shortlex: shorter first, then lex_less.
bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b);

Word inverse(std::span<const Letter> w);

/// Free reduction. Throws InputError when a letter is zero or exceeds `rank`
/// (pass rank = 0 to skip the range check).
Word reduce(std::span<const Letter> w, int rank = 0);
bool is_reduced(std::span<const Letter> w) noexcept;

/// Appends `x` to a reduced word, cancelling when possible.
void push_reduced(Word& w, Letter x);
/// w := reduce(w * tail) for reduced w.
void append_reduced(Word& w, std::span<const Letter> tail);
Word multiply(std::span<const Letter> a, std::span<const Letter> b);

/// Removes matching letter/inverse pairs from both ends of a reduced word.
Word cyclic_reduce(std::span<const Letter> w);
bool is_cyclically_reduced(std::span<const Letter> w) noexcept;

Word rotate(std::span<const Letter> w, std::size_t start);
/// Lexicographically least rotation of a cyclically reduced word.
Word least_rotation(std::span<const Letter> w);
/// True iff w is a proper power of a shorter word (w must be cyclically reduced).
bool is_proper_power(std::span<const Letter> w);

Word power(std::span<const Letter> w, int k);

}  // namespace rveer
