#include "rveer/notation.hpp"

#include <cctype>
#include <optional>
#include <regex>

namespace rveer {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

SourcePos advance(SourcePos pos, std::size_t offset) { return {pos.line, pos.column + static_cast<int>(offset)}; }

[[noreturn]] void fail(const std::string& what, SourcePos pos) { throw InputError(what, pos.line, pos.column); }

std::string_view trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && is_space(s[a])) ++a;
  while (b > a && is_space(s[b - 1])) --b;
  return s.substr(a, b - a);
}

// Reads an optional "^<int>" at `i`; returns 1 when absent.
int read_power(std::string_view text, std::size_t& i, SourcePos pos) {
  if (i >= text.size() || text[i] != '^') return 1;
  const std::size_t at = i++;
  bool braced = i < text.size() && text[i] == '{';
  if (braced) ++i;
  const std::size_t start = i;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  while (i < text.size() && is_digit(text[i])) ++i;
  if (i == start || !is_digit(text[i - 1])) fail("expected an integer exponent after '^'", advance(pos, at));
  const int value = std::stoi(std::string(text.substr(start, i - start)));
  if (braced) {
    if (i >= text.size() || text[i] != '}') fail("missing '}' after exponent", advance(pos, i));
    ++i;
  }
  return value;
}

}  // namespace

Word parse_word(const Surface& surface, std::string_view text, SourcePos pos) {
  std::vector<std::pair<std::string, Letter>> names;
  for (int e = 1; e <= surface.rank(); ++e) {
    names.emplace_back(surface.letter_name(e), e);
    names.emplace_back(surface.letter_name(-e), -e);
  }
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c == '1' && (i + 1 == text.size() || !is_digit(text[i + 1]))) {
      ++i;
      continue;
    }
    if ((c == 'e' || c == 'E') && i + 1 < text.size() && is_digit(text[i + 1])) {
      std::size_t j = i + 1;
      while (j < text.size() && is_digit(text[j])) ++j;
      const int k = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
      if (k < 1 || k > surface.rank()) {
        fail("edge e" + std::to_string(k) + " does not exist on this surface", advance(pos, i));
      }
      i = j;
      const int p = read_power(text, i, pos);
      const Letter x = c == 'e' ? k : -k;
      for (int r = 0; r < std::abs(p); ++r) push_reduced(out, p > 0 ? x : -x);
      continue;
    }
    std::optional<std::pair<std::size_t, Letter>> best;
    for (const auto& [name, letter] : names) {
      if (text.substr(i, name.size()) == name && (!best || name.size() > best->first)) best = {name.size(), letter};
    }
    if (!best) fail("unknown letter at '" + std::string(text.substr(i, 8)) + "'", advance(pos, i));
    i += best->first;
    const int p = read_power(text, i, pos);
    for (int r = 0; r < std::abs(p); ++r) push_reduced(out, p > 0 ? best->second : -best->second);
  }
  return out;
}

std::string format_word(const Surface& surface, std::span<const Letter> word) {
  if (word.empty()) return "1";
  std::string out;
  for (Letter x : word) {
    if (!out.empty()) out += ' ';
    out += surface.letter_name(x);
  }
  return out;
}

Arc parse_arc(const Surface& surface, std::string_view text, SourcePos pos) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) fail("expected ':' between the arc endpoints and its word", pos);
  static const std::regex header(
      R"(^\s*(?:arc\s+)?(?:from\s+)?(?:∂|d)\s*(\d+)\s*(?:to|→|->)\s*(?:∂|d)\s*(\d+)\s*$)");
  const std::string head(text.substr(0, colon));
  std::smatch m;
  if (!std::regex_match(head, m, header)) fail("expected `arc from ∂<i> to ∂<j> : <word>`", pos);
  const int start = std::stoi(m[1].str());
  const int target = std::stoi(m[2].str());
  const Word word = parse_word(surface, text.substr(colon + 1), advance(pos, colon + 1));
  try {
    return make_arc(surface, start, target, word);
  } catch (const InputError& e) {
    fail(e.what(), pos);
  }
}

std::string format_arc(const Surface& surface, const Arc& arc) {
  return "arc from ∂" + std::to_string(arc.start) + " to ∂" + std::to_string(arc.target) + " : " +
         format_word(surface, arc.word);
}

std::pair<std::string, CyclicWord> parse_curve_definition(const Surface& surface, std::string_view text,
                                                          SourcePos pos) {
  static const std::regex header(R"(^\s*curve\s+([A-Za-z_][A-Za-z0-9_']*)\s*$)");
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) fail("expected `curve <name> : <word>`", pos);
  const std::string head(text.substr(0, colon));
  std::smatch m;
  if (!std::regex_match(head, m, header)) fail("expected `curve <name> : <word>`", pos);
  const Word w = parse_word(surface, text.substr(colon + 1), advance(pos, colon + 1));
  return {m[1].str(), CyclicWord(w)};
}

TwistWord parse_twist_word(const CurveLibrary& library, std::string_view text, SourcePos pos) {
  TwistWord tw;
  const std::string_view body = trim(text);
  if (body.empty() || body == "id" || body == "1") return tw;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i]) || text[i] == '*' || text[i] == '.') {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (text[i] != 'T' && text[i] != 't') fail("expected a twist `T(<curve>)`", advance(pos, i));
    ++i;
    if (i < text.size() && text[i] == '_') ++i;
    if (i >= text.size() || text[i] != '(') fail("expected '(' after T", advance(pos, i));
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) fail("missing ')'", advance(pos, i));
    const std::string name(trim(text.substr(i + 1, close - i - 1)));
    const LibraryCurve* curve = library.find(name);
    if (!curve) {
      std::string known;
      for (const LibraryCurve& c : library.curves()) known += (known.empty() ? "" : ", ") + c.name;
      fail("unknown curve '" + name + "' (known: " + known + ")", advance(pos, at));
    }
    i = close + 1;
    const int p = read_power(text, i, pos);
    if (p == 0) fail("twist exponents must be nonzero", advance(pos, at));
    tw.factors.push_back({curve->name, curve->curve, p});
  }
  return tw;
}

std::string format_twist_word(const TwistWord& tw) {
  if (tw.empty()) return "id";
  std::string out;
  for (const TwistFactor& f : tw.factors) {
    if (!out.empty()) out += ' ';
    out += "T(" + f.name + ")";
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

}  // namespace rveer
