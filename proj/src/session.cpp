#include "rveer/session.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include "rveer/relations.hpp"

namespace rveer {

using nlohmann::ordered_json;

int exit_code(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Overtwisted:
      return 0;
    case VerdictKind::RightVeeringPositive:
      return 1;
    case VerdictKind::InconclusiveAtBound:
      return 2;
    case VerdictKind::NotApplicable:
      return 3;
  }
  return 5;
}

namespace {

ordered_json witness_json(const Surface& surface, const Witness& w) {
  ordered_json j;
  j["basepoint"] = w.basepoint;
  j["target"] = w.arc.target;
  j["arc_word"] = format_word(surface, w.arc.word);
  j["image_word"] = format_word(surface, w.image.word);
  j["side"] = to_string(w.side);
  return j;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = 0, b = s.size();
  while (a < b && is_space(s[a])) ++a;
  while (b > a && is_space(s[b - 1])) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

SourcePos advance(SourcePos pos, std::size_t offset) { return {pos.line, pos.column + static_cast<int>(offset)}; }

bool looks_like_arc(std::string_view s) {
  static const std::regex pattern(R"(^\s*(arc\b|(∂|d)\s*\d+\s*(→|->|to)).*)");
  return std::regex_match(std::string(s), pattern);
}

std::string spec_string(const SurfaceSpec& spec) {
  return "g=" + std::to_string(spec.genus) + " b=" + std::to_string(spec.boundary_count);
}

}  // namespace

ordered_json verdict_json(const Surface& surface, const TwistWord& h, const Verdict& v) {
  ordered_json j;
  j["verdict"] = to_string(v.kind);
  j["reason"] = v.reason ? ordered_json(to_string(*v.reason)) : ordered_json(nullptr);
  j["witness"] = v.witness ? witness_json(surface, *v.witness) : ordered_json(nullptr);
  j["bound"] = v.bound;
  j["arcs_checked"] = v.arcs_checked;
  j["surface"] = spec_string(surface.spec());
  j["monodromy"] = format_twist_word(h);
  j["note"] = v.note;
  return j;
}

Session::Session(SurfaceSpec spec) { set_surface(spec); }

void Session::set_surface(SurfaceSpec spec) {
  auto surface = std::make_unique<Surface>(build_surface(spec));
  auto library = std::make_unique<CurveLibrary>(*surface);
  library_ = std::move(library);
  surface_ = std::move(surface);
}

CommandResult Session::run_statement(std::string_view statement, SourcePos pos) {
  std::size_t lead = 0;
  const std::string_view body = trim(statement, &lead);
  pos = advance(pos, lead);
  CommandResult result;
  if (body.empty()) {
    result.silent = true;
    return result;
  }
  std::size_t kw_end = 0;
  while (kw_end < body.size() && !is_space(body[kw_end])) ++kw_end;
  const std::string keyword(body.substr(0, kw_end));
  std::size_t arg_lead = 0;
  const std::string_view rest = trim(body.substr(kw_end), &arg_lead);
  const SourcePos rest_pos = advance(pos, kw_end + arg_lead);
  const Surface& s = *surface_;
  SearchOptions search{options_.max_len, options_.threads};

  if (keyword == "surface") {
    try {
      set_surface(parse_surface_spec(std::string(rest)));
    } catch (const InputError& e) {
      throw InputError(e.what(), rest_pos.line, rest_pos.column);
    }
    result.silent = true;
    return result;
  }
  if (keyword == "curve") {
    auto [name, curve] = parse_curve_definition(s, body, pos);
    try {
      library_->add_user_curve(name, curve);
    } catch (const InputError& e) {
      throw InputError(e.what(), pos.line, pos.column);
    }
    result.silent = true;
    return result;
  }
  if (keyword == "set") {
    static const std::regex pattern(R"(^(max_len|max-len|seed|threads)\s*=\s*(\d+)$)");
    std::smatch m;
    const std::string r(rest);
    if (!std::regex_match(r, m, pattern)) {
      throw InputError("expected `set max_len|seed|threads = <int>`", rest_pos.line, rest_pos.column);
    }
    const std::string key = m[1].str();
    const unsigned long long value = std::stoull(m[2].str());
    if (key == "seed") {
      options_.seed = value;
    } else if (key == "threads") {
      options_.threads = static_cast<unsigned>(value);
    } else {
      options_.max_len = static_cast<int>(value);
    }
    result.silent = true;
    return result;
  }
  if (keyword == "classify") {
    const TwistWord h = parse_twist_word(*library_, rest, rest_pos);
    const Verdict v = classify_open_book(s, h, search);
    result.json = verdict_json(s, h, v);
    result.text = result.json.dump(2);
    result.exit_code = exit_code(v.kind);
    return result;
  }
  if (keyword == "witness") {
    const TwistWord h = parse_twist_word(*library_, rest, rest_pos);
    const SearchResult r = find_witness(s, h, search);
    result.json["monodromy"] = format_twist_word(h);
    result.json["witness"] = r.witness ? witness_json(s, *r.witness) : ordered_json(nullptr);
    result.json["bound"] = options_.max_len;
    result.json["arcs_checked"] = r.arcs_checked;
    if (r.witness) {
      result.text = format_arc(s, r.witness->arc) + "  =>  " + format_word(s, r.witness->image.word) + "  (Left)";
    } else {
      result.text = "no witness up to length " + std::to_string(options_.max_len) + " (" +
                    std::to_string(r.arcs_checked) + " arcs checked)";
    }
    return result;
  }
  if (keyword == "act") {
    static const std::regex on(R"(\son\s)");
    const std::string r(rest);
    std::smatch m;
    if (!std::regex_search(r, m, on)) throw InputError("expected `act <twists> on <target>`", pos.line, pos.column);
    const std::size_t split = static_cast<std::size_t>(m.position(0));
    const TwistWord h = parse_twist_word(*library_, rest.substr(0, split), rest_pos);
    std::size_t tlead = 0;
    const std::string_view target = trim(rest.substr(split + m.length(0)), &tlead);
    const SourcePos tpos = advance(rest_pos, split + m.length(0) + tlead);
    result.json["monodromy"] = format_twist_word(h);
    if (looks_like_arc(target)) {
      const Arc arc = parse_arc(s, target, tpos);
      const Arc image = act(s, h, arc);
      result.json["arc"] = format_arc(s, arc);
      result.json["image"] = format_arc(s, image);
      result.json["image_word"] = format_word(s, image.word);
      result.json["side"] = to_string(side_of(arc, image, s));
      result.text = format_arc(s, image) + "  (" + to_string(side_of(arc, image, s)) + ")";
    } else {
      std::string_view ctext = target;
      SourcePos cpos = tpos;
      if (ctext.starts_with("curve ")) {
        ctext = ctext.substr(6);
        cpos = advance(cpos, 6);
      }
      const LibraryCurve* named = library_->find(std::string(trim(ctext)));
      const CyclicWord curve = named ? named->curve : CyclicWord(parse_word(s, ctext, cpos));
      const CyclicWord image = act(s, h, curve);
      result.json["curve"] = format_word(s, curve.letters());
      result.json["image"] = format_word(s, image.letters());
      result.text = "curve " + format_word(s, image.letters());
    }
    return result;
  }
  if (keyword == "intersect") {
    std::vector<std::pair<std::string_view, SourcePos>> operands;
    const std::size_t comma = rest.find(',');
    if (comma != std::string_view::npos) {
      operands.push_back({rest.substr(0, comma), rest_pos});
      operands.push_back({rest.substr(comma + 1), advance(rest_pos, comma + 1)});
    } else {
      std::size_t i = 0;
      while (i < rest.size()) {
        while (i < rest.size() && is_space(rest[i])) ++i;
        const std::size_t start = i;
        while (i < rest.size() && !is_space(rest[i])) ++i;
        if (i > start) operands.push_back({rest.substr(start, i - start), advance(rest_pos, start)});
      }
    }
    if (operands.size() != 2) {
      throw InputError("expected `intersect <u> <v>` or `intersect <u>, <v>`", pos.line, pos.column);
    }
    struct Operand {
      bool is_arc = false;
      Arc arc;
      CyclicWord curve;
    };
    std::vector<Operand> ops;
    for (const auto& [text, opos] : operands) {
      Operand op;
      if (looks_like_arc(text)) {
        op.is_arc = true;
        op.arc = parse_arc(s, text, opos);
      } else if (const LibraryCurve* named = library_->find(std::string(trim(text)))) {
        op.curve = named->curve;
      } else {
        op.curve = CyclicWord(parse_word(s, text, opos));
      }
      ops.push_back(std::move(op));
    }
    int n = 0;
    if (ops[0].is_arc && ops[1].is_arc) {
      n = geometric_intersection(ops[0].arc, ops[1].arc, s);
    } else if (ops[0].is_arc) {
      n = geometric_intersection(ops[0].arc, ops[1].curve, s);
    } else if (ops[1].is_arc) {
      n = geometric_intersection(ops[0].curve, ops[1].arc, s);
    } else {
      n = geometric_intersection(ops[0].curve, ops[1].curve, s);
    }
    result.json["intersection"] = n;
    result.text = std::to_string(n);
    return result;
  }
  if (keyword == "reduce") {
    const Word w = parse_word(s, rest, rest_pos);
    result.json["word"] = format_word(s, w);
    result.json["cyclic"] = format_word(s, CyclicWord(w).letters());
    result.text = format_word(s, w);
    return result;
  }
  if (keyword == "relations") {
    const auto checks = check_relations(s, *library_, 50, 100, options_.seed);
    ordered_json list = ordered_json::array();
    std::ostringstream text;
    bool all = true;
    for (const RelationCheck& c : checks) {
      list.push_back({{"relation", c.name}, {"passed", c.passed}, {"checks", c.checks}});
      text << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.checks << " arcs)\n";
      all = all && c.passed;
    }
    result.json["surface"] = spec_string(s.spec());
    result.json["relations"] = list;
    result.json["all_passed"] = all;
    result.text = text.str();
    if (!result.text.empty()) result.text.pop_back();
    result.exit_code = all ? 0 : 1;
    return result;
  }
  if (keyword == "dump") {
    result.json = ordered_json::parse(dump_surface(s));
    result.text = result.json.dump(2);
    return result;
  }
  if (keyword == "curves") {
    ordered_json list = ordered_json::array();
    std::ostringstream text;
    for (const LibraryCurve& c : library_->curves()) {
      list.push_back({{"name", c.name}, {"word", format_word(s, c.curve.letters())}, {"kind", to_string(c.kind)},
                      {"type", c.type}});
      text << c.name << " : " << format_word(s, c.curve.letters()) << "  (" << c.type << ")\n";
    }
    result.json["curves"] = list;
    ordered_json chain = ordered_json::array();
    for (const std::string& n : library_->standard_chain()) chain.push_back(n);
    result.json["standard_chain"] = chain;
    result.text = text.str();
    if (!result.text.empty()) result.text.pop_back();
    return result;
  }
  if (keyword == "diagram") {
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (start <= rest.size() && !trim(rest).empty()) {
      const std::size_t comma = rest.find(',', start);
      const std::string_view piece = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (!trim(piece).empty()) labels.push_back(format_arc(s, parse_arc(s, piece, advance(rest_pos, start))));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    result.text = surface_dot(s, labels);
    result.json["dot"] = result.text;
    return result;
  }
  throw InputError("unknown statement '" + keyword + "'", pos.line, pos.column);
}

std::vector<CommandResult> Session::run_script(std::string_view script) {
  std::vector<CommandResult> results;
  int line = 1;
  std::size_t line_start = 0;
  while (line_start <= script.size()) {
    std::size_t line_end = script.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = script.size();
    std::string_view text = script.substr(line_start, line_end - line_start);
    if (const std::size_t hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    std::size_t stmt_start = 0;
    while (stmt_start <= text.size()) {
      std::size_t semi = text.find(';', stmt_start);
      if (semi == std::string_view::npos) semi = text.size();
      CommandResult r = run_statement(text.substr(stmt_start, semi - stmt_start),
                                      SourcePos{line, static_cast<int>(stmt_start) + 1});
      if (!r.silent) results.push_back(std::move(r));
      stmt_start = semi + 1;
    }
    line_start = line_end + 1;
    ++line;
  }
  return results;
}

}  // namespace rveer
