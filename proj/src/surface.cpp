#include "rveer/surface.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace rveer {

namespace {

std::vector<std::string> default_edge_names(int genus, int extra) {
  std::vector<std::string> names;
  for (int k = 1; k <= genus; ++k) {
    const std::string suffix = genus == 1 ? "" : std::to_string(k);
    names.push_back("a" + suffix);
    names.push_back("b" + suffix);
  }
  for (int m = 1; m <= extra; ++m) names.push_back(extra == 1 ? "z" : "z" + std::to_string(m));
  return names;
}

}  // namespace

Surface::Surface(SurfaceSpec spec) : spec_(spec), rank_(2 * spec.genus + spec.boundary_count - 1) {
  if (spec.genus < 0) throw InputError("genus must be nonnegative");
  if (spec.boundary_count < 1) throw InputError("boundary_count must be at least 1 (closed surfaces are not supported)");

  for (int k = 1; k <= spec.genus; ++k) {
    const Letter a = 2 * k - 1;
    const Letter b = 2 * k;
    ribbon_.insert(ribbon_.end(), {a, b, -a, -b});
  }
  for (int m = 1; m < spec.boundary_count; ++m) {
    const Letter z = 2 * spec.genus + m;
    ribbon_.insert(ribbon_.end(), {z, -z});
  }

  position_.assign(static_cast<std::size_t>(2 * rank_ + 1), -1);
  for (std::size_t i = 0; i < ribbon_.size(); ++i) position_[static_cast<std::size_t>(ribbon_[i] + rank_)] = static_cast<int>(i);

  corner_owner_.assign(static_cast<std::size_t>(2 * rank_ + 1), 0);
  if (rank_ == 0) {
    cycles_.push_back(BoundaryCycle{{0}, {}});
    corner_owner_[0] = 1;
  } else {
    // Face tracing: after reading x we sit in the corner following x^-1 and
    // leave along next(x^-1).
    std::vector<bool> seen(static_cast<std::size_t>(2 * rank_ + 1), false);
    for (Letter start : ribbon_) {
      if (seen[static_cast<std::size_t>(start + rank_)]) continue;
      BoundaryCycle cycle;
      Letter x = start;
      do {
        seen[static_cast<std::size_t>(x + rank_)] = true;
        cycle.word.push_back(x);
        x = next(-x);
      } while (x != start);
      for (std::size_t t = 0; t < cycle.word.size(); ++t) {
        const Letter before = t == 0 ? cycle.word.back() : cycle.word[t - 1];
        cycle.corners.push_back(-before);
      }
      cycles_.push_back(std::move(cycle));
      for (Letter c : cycles_.back().corners) corner_owner_[static_cast<std::size_t>(c + rank_)] = static_cast<int>(cycles_.size());
    }
  }
  if (static_cast<int>(cycles_.size()) != spec.boundary_count) {
    throw std::logic_error("face tracing produced " + std::to_string(cycles_.size()) + " boundary cycles, expected " +
                           std::to_string(spec.boundary_count));
  }
  names_ = default_edge_names(spec.genus, spec.boundary_count - 1);
}

Letter Surface::next(Letter x) const {
  const int p = position(x);
  return ribbon_[static_cast<std::size_t>((p + 1) % half_edge_count())];
}

int Surface::boundary_of_corner(Letter corner) const {
  if (corner < -rank_ || corner > rank_ || (corner == 0 && rank_ != 0)) throw InputError("no such corner");
  return corner_owner_[static_cast<std::size_t>(corner + rank_)];
}

Letter Surface::basepoint(int component) const {
  if (component < 1 || component > boundary_count()) {
    throw InputError("boundary component " + std::to_string(component) + " does not exist");
  }
  return cycles_[static_cast<std::size_t>(component - 1)].basepoint();
}

const Word& Surface::boundary_word(int component) const {
  if (component < 1 || component > boundary_count()) {
    throw InputError("boundary component " + std::to_string(component) + " does not exist");
  }
  return cycles_[static_cast<std::size_t>(component - 1)].word;
}

std::string Surface::letter_name(Letter x) const {
  std::string name = edge_name(x < 0 ? -x : x);
  if (x < 0) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  return name;
}

Surface build_surface(const SurfaceSpec& spec) { return Surface(spec); }

SurfaceSpec parse_surface_spec(const std::string& text) {
  static const std::regex pattern(R"(^\s*(?:surface\s+)?g\s*=\s*(-?\d+)\s*[, ]\s*b\s*=\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InputError("expected `surface g=<int> b=<int>`, got `" + text + "`");
  SurfaceSpec spec{std::stoi(m[1].str()), std::stoi(m[2].str())};
  if (spec.genus < 0) throw InputError("genus must be nonnegative");
  if (spec.boundary_count < 1) throw InputError("boundary_count must be at least 1 (closed surfaces are not supported)");
  return spec;
}

std::string dump_surface(const Surface& s) {
  nlohmann::ordered_json j;
  j["genus"] = s.spec().genus;
  j["boundary_count"] = s.spec().boundary_count;
  j["euler_characteristic"] = s.euler_characteristic();
  auto edges = nlohmann::ordered_json::array();
  for (int e = 1; e <= s.rank(); ++e) edges.push_back({{"index", e}, {"name", s.edge_name(e)}});
  j["edges"] = edges;
  auto ribbon = nlohmann::ordered_json::array();
  for (Letter x : s.ribbon_order()) ribbon.push_back(s.letter_name(x));
  j["ribbon_order"] = ribbon;
  auto cycles = nlohmann::ordered_json::array();
  int index = 1;
  for (const BoundaryCycle& c : s.boundary_cycles()) {
    nlohmann::ordered_json cj;
    cj["component"] = index++;
    auto corners = nlohmann::ordered_json::array();
    for (Letter h : c.corners) corners.push_back(h == 0 ? std::string("vertex") : "after " + s.letter_name(h));
    cj["corners"] = corners;
    auto word = nlohmann::ordered_json::array();
    for (Letter x : c.word) word.push_back(s.letter_name(x));
    cj["word"] = word;
    cj["basepoint"] = c.basepoint() == 0 ? std::string("vertex") : "after " + s.letter_name(c.basepoint());
    cycles.push_back(cj);
  }
  j["boundary_cycles"] = cycles;
  return j.dump(2);
}

std::string surface_dot(const Surface& s, std::span<const std::string> annotations) {
  std::ostringstream out;
  out << "digraph ribbon {\n  v [shape=circle, label=\"v\"];\n";
  out << "  // counterclockwise half-edge order:";
  for (Letter x : s.ribbon_order()) out << ' ' << s.letter_name(x);
  out << "\n";
  for (int e = 1; e <= s.rank(); ++e) {
    out << "  v -> v [label=\"" << s.edge_name(e) << "\", taillabel=\"" << s.position(e) << "\", headlabel=\""
        << s.position(-e) << "\"];\n";
  }
  int index = 1;
  for (const BoundaryCycle& c : s.boundary_cycles()) {
    out << "  d" << index << " [shape=box, label=\"boundary " << index << ":";
    for (Letter x : c.word) out << ' ' << s.letter_name(x);
    out << "\"];\n";
    ++index;
  }
  if (!annotations.empty()) {
    out << "  legend [shape=note, label=\"";
    for (std::size_t i = 0; i < annotations.size(); ++i) out << (i ? "\\n" : "") << annotations[i];
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rveer
