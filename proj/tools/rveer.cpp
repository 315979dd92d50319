// rveer: classify open books (S, h) given as Dehn twist words.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rveer/session.hpp"

namespace {

constexpr int kInputError = 4;
constexpr int kInternalError = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rveer::InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void apply_config(rveer::Session& session, const std::string& path) {
  try {
    const nlohmann::json j = nlohmann::json::parse(read_file(path));
    if (j.contains("surface")) session.set_surface(rveer::parse_surface_spec(j["surface"].get<std::string>()));
    if (j.contains("max_len")) session.options().max_len = j["max_len"].get<int>();
    if (j.contains("seed")) session.options().seed = j["seed"].get<std::uint64_t>();
    if (j.contains("threads")) session.options().threads = j["threads"].get<unsigned>();
  } catch (const nlohmann::json::exception& e) {
    throw rveer::InputError("config '" + path + "': " + e.what());
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right-veering and overtwistedness checks for open books given by Dehn twist words", "rveer"};
  app.require_subcommand(1);

  std::string surface_text, session_path, config_path;
  int max_len = -1;
  long long seed = -1;
  int threads = -1;
  bool json = false, quiet = false;
  if (const char* env = std::getenv("RVEER_CONFIG")) config_path = env;

  app.add_option("--surface", surface_text, "Surface, e.g. \"g=1 b=1\" (default g=1 b=1)");
  app.add_option("--session", session_path, "Session file run before the command (surface, curves, options)");
  app.add_option("--config", config_path, "JSON config with max_len, seed, threads, surface (default $RVEER_CONFIG)");
  app.add_option("--max-len", max_len, "Longest arc word tried by the witness search (default 8)")->check(
      CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for randomized relation checks")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", threads, "Witness search threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", json, "Print JSON for every command");
  app.add_flag("--quiet", quiet, "Print nothing; report through the exit status only");

  struct Command {
    std::string name;
    std::string help;
    std::vector<std::string> args;
  };
  std::vector<Command> commands = {
      {"classify", "Classify the open book with monodromy T(c1)^e1 T(c2)^e2 ...", {}},
      {"witness", "Search for an arc sent to its left", {}},
      {"act", "Apply a twist word: act <twists> on <arc|curve>", {}},
      {"intersect", "Geometric intersection number of two curves or arcs", {}},
      {"reduce", "Freely reduce a word", {}},
      {"relations", "Check braid, commutation and naturality relations on the standard chain", {}},
      {"dump", "Print the ribbon graph of the surface as JSON", {}},
      {"curves", "List the curve library", {}},
      {"diagram", "Graphviz rendering of the ribbon graph, optionally annotated with arcs", {}},
  };
  std::vector<CLI::App*> subs;
  for (Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("args", c.args, "Command text")->expected(0, -1);
    subs.push_back(sub);
  }
  std::string script_path, script_text;
  CLI::App* run = app.add_subcommand("run", "Run a session script (statements separated by newlines or ';')");
  run->fallthrough();
  run->add_option("file", script_path, "Script file");
  run->add_option("-e,--execute", script_text, "Script text");
  subs.push_back(run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    rveer::Session session;
    if (!config_path.empty()) apply_config(session, config_path);
    if (!surface_text.empty()) session.set_surface(rveer::parse_surface_spec(surface_text));

    std::vector<rveer::CommandResult> results;
    const auto apply_flags = [&] {
      if (max_len >= 0) session.options().max_len = max_len;
      if (seed >= 0) session.options().seed = static_cast<std::uint64_t>(seed);
      if (threads >= 0) session.options().threads = static_cast<unsigned>(threads);
    };
    apply_flags();
    if (!session_path.empty()) {
      for (auto& r : session.run_script(read_file(session_path))) results.push_back(std::move(r));
      apply_flags();
    }

    if (run->parsed()) {
      if (script_text.empty() && script_path.empty()) throw rveer::InputError("run needs a script file or -e <text>");
      const std::string script = script_text.empty() ? read_file(script_path) : script_text;
      for (auto& r : session.run_script(script)) results.push_back(std::move(r));
    } else {
      for (std::size_t i = 0; i < commands.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        const std::string statement = commands[i].name + " " + join(commands[i].args);
        results.push_back(session.run_statement(statement, rveer::SourcePos{1, 1}));
      }
    }

    int code = 0;
    for (const rveer::CommandResult& r : results) {
      if (!quiet) std::cout << (json ? r.json.dump(2) : r.text) << "\n";
      code = r.exit_code;
    }
    return code;
  } catch (const rveer::InputError& e) {
    std::cerr << "rveer: error";
    if (e.line() > 0) std::cerr << " at line " << e.line() << ", column " << e.column();
    std::cerr << ": " << e.what() << "\n";
    return kInputError;
  } catch (const rveer::UnsupportedInput& e) {
    std::cerr << "rveer: unsupported input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "rveer: internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
