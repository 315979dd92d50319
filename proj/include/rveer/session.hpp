#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rveer/mapping_class.hpp"
#include "rveer/notation.hpp"
#include "rveer/surface.hpp"
#include "rveer/veer.hpp"

namespace rveer {

struct SessionOptions {
  int max_len = 8;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

/// Output of one statement: a JSON document, its plain-text rendering and the
/// process exit status it asks for.
struct CommandResult {
  nlohmann::ordered_json json;
  std::string text;
  int exit_code = 0;
  /// Statements that only change session state print nothing.
  bool silent = false;
};

/// Process exit status for a verdict: 0 overtwisted, 1 right-veering
/// positive, 2 inconclusive, 3 not applicable.
int exit_code(VerdictKind kind);

nlohmann::ordered_json verdict_json(const Surface& surface, const TwistWord& h, const Verdict& verdict);

/// A surface, its curve library and search options, driven by statements:
///
///   session   = { statement ( newline | ";" ) } ;
///   statement = "surface" "g=" int "b=" int
///             | "curve" name ":" word
///             | "set" ( "max_len" | "seed" | "threads" ) "=" int
///             | "classify" twists | "witness" twists
///             | "act" twists "on" target
///             | "intersect" operand ( "," operand | operand )
///             | "reduce" word | "relations" | "dump" | "curves"
///             | "diagram" { arc ( "," arc ) } ;
///   target    = arc | "curve" word | name | word ;
///
/// `#` starts a comment. The default surface is g=1 b=1.
class Session {
 public:
  explicit Session(SurfaceSpec spec = {1, 1});

  void set_surface(SurfaceSpec spec);
  const Surface& surface() const noexcept { return *surface_; }
  const CurveLibrary& library() const noexcept { return *library_; }
  SessionOptions& options() noexcept { return options_; }
  const SessionOptions& options() const noexcept { return options_; }

  CommandResult run_statement(std::string_view statement, SourcePos pos = {});
  /// Runs every statement in order and returns their results.
  std::vector<CommandResult> run_script(std::string_view script);

 private:
  std::unique_ptr<Surface> surface_;
  std::unique_ptr<CurveLibrary> library_;
  SessionOptions options_;
};

}  // namespace rveer
