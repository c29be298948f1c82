#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ordtop/json_io.hpp"

namespace ordtop::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  exit_internal_error = 2,
  /// A theorem report found a computation that disagrees with the statement.
  exit_claim_contradicted = 3,
};

/// Command-line settings that take precedence over the document.
struct Overrides {
  std::optional<IntervalSemantics> semantics;
  std::optional<Index> horizon;
  std::optional<unsigned> grid_scale;
  /// Worker threads for witness searches; never changes the report.
  unsigned jobs = 1;
};

struct Outcome {
  int exit_code = exit_ok;
  /// Empty unless the command computed a result.
  io::Json report;
  std::string text;
  std::string error;
};

/// Runs one command ("check-set", "convergence", "fit" or "theorems") on a
/// parsed problem document.
Outcome execute(const std::string &command, const io::Json &doc, const Overrides &o = {});

/// Full command line: argv[0] is ignored. Text goes to `out`, diagnostics to
/// `err`; the JSON report is written to the --output path when given.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace ordtop::cli
