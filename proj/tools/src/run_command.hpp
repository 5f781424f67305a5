#pragma once

#include <cstdint>
#include <string>

namespace ngit_cli {

enum class OutputMode { Text, Json };

// One parsed invocation. Only the fields a given subcommand documents are
// read by its handler; the argument parser guarantees the required ones are
// present and the unknown ones were rejected.
struct Command {
  std::string name;  // "invariants", "nullcone", "stability torus", ...
  OutputMode mode = OutputMode::Text;
  std::uint64_t budget = 0;  // resolved step limit (flag, environment, default)

  unsigned n = 0;
  unsigned long p = 1;
  unsigned long q = 1;
  std::string points;      // configuration grammar "a:b^m,..."
  std::string weights;     // "2;2;0" torus vectors or "1,1,2" grading weights
  std::string support;     // comma-separated coordinate indices
  std::string map_source;  // substitution JSON text (already slurped)
  std::uint64_t degree = 0;  // graded basis degree; 0 means derived default
  std::string selector;      // poincare series choice; empty means quotient
};

struct RunReport {
  int exit_code = 0;
  std::string payload;      // stdout; byte-deterministic for a given command
  std::string diagnostics;  // stderr; timing and budget notes, free-form
};

// Dispatches to the library and renders the result. Never throws: failures
// come back as exit codes (1 malformed input, 2 step budget exceeded,
// 3 stability criterion and oracle disagree).
RunReport run_command(const Command& c);

}  // namespace ngit_cli
