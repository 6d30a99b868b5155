// Command-line front end: parses arguments, loads companion models, runs the
// satellite pipeline, and streams tables or reports.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace floerbox {

enum class Command { Hfk, Invariants, Sweep, Csc, Selftest };
enum class Pattern { Mazur, Cable21 };
enum class OutputFormat { Tsv, Json };

struct RunConfig {
  Command command = Command::Selftest;
  Pattern pattern = Pattern::Mazur;
  std::string model_path;
  // Single-framing commands use n_min == n_max; sweep uses the full range.
  int64_t n_min = 0;
  int64_t n_max = 0;
  OutputFormat output = OutputFormat::Tsv;
  std::optional<int64_t> tau_satellite;
  bool strict_tau = false;
};

// Executes a parsed configuration. Results stream to `out`; failures write a
// one-line error JSON to `err`. Returns 0 on success.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses command-line arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace floerbox
