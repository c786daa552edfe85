#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rzs/error.hpp"

namespace rzs::cli {

enum class Command { zeros, count, bubble, gap, compare };
enum class OutputFormat { csv, json };

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kModuleError = 3,
  kIoError = 4,
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  Command command = Command::zeros;

  // zeros / compare
  double t_min = 0.0;
  double t_max = 0.0;
  double tol = 1e-8;
  int n_max = 0;

  // count
  double t = 0.0;
  double correction = 7.0 / 8.0;

  // bubble / compare
  double mass2 = 1.0;
  double grid_t_min = 1.0;
  double grid_t_max = 1.0e6;
  int points = 61;

  // gap
  double coupling = 0.0;
  int n_components = 0;
  double cutoff = 0.0;

  std::string out_path;  // empty writes to stdout
  OutputFormat format = OutputFormat::csv;
  unsigned threads = 1;
};

// Parses argv (argv[0] is the program name). Throws UsageError on bad flags
// or a malformed RZS_THREADS value. Help requests are reported through
// `help_text` with no config returned.
std::optional<RunConfig> parse_command_line(const std::vector<std::string>& args, std::string* help_text,
                                            const char* threads_env);

// Dispatches a validated config. Output is produced in memory and then
// written atomically to out_path (temp file + rename) or to `out`. On any
// error nothing is written and a single-line diagnostic goes to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse + run, as used by the executable.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rzs::cli
