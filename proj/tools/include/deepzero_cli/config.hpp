#pragma once

// Run configuration for the deepzero command line: defaults, then an
// optional key=value file, then explicit flags.

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deepzero/deep_zero.hpp"
#include "deepzero/operators.hpp"

namespace deepzero::cli {

enum class Command { Verify, SamplingSweep, ThetaSweep, RecoverDemo, GramExport };

std::string_view to_string(Command c);

// Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Verify;
  double beta = 1.0;
  Parity parity = Parity::Even;
  std::vector<Index> degrees{8, 16, 32, 64, 128};
  std::vector<double> thetas{0.5, 0.2, 0.1, 0.05};
  Pad pad = Pad::automatic();
  std::optional<double> tol;
  std::string out;  // empty: standard output
  std::string format = "csv";
  Index degree = 16;
};

// Recognized keys: beta, parity, degrees, thetas, pad, tol, out, format, degree.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// key = value lines; '#' starts a comment; blank lines are skipped.
std::vector<std::pair<std::string, std::string>> read_config_file(std::istream& in);

// Command-specific checks (beta range, list ordering, format).
void validate(const RunConfig& cfg);

// Single line "# config command=... beta=... ..." with every effective field.
std::string describe(const RunConfig& cfg);

}  // namespace deepzero::cli
