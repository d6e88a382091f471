#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "deepzero/sweep.hpp"
#include "deepzero_cli/config.hpp"

namespace deepzero::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

struct CheckResult {
  std::string module;
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  std::string relation;  // "<=", ">", "==", ...
  bool passed = false;
  std::string note;
};

// Every module's invariant suite. Residual checks (relation "<=") compare
// against cfg.tol when it is set, otherwise against their own tolerance.
std::vector<CheckResult> run_verify_checks(const RunConfig& cfg);

// Scenario (a): consistent Gaussian data on a grid through the zeros of
// cos(beta t). Scenario (b): xi = e^{-t^2/4}, eta = 0 on midpoint grids
// refined level by level. Fields: level, spacing, nodes, masked, zeros,
// exclusion, max_error, norm.
struct DemoRow {
  char scenario = 'a';
  SweepRecord rec;
};
std::vector<DemoRow> recover_demo_rows(double beta);

// Each writes its artifact (config comment line first) to `out` and
// diagnostics to `err`; the return value is the process exit status.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sampling_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_theta_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_recover_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gram_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Full command line without the program name. Output goes to cfg.out when
// set, otherwise to `out`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace deepzero::cli
