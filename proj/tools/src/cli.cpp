#include <algorithm>
#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "deepzero/errors.hpp"
#include "deepzero_cli/commands.hpp"

namespace deepzero::cli {

namespace {

struct Subcommand {
  Command command;
  CLI::App* app;
  std::vector<std::pair<std::string, CLI::Option*>> options;
};

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Verify:
      return cmd_verify(cfg, out, err);
    case Command::SamplingSweep:
      return cmd_sampling_sweep(cfg, out, err);
    case Command::ThetaSweep:
      return cmd_theta_sweep(cfg, out, err);
    case Command::RecoverDemo:
      return cmd_recover_demo(cfg, out, err);
    case Command::GramExport:
      return cmd_gram_export(cfg, out, err);
  }
  return kExitFailure;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deep-zero seminorm laboratory in the Fock space", "deepzero"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "deepzero 0.1.0");

  std::map<std::string, std::string> raw;
  std::string config_path;
  std::vector<Subcommand> subs;

  const std::map<std::string, std::string> help{
      {"beta", "second base point (real, >= 0)"},
      {"parity", "index set E: even or odd"},
      {"degrees", "comma-separated truncation degrees, increasing"},
      {"thetas", "comma-separated exponents, decreasing, > 0"},
      {"pad", "row padding: auto or an integer"},
      {"tol", "override every residual tolerance"},
      {"out", "output file (default: standard output)"},
      {"format", "csv or json"},
      {"degree", "truncation degree"},
  };
  auto add = [&](Command c, const std::string& name, const std::string& desc, std::vector<std::string> keys) {
    Subcommand s{c, app.add_subcommand(name, desc), {}};
    s.app->add_option("--config", config_path, "key = value configuration file");
    for (const auto& k : keys) s.options.emplace_back(k, s.app->add_option("--" + k, raw[k], help.at(k)));
    subs.push_back(std::move(s));
  };
  add(Command::Verify, "verify", "run every module's invariant checks", {"tol", "beta", "parity", "pad", "out"});
  add(Command::SamplingSweep, "sampling-sweep", "smallest eigenvalue of the seminorm form against N",
      {"beta", "parity", "degrees", "pad", "out"});
  add(Command::ThetaSweep, "theta-sweep", "counterexample masses against theta", {"beta", "thetas", "out"});
  add(Command::RecoverDemo, "recover-demo", "recovery of phi from xi and eta", {"beta", "out"});
  add(Command::GramExport, "gram-export", "write the seminorm Gram matrix",
      {"degree", "beta", "parity", "pad", "format", "out"});

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      const int code = app.exit(e, out, err);
      return code;
    }
    err << "deepzero: " << e.what() << '\n';
    return kExitConfig;
  }

  const auto active = std::find_if(subs.begin(), subs.end(), [](const Subcommand& s) { return s.app->parsed(); });
  RunConfig cfg;
  cfg.command = active->command;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot read config file '" + config_path + "'");
      for (const auto& [k, v] : read_config_file(in)) apply_setting(cfg, k, v);
    }
    for (const auto& [k, opt] : active->options) {
      if (opt->count() > 0) apply_setting(cfg, k, raw[k]);
    }
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "deepzero: " << e.what() << '\n';
    return kExitConfig;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "deepzero: cannot write '" << cfg.out << "'\n";
      return kExitConfig;
    }
  }
  std::ostream& sink = cfg.out.empty() ? out : file;
  try {
    return dispatch(cfg, sink, err);
  } catch (const std::exception& e) {
    err << "deepzero " << to_string(cfg.command) << ": " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace deepzero::cli
