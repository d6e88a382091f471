#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "deepzero/deep_zero.hpp"
#include "deepzero_cli/commands.hpp"
#include "deepzero_cli/config.hpp"

namespace deepzero::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  for (std::string c; std::getline(in, c, ',');) cells.push_back(c);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("deepzero_test_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Config, AppliesSettings) {
  RunConfig cfg;
  apply_setting(cfg, "beta", " 2.5 ");
  apply_setting(cfg, "parity", "odd");
  apply_setting(cfg, "degrees", "4, 8,16");
  apply_setting(cfg, "thetas", "0.9,0.6");
  apply_setting(cfg, "pad", "12");
  apply_setting(cfg, "tol", "1e-8");
  apply_setting(cfg, "format", "json");
  apply_setting(cfg, "degree", "10");
  EXPECT_EQ(cfg.beta, 2.5);
  EXPECT_EQ(cfg.parity, Parity::Odd);
  EXPECT_EQ(cfg.degrees, (std::vector<Index>{4, 8, 16}));
  EXPECT_EQ(cfg.thetas, (std::vector<double>{0.9, 0.6}));
  EXPECT_FALSE(cfg.pad.is_auto());
  EXPECT_EQ(cfg.pad.fixed_rows(), 12);
  EXPECT_EQ(cfg.tol.value(), 1e-8);
  EXPECT_EQ(cfg.degree, 10);
  apply_setting(cfg, "pad", "auto");
  EXPECT_TRUE(cfg.pad.is_auto());
}

TEST(Config, RejectsMalformedValues) {
  RunConfig cfg;
  EXPECT_THROW(apply_setting(cfg, "beta", "one"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "beta", "1.5x"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "degrees", "8,x"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "parity", "neither"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "pad", "-3"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "colour", "red"), ConfigError);
}

TEST(Config, ReadsKeyValueFile) {
  std::istringstream in("# experiment\nbeta = 2\n\n degrees=8,16 # trailing\n");
  const auto kv = read_config_file(in);
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv[0], (std::pair<std::string, std::string>{"beta", "2"}));
  EXPECT_EQ(kv[1], (std::pair<std::string, std::string>{"degrees", "8,16"}));
  std::istringstream bad("beta 2\n");
  EXPECT_THROW(read_config_file(bad), ConfigError);
}

TEST(Config, Validation) {
  RunConfig cfg;
  cfg.command = Command::ThetaSweep;
  EXPECT_NO_THROW(validate(cfg));
  cfg.thetas = {0.5, 0.5};
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg.thetas = {0.5, 0.0};
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg.thetas = {0.5};
  cfg.beta = 0.0;
  EXPECT_THROW(validate(cfg), ConfigError);

  cfg = RunConfig{};
  cfg.command = Command::SamplingSweep;
  cfg.beta = 0.0;
  EXPECT_NO_THROW(validate(cfg));
  cfg.degrees = {16, 8};
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg.degrees = {1, 8};
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg.degrees = {8};
  cfg.beta = -1.0;
  EXPECT_THROW(validate(cfg), ConfigError);

  cfg = RunConfig{};
  cfg.command = Command::GramExport;
  cfg.format = "xml";
  EXPECT_THROW(validate(cfg), ConfigError);

  cfg = RunConfig{};
  cfg.command = Command::Verify;
  cfg.beta = 0.0;
  EXPECT_NO_THROW(validate(cfg));
  cfg.tol = -1.0;
  EXPECT_THROW(validate(cfg), ConfigError);
}

TEST(Config, DescribeEchoesEveryField) {
  RunConfig cfg;
  cfg.command = Command::GramExport;
  const std::string d = describe(cfg);
  EXPECT_EQ(d.rfind("# config command=gram-export ", 0), 0u);
  for (const char* key : {"beta=", "parity=", "degrees=", "thetas=", "pad=auto", "tol=", "format=", "degree=", "out="}) {
    EXPECT_NE(d.find(key), std::string::npos) << key;
  }
}

TEST(Cli, ExitCodesForBadInput) {
  EXPECT_EQ(run({}).status, kExitConfig);
  EXPECT_EQ(run({"frobnicate"}).status, kExitConfig);
  EXPECT_EQ(run({"theta-sweep", "--beta", "0"}).status, kExitConfig);
  EXPECT_EQ(run({"theta-sweep", "--thetas", "0.1,0.2"}).status, kExitConfig);
  EXPECT_EQ(run({"sampling-sweep", "--degrees", "8,8"}).status, kExitConfig);
  EXPECT_EQ(run({"sampling-sweep", "--config", "/nonexistent/deepzero.cfg"}).status, kExitConfig);
  EXPECT_EQ(run({"recover-demo", "--thetas", "0.5"}).status, kExitConfig);
  EXPECT_EQ(run({"--help"}).status, kExitOk);
}

TEST(Cli, ConfigFileAndFlagOverride) {
  const fs::path cfg = temp_file("override.cfg");
  std::ofstream(cfg) << "beta = 2\ndegrees = 8,16\nparity = odd\n";
  const CliRun r = run({"sampling-sweep", "--config", cfg.string(), "--beta", "0.5"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "N,beta,parity,pad,lambda_min");
  EXPECT_EQ(split(lines[1])[0], "8");
  EXPECT_EQ(split(lines[1])[1], "0.5");
  EXPECT_EQ(split(lines[1])[2], "odd");
  EXPECT_EQ(r.out.rfind("# config command=sampling-sweep beta=0.5 parity=odd degrees=8,16", 0), 0u);
  fs::remove(cfg);
}

TEST(Cli, SamplingSweepDecreasesAndIsDeterministic) {
  const fs::path a = temp_file("sweep_a.csv");
  const fs::path b = temp_file("sweep_b.csv");
  ::setenv("DEEPZERO_THREADS", "1", 1);
  ASSERT_EQ(run({"sampling-sweep", "--beta", "1", "--parity", "even", "--degrees", "8,16,32,64,128", "--out", a.string()}).status,
            kExitOk);
  ::setenv("DEEPZERO_THREADS", "4", 1);
  ASSERT_EQ(run({"sampling-sweep", "--beta", "1", "--parity", "even", "--degrees", "8,16,32,64,128", "--out", b.string()}).status,
            kExitOk);
  ::unsetenv("DEEPZERO_THREADS");
  const std::string text = slurp(a);
  const std::string other = slurp(b);
  EXPECT_EQ(text.substr(text.find('\n')), other.substr(other.find('\n')));
  const auto lines = data_lines(text);
  ASSERT_EQ(lines.size(), 6u);
  double prev = INFINITY;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double lam = std::stod(split(lines[i])[4]);
    EXPECT_GT(lam, 0.0);
    EXPECT_LE(lam, prev);
    prev = lam;
  }
  EXPECT_LT(std::stod(split(lines[5])[4]), std::stod(split(lines[1])[4]));
  fs::remove(a);
  fs::remove(b);
}

TEST(Cli, SamplingSweepDegenerateBeta) {
  const CliRun r = run({"sampling-sweep", "--beta", "0", "--degrees", "4,8,16"});
  ASSERT_EQ(r.status, kExitOk);
  const auto lines = data_lines(r.out);
  for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_EQ(split(lines[i])[4], "1");
}

TEST(Cli, SamplingSweepPartialMarker) {
  const CliRun r = run({"sampling-sweep", "--beta", "2", "--degrees", "4,40", "--pad", "0"});
  EXPECT_EQ(r.status, kExitFailure);
  EXPECT_NE(r.out.find("# partial: N=4"), std::string::npos);
}

TEST(Cli, ThetaSweepAboveHalf) {
  const CliRun r = run({"theta-sweep", "--beta", "1", "--thetas", "1,0.8,0.6"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "theta,beta,numerator,denominator,ratio,error");
  double prev = INFINITY;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i]);
    ASSERT_EQ(cells.size(), 6u);
    EXPECT_LE(std::stod(cells[2]), 3.0);
    EXPECT_LT(std::stod(cells[4]), prev);
    prev = std::stod(cells[4]);
    EXPECT_EQ(cells[5], "");
  }
}

TEST(Cli, ThetaSweepFlagsDivergentRows) {
  const CliRun r = run({"theta-sweep", "--beta", "1", "--thetas", "0.5"});
  EXPECT_EQ(r.status, kExitFailure);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_NE(lines[1].find("nan,nan,\"quadrature not converged"), std::string::npos);
  EXPECT_LE(std::stod(split(lines[1])[2]), 3.0);
}

TEST(Cli, RecoverDemo) {
  const CliRun r = run({"recover-demo", "--beta", "1"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "scenario,level,spacing,nodes,masked,zeros,exclusion,max_error,norm");
  const auto a = split(lines[1]);
  EXPECT_EQ(a[0], "a");
  EXPECT_EQ(a[4], a[5]);
  EXPECT_LT(std::stod(a[7]), 1e-10);
  EXPECT_GT(std::stod(split(lines[5])[8]), 10 * std::stod(split(lines[2])[8]));
  for (std::size_t i = 3; i < lines.size(); ++i) {
    EXPECT_GT(std::stod(split(lines[i])[8]), std::stod(split(lines[i - 1])[8]));
  }
}

TEST(Cli, GramExportJson) {
  const CliRun r = run({"gram-export", "--degree", "6", "--beta", "1", "--parity", "odd", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("form").at("E"), "odd");
  EXPECT_EQ(j.at("form").at("degree"), 6);
  const SeminormForm form = seminorm_gram(IndexSet::odd(), 1.0, 6);
  EXPECT_EQ(j.at("form").at("pad"), form.pad);
  EXPECT_EQ(j.at("form").at("matrix").at("re")[7].get<double>(), form.matrix(1, 1).real());
  EXPECT_EQ(j.at("displacement").at("rows"), 6 + form.pad);
  EXPECT_EQ(j.at("config").get<std::string>().rfind("config command=gram-export", 0), 0u);
}

TEST(Cli, GramExportCsv) {
  const CliRun r = run({"gram-export", "--degree", "3", "--beta", "0"});
  ASSERT_EQ(r.status, kExitOk);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(lines[1], "0,0,1,0");
  EXPECT_EQ(lines[2], "0,1,0,0");
}

TEST(Cli, Verify) {
  const CliRun ok = run({"verify"});
  EXPECT_EQ(ok.status, kExitOk) << ok.out;
  const auto results = run_verify_checks(RunConfig{});
  EXPECT_GE(results.size(), 40u);
  const CliRun bad = run({"verify", "--tol", "1e-30"});
  EXPECT_EQ(bad.status, kExitFailure);
  EXPECT_NE(bad.err.find("first failing invariant"), std::string::npos);
  EXPECT_EQ(run({"verify", "--beta", "0"}).status, kExitOk);
}

#ifdef DEEPZERO_EXE
int shell(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

TEST(Executable, ExitStatuses) {
  const std::string exe = DEEPZERO_EXE;
  EXPECT_EQ(shell(exe + " --help > /dev/null"), 0);
  EXPECT_EQ(shell(exe + " sampling-sweep --degrees 8,4 2> /dev/null"), 2);
  EXPECT_EQ(shell(exe + " theta-sweep --thetas 0.5 > /dev/null 2>&1"), 1);
  EXPECT_EQ(shell(exe + " recover-demo > /dev/null"), 0);
}
#endif

}  // namespace
}  // namespace deepzero::cli
