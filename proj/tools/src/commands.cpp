#include "deepzero_cli/commands.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <variant>

#include <nlohmann/json.hpp>

#include "deepzero/deep_zero.hpp"
#include "deepzero/errors.hpp"
#include "deepzero/parallel.hpp"
#include "deepzero/serialize.hpp"

namespace deepzero::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDemoWindow = 12.0;
constexpr int kDemoNodesPerQuarter = 8;
constexpr int kDemoLevels = 4;

std::size_t count_cos_zeros(double beta, double window) {
  std::size_t n = 0;
  for (int k = 0; (k + 0.5) * kPi / beta <= window * (1 + 1e-12); ++k) n += 2;
  return n;
}

double recovered_norm(const Recovered& r) {
  double s = 0.0;
  const auto& w = r.phi.grid()->weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (r.valid[i]) s += w[i] * std::norm(r.phi.values()[static_cast<Index>(i)]);
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<DemoRow> recover_demo_rows(double beta) {
  std::vector<DemoRow> rows;
  {
    // trapezoid nodes at multiples of h hit every zero of cos(beta t) exactly
    const double h = kPi / (2.0 * beta * kDemoNodesPerQuarter);
    const int half = std::max(1, static_cast<int>(std::ceil(kDemoWindow / h)));
    const GridPtr grid = uniform_grid(h, half, false);
    const L2Function phi = L2Function::sample(grid, [](double t) { return Complex{std::exp(-0.25 * t * t)}; });
    const XiEta parts = xi_eta(phi, beta, Parity::Even);
    const Recovered r = recover_phi(parts.xi, parts.eta, beta, kDefaultExclusion);
    double max_error = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
      const auto k = static_cast<Index>(i);
      if (r.valid[i]) max_error = std::max(max_error, std::abs(r.phi.values()[k] - phi.values()[k]));
    }
    DemoRow row{'a', {}};
    row.rec.set("level", 0).set("spacing", h).set("nodes", static_cast<double>(grid->size()));
    row.rec.set("masked", static_cast<double>(r.masked));
    row.rec.set("zeros", static_cast<double>(count_cos_zeros(beta, half * h)));
    row.rec.set("exclusion", kDefaultExclusion).set("max_error", max_error).set("norm", recovered_norm(r));
    rows.push_back(std::move(row));
  }
  for (int level = 1; level <= kDemoLevels; ++level) {
    // midpoint nodes straddle each zero at distance h/2
    const double n = 2.0 * std::pow(8.0, level - 1);
    const double h = kPi / (2.0 * beta * n);
    const int half = std::max(1, static_cast<int>(std::ceil(kDemoWindow / h)));
    const GridPtr grid = uniform_grid(h, half, true);
    const L2Function xi = L2Function::sample(grid, [](double t) { return Complex{std::exp(-0.25 * t * t)}; });
    const L2Function eta = L2Function::zero(grid);
    const double exclusion = std::sin(0.25 * beta * h);
    const Recovered r = recover_phi(xi, eta, beta, exclusion);
    DemoRow row{'b', {}};
    row.rec.set("level", level).set("spacing", h).set("nodes", static_cast<double>(grid->size()));
    row.rec.set("masked", static_cast<double>(r.masked));
    row.rec.set("zeros", static_cast<double>(count_cos_zeros(beta, half * h)));
    row.rec.set("exclusion", exclusion).set("max_error", std::nan("")).set("norm", recovered_norm(r));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_sampling_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using Outcome = std::variant<SamplingConstant, std::string>;
  const IndexSet E = IndexSet::of(cfg.parity);
  const auto results = parallel_map(cfg.degrees.size(), [&](std::size_t i) -> Outcome {
    try {
      return sampling_constant(E, cfg.beta, cfg.degrees[i], cfg.pad);
    } catch (const Error& e) {
      return std::string(e.what());
    }
  });
  out << describe(cfg) << '\n' << "N,beta,parity,pad,lambda_min\n";
  double prev = INFINITY;
  bool monotone = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (const auto* msg = std::get_if<std::string>(&results[i])) {
      out << "# partial: N=" << cfg.degrees[i] << ": " << *msg << '\n';
      err << "sampling-sweep: N=" << cfg.degrees[i] << ": " << *msg << '\n';
      return kExitFailure;
    }
    const auto& s = std::get<SamplingConstant>(results[i]);
    out << cfg.degrees[i] << ',' << format_number(cfg.beta) << ',' << to_string(cfg.parity) << ',' << s.pad << ','
        << format_number(s.lambda_min) << '\n';
    if (s.lambda_min > prev) monotone = false;
    prev = s.lambda_min;
  }
  if (!monotone) {
    err << "sampling-sweep: lambda_min increased with N\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_theta_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = parallel_map(cfg.thetas.size(), [&](std::size_t i) {
    const double theta = cfg.thetas[i];
    SweepRecord rec;
    rec.set("theta", theta).set("beta", cfg.beta);
    try {
      const double num = counterexample_numerator(theta, cfg.beta).value.real();
      rec.set("numerator", num);
      const double den = counterexample_denominator(theta, cfg.beta).value.real();
      rec.set("denominator", den).set("ratio", num / den);
    } catch (const Error& e) {
      rec.set_error(e.what());
    }
    return rec;
  });
  out << describe(cfg) << '\n' << "theta,beta,numerator,denominator,ratio,error\n";
  const std::vector<std::string> columns{"theta", "beta", "numerator", "denominator", "ratio"};
  int status = kExitOk;
  std::optional<double> prev_ratio;
  for (const auto& rec : rows) {
    write_csv_row(out, rec, columns, true);
    if (!rec.ok()) {
      err << "theta-sweep: theta=" << format_number(rec.at("theta")) << ": " << rec.error() << '\n';
      status = kExitFailure;
      continue;
    }
    if (rec.at("numerator") > 3.0) {
      err << "theta-sweep: numerator above 3 at theta=" << format_number(rec.at("theta")) << '\n';
      status = kExitFailure;
    }
    if (prev_ratio && !(rec.at("ratio") < *prev_ratio)) {
      err << "theta-sweep: ratio not decreasing at theta=" << format_number(rec.at("theta")) << '\n';
      status = kExitFailure;
    }
    prev_ratio = rec.at("ratio");
  }
  return status;
}

int cmd_recover_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = recover_demo_rows(cfg.beta);
  out << describe(cfg) << '\n' << "scenario,level,spacing,nodes,masked,zeros,exclusion,max_error,norm\n";
  const std::vector<std::string> columns{"level", "spacing", "nodes", "masked", "zeros", "exclusion", "max_error",
                                         "norm"};
  for (const auto& row : rows) {
    out << row.scenario << ',';
    write_csv_row(out, row.rec, columns);
  }
  int status = kExitOk;
  const SweepRecord& a = rows.front().rec;
  if (!(a.at("max_error") < 1e-10)) {
    err << "recover-demo: consistent data not recovered (max error " << format_number(a.at("max_error")) << ")\n";
    status = kExitFailure;
  }
  if (a.at("masked") != a.at("zeros")) {
    err << "recover-demo: masked nodes do not match the zeros of cos\n";
    status = kExitFailure;
  }
  const double first = rows[1].rec.at("norm");
  const double last = rows.back().rec.at("norm");
  if (!(last > 10.0 * first)) {
    err << "recover-demo: incompatible data norm grew only by " << format_number(last / first) << '\n';
    status = kExitFailure;
  }
  return status;
}

int cmd_gram_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const SeminormForm form = seminorm_gram(IndexSet::of(cfg.parity), cfg.beta, cfg.degree, cfg.pad);
    if (cfg.format == "json") {
      nlohmann::ordered_json j;
      j["config"] = describe(cfg).substr(2);
      j["form"] = to_json(form);
      j["displacement"] = to_json(displacement_matrix(cfg.beta, cfg.degree + form.pad, cfg.degree));
      out << j.dump(1) << '\n';
    } else {
      out << describe(cfg) << '\n' << "# pad=" << form.pad << " tail_leak=" << format_number(form.tail_leak) << '\n';
      out << "row,col,re,im\n";
      for (Index r = 0; r < form.matrix.rows(); ++r) {
        for (Index c = 0; c < form.matrix.cols(); ++c) {
          out << r << ',' << c << ',' << format_number(form.matrix(r, c).real()) << ','
              << format_number(form.matrix(r, c).imag()) << '\n';
        }
      }
    }
  } catch (const Error& e) {
    err << "gram-export: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace deepzero::cli
