#include "deepzero/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "deepzero/errors.hpp"

namespace deepzero {

std::string_view to_string(GridKind kind) {
  switch (kind) {
    case GridKind::GaussHermiteScaled:
      return "gauss-hermite-scaled";
    case GridKind::AdaptivePanel:
      return "adaptive-panel";
    case GridKind::Uniform:
      return "uniform";
  }
  return "unknown";
}

QuadratureGrid::QuadratureGrid(GridKind kind, std::vector<double> nodes, std::vector<double> weights)
    : kind_(kind), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size()) throw GridError("grid: nodes and weights differ in length");
  if (nodes_.empty()) throw GridError("grid: no nodes");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i]) || !(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw GridError("grid: nodes must be finite and weights strictly positive");
    }
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) throw GridError("grid: nodes must be strictly increasing");
  }
}

bool QuadratureGrid::is_symmetric(double rel_tol) const {
  const std::size_t n = nodes_.size();
  const double scale = std::max(std::abs(nodes_.front()), std::abs(nodes_.back()));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    if (std::abs(nodes_[i] + nodes_[j]) > rel_tol * scale) return false;
    if (std::abs(weights_[i] - weights_[j]) > rel_tol * weights_[i]) return false;
  }
  return true;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

void hermite_functions(double x, std::span<double> out) {
  if (out.empty()) return;
  out[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (out.size() == 1) return;
  out[1] = std::numbers::sqrt2 * x * out[0];
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kd = static_cast<double>(k);
    out[k + 1] = std::sqrt(2.0 / (kd + 1.0)) * x * out[k] - std::sqrt(kd / (kd + 1.0)) * out[k - 1];
  }
}

GridPtr gauss_hermite_grid(int n) {
  // psi_0 underflows past |x| ~ 38, i.e. beyond roughly 700 nodes
  if (n < 1 || n > 600) throw DomainError("gauss_hermite_grid: n must lie in [1, 600]");
  // Golub-Welsch for the weight e^{-x^2}, then Newton polish on psi_n.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw EigenNotConverged("gauss_hermite_grid: tridiagonal solve failed");

  std::vector<double> psi(static_cast<std::size_t>(n) + 1);
  std::vector<double> nodes(static_cast<std::size_t>(n));
  std::vector<double> weights(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      hermite_functions(x, psi);
      const double d = std::sqrt(2.0 * n) * psi[static_cast<std::size_t>(n - 1)] -
                       x * psi[static_cast<std::size_t>(n)];
      if (d == 0.0) break;
      x -= psi[static_cast<std::size_t>(n)] / d;
    }
    hermite_functions(x, std::span<double>(psi).first(static_cast<std::size_t>(n)));
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += psi[static_cast<std::size_t>(k)] * psi[static_cast<std::size_t>(k)];
    nodes[static_cast<std::size_t>(i)] = std::numbers::sqrt2 * x;
    weights[static_cast<std::size_t>(i)] = std::numbers::sqrt2 / s;
  }
  // exact symmetry
  for (int i = 0; i < n / 2; ++i) {
    const auto a = static_cast<std::size_t>(i);
    const auto b = static_cast<std::size_t>(n - 1 - i);
    const double t = 0.5 * (nodes[b] - nodes[a]);
    const double w = 0.5 * (weights[a] + weights[b]);
    nodes[a] = -t;
    nodes[b] = t;
    weights[a] = weights[b] = w;
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return std::make_shared<const QuadratureGrid>(GridKind::GaussHermiteScaled, std::move(nodes),
                                                std::move(weights));
}

GridPtr uniform_grid(double spacing, int half_count, bool midpoint) {
  if (!(spacing > 0.0) || half_count < 1) throw DomainError("uniform_grid: bad spacing or count");
  std::vector<double> nodes;
  std::vector<double> weights;
  if (midpoint) {
    for (int k = -half_count; k < half_count; ++k) {
      nodes.push_back((k + 0.5) * spacing);
      weights.push_back(spacing);
    }
  } else {
    for (int k = -half_count; k <= half_count; ++k) {
      nodes.push_back(k * spacing);
      weights.push_back(std::abs(k) == half_count ? 0.5 * spacing : spacing);
    }
  }
  return std::make_shared<const QuadratureGrid>(GridKind::Uniform, std::move(nodes), std::move(weights));
}

GridPtr panel_grid(std::span<const double> breakpoints, int order) {
  if (breakpoints.size() < 2) throw DomainError("panel_grid: need at least two breakpoints");
  const GaussRule gl = gauss_legendre(order);
  std::vector<double> nodes;
  std::vector<double> weights;
  for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
    const double a = breakpoints[p];
    const double b = breakpoints[p + 1];
    if (!(b > a)) throw DomainError("panel_grid: breakpoints must increase");
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      nodes.push_back(mid + half * gl.nodes[i]);
      weights.push_back(half * gl.weights[i]);
    }
  }
  return std::make_shared<const QuadratureGrid>(GridKind::AdaptivePanel, std::move(nodes),
                                                std::move(weights));
}

namespace {

class CosSingularIntegrator {
 public:
  CosSingularIntegrator(const std::function<Complex(double)>& g, double beta, double p,
                        const CosSingularOptions& opts)
      : g_(g), beta_(beta), p_(p), opts_(opts), gl_(gauss_legendre(opts.order)) {}

  Complex total(int layers) const {
    const double period = std::numbers::pi / beta_;
    const double first = 0.5 * period;
    const double cut = opts_.cutoff;
    std::vector<double> zeros;
    for (int k = 0;; ++k) {
      const double s = first + k * period;
      if (s >= cut) break;
      zeros.push_back(s);
    }
    Complex sum{};
    for (double side : {1.0, -1.0}) {
      // panels [0, z0], [z0, z1], ..., [z_last, cut] mirrored by `side`
      double a = 0.0;
      bool a_zero = false;
      for (std::size_t k = 0; k <= zeros.size(); ++k) {
        const bool b_zero = k < zeros.size();
        const double b = b_zero ? zeros[k] : cut;
        // cos(beta t) is positive on [0, z0] and alternates from there
        const double sign = (opts_.times_sign && k % 2 == 1) ? -1.0 : 1.0;
        if (b > a) sum += sign * panel(side, a, a_zero, b, b_zero, layers);
        a = b;
        a_zero = b_zero;
      }
    }
    return sum;
  }

 private:
  double abs_cos_pow(double t) const { return std::pow(std::abs(std::cos(beta_ * t)), p_); }

  // Panel on the mirrored side: physical t = side * x for x in [a, b].
  Complex panel(double side, double a, bool a_zero, double b, bool b_zero, int layers) const {
    if (!a_zero && !b_zero) return smooth(side, a, b);
    const double c = 0.5 * (a + b);
    Complex s{};
    s += a_zero ? graded(side, a, +1.0, c - a, layers) : smooth(side, a, c);
    s += b_zero ? graded(side, b, -1.0, b - c, layers) : smooth(side, c, b);
    return s;
  }

  Complex smooth(double side, double a, double b) const {
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / opts_.max_width)));
    const double h = (b - a) / pieces;
    Complex s{};
    for (int q = 0; q < pieces; ++q) {
      const double lo = a + q * h;
      const double mid = lo + 0.5 * h;
      for (std::size_t i = 0; i < gl_.nodes.size(); ++i) {
        const double t = side * (mid + 0.5 * h * gl_.nodes[i]);
        s += (0.5 * h * gl_.weights[i]) * g_(t) * abs_cos_pow(t);
      }
    }
    return s;
  }

  // Half panel starting at the zero s, extending `d` in direction `dir`.
  Complex graded(double side, double s, double dir, double d, int layers) const {
    const double r = opts_.grading;
    Complex sum{};
    double hi = d;
    for (int k = 0; k < layers; ++k) {
      const double lo = hi * r;
      const double mid = 0.5 * (lo + hi);
      const double half = 0.5 * (hi - lo);
      for (std::size_t i = 0; i < gl_.nodes.size(); ++i) {
        const double u = mid + half * gl_.nodes[i];
        const double t = side * (s + dir * u);
        sum += (half * gl_.weights[i]) * g_(t) * std::pow(std::abs(std::sin(beta_ * u)), p_);
      }
      hi = lo;
    }
    if (p_ > -1.0 && hi > 0.0) {
      const double t = side * (s + dir * 0.5 * hi);
      sum += g_(t) * (std::pow(beta_, p_) * std::pow(hi, p_ + 1.0) / (p_ + 1.0));
    }
    return sum;
  }

  const std::function<Complex(double)>& g_;
  double beta_;
  double p_;
  CosSingularOptions opts_;
  GaussRule gl_;
};

}  // namespace

QuadratureResult integrate_cos_singular(const std::function<Complex(double)>& g, double beta,
                                        double exponent, const CosSingularOptions& opts) {
  if (!(beta > 0.0)) throw DomainError("integrate_cos_singular: beta must be positive");
  if (!(opts.cutoff > 0.0) || opts.max_levels < 1 || opts.base_layers < 1 || opts.order < 1) {
    throw DomainError("integrate_cos_singular: bad options");
  }
  const CosSingularIntegrator integrator(g, beta, exponent, opts);
  Complex prev = integrator.total(opts.base_layers);
  double change = 0.0;
  for (int level = 1; level <= opts.max_levels; ++level) {
    const Complex cur = integrator.total(opts.base_layers << level);
    const double scale = std::abs(cur);
    change = scale > 0.0 ? std::abs(cur - prev) / scale : std::abs(cur - prev);
    if (std::isfinite(change) && change <= opts.rel_tol) return {cur, change, level};
    prev = cur;
  }
  throw QuadratureNotConverged(std::abs(prev), change, opts.max_levels);
}

}  // namespace deepzero
