#include "deepzero/deep_zero.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "deepzero/errors.hpp"

namespace deepzero {

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parse_parity(std::string_view s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw DomainError("parity must be 'even' or 'odd'");
}

IndexSet IndexSet::explicit_set(std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.front() < 0) throw DomainError("IndexSet: negative member");
  return IndexSet(Kind::Explicit, std::move(members));
}

bool IndexSet::contains(Index j) const {
  switch (kind_) {
    case Kind::Even:
      return j % 2 == 0;
    case Kind::Odd:
      return j % 2 == 1;
    case Kind::Explicit:
      return std::binary_search(members_.begin(), members_.end(), j);
  }
  return false;
}

std::string IndexSet::describe() const {
  switch (kind_) {
    case Kind::Even:
      return "even";
    case Kind::Odd:
      return "odd";
    case Kind::Explicit:
      break;
  }
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
  os << '}';
  return os.str();
}

double SeminormForm::evaluate(const FockVector& v) const {
  const Eigen::VectorXcd c = v.resized(degree).coeffs();
  return std::real(c.dot(matrix * c));
}

namespace {

OperatorMatrix checked_displacement(Complex beta, Index degree, Pad pad, double leak_tol) {
  const Index rows = degree + pad.resolve(beta, degree);
  OperatorMatrix d = displacement_matrix(beta, rows, degree);
  if (d.tail_leak > leak_tol) throw TailLeakageError(d.tail_leak, leak_tol);
  return d;
}

}  // namespace

double seminorm_direct(const FockVector& v, const IndexSet& E, Complex beta, Pad pad, double leak_tol) {
  const Index n = v.degree();
  if (n == 0) return 0.0;
  const OperatorMatrix d = checked_displacement(beta, n, pad, leak_tol);
  const Eigen::VectorXcd moved = d.entries * v.coeffs();
  double s = 0.0;
  for (Index j = 0; j < n; ++j) {
    if (E.contains(j)) s += std::norm(v.coeffs()[j]);
  }
  for (Index j = 0; j < moved.size(); ++j) {
    if (!E.contains(j)) s += std::norm(moved[j]);
  }
  return s;
}

double seminorm_direct(const FockVector& v, const IndexSet& E, double beta, Pad pad, double leak_tol) {
  if (!(beta >= 0.0)) throw DomainError("seminorm_direct: beta must be >= 0");
  return seminorm_direct(v, E, Complex{beta}, pad, leak_tol);
}

SeminormForm seminorm_gram(const IndexSet& E, double beta, Index degree, Pad pad, double leak_tol) {
  if (degree < 2) throw DomainError("seminorm_gram: degree must be >= 2");
  if (!(beta >= 0.0)) throw DomainError("seminorm_gram: beta must be >= 0");
  const OperatorMatrix d = checked_displacement(beta, degree, pad, leak_tol);
  SeminormForm form;
  form.E = E;
  form.beta = beta;
  form.degree = degree;
  form.pad = d.rows() - degree;
  form.tail_leak = d.tail_leak;

  Eigen::MatrixXcd pd = d.entries;
  for (Index m = 0; m < pd.rows(); ++m) {
    if (E.contains(m)) pd.row(m).setZero();
  }
  Eigen::MatrixXcd a = d.entries.adjoint() * pd;
  for (Index j = 0; j < degree; ++j) {
    if (E.contains(j)) a(j, j) += 1.0;
  }
  form.matrix = 0.5 * (a + a.adjoint());
  return form;
}

double symmetrized_seminorm(const FockVector& v, Parity parity, double beta, Pad pad, double leak_tol) {
  if (!(beta > 0.0)) throw DomainError("symmetrized_seminorm: beta must be positive");
  const Index n = std::max<Index>(v.degree(), 1);
  const FockVector u =
      apply_rigid_motion(RigidMotion::translation(beta), v, pad.resolve(beta, n), leak_tol);
  const FockVector rv = reflect(v);
  const FockVector ru = reflect(u);
  const double s = parity == Parity::Even ? 1.0 : -1.0;
  return 0.25 * norm_squared(v + s * rv) + 0.25 * norm_squared(u - s * ru);
}

SamplingConstant smallest_eigenvalue(const SeminormForm& form) {
  const Eigen::MatrixXcd& a = form.matrix;
  const Index n = a.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw EigenNotConverged("dense Hermitian eigensolver failed");
  SamplingConstant out;
  out.pad = form.pad;
  out.lambda_min = es.eigenvalues()[0];
  out.lambda_next = n > 1 ? es.eigenvalues()[1] : out.lambda_min;

  // Inverse iteration from a fixed, generic start vector, shifted just below
  // the dense estimate. A wrong dense value still shows: the iteration then
  // settles on the true bottom eigenvalue instead.
  Eigen::VectorXcd x(n);
  for (Index j = 0; j < n; ++j) x[j] = Complex(1.0 + 0.1 * j, 0.05 * (j % 7));
  x.normalize();
  const double shift = out.lambda_min - 1e-6 * std::abs(out.lambda_min) - 1e-14;
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(a - shift * Eigen::MatrixXcd::Identity(n, n));
  if (ldlt.info() != Eigen::Success) throw EigenNotConverged("inverse iteration: factorization failed");
  for (int it = 0; it < 50; ++it) {
    x = ldlt.solve(x);
    const double nx = x.norm();
    if (!std::isfinite(nx) || nx == 0.0) break;
    x /= nx;
  }
  out.inverse_iteration = std::real(x.dot(a * x));

  const double lam = out.lambda_min;
  const double mu = out.inverse_iteration;
  const double slack = 1e-12 * std::max(1.0, std::abs(lam));
  const bool above = mu >= lam - slack;
  const bool close = std::abs(mu - lam) <= 1e-6 * std::abs(lam) + slack;
  const bool in_cluster = mu <= out.lambda_next + slack;
  if (!std::isfinite(mu) || !above || !(close || in_cluster)) {
    std::ostringstream os;
    os << "smallest eigenvalue cross-check failed: dense " << lam << ", inverse iteration " << mu;
    throw EigenNotConverged(os.str());
  }
  return out;
}

SamplingConstant sampling_constant(const IndexSet& E, double beta, Index degree, Pad pad, double leak_tol) {
  return smallest_eigenvalue(seminorm_gram(E, beta, degree, pad, leak_tol));
}

XiEta xi_eta(const L2Function& phi, double beta, Parity parity) {
  const L2Function phi_check = reflect(phi);
  const L2Function phi_beta = modulate(phi, beta);
  const L2Function phi_beta_check = reflect(phi_beta);
  if (parity == Parity::Even) {
    return {phi + phi_check, phi_beta - phi_beta_check};
  }
  return {phi - phi_check, phi_beta + phi_beta_check};
}

Recovered recover_phi(const L2Function& xi, const L2Function& eta, double beta, double exclusion) {
  if (!(exclusion > 0.0 && exclusion < 1.0)) throw DomainError("recover_phi: exclusion must lie in (0, 1)");
  if (!same_grid(xi, eta)) throw GridError("grid mismatch");
  if (!xi.grid()->is_symmetric()) throw GridError("asymmetric grid");
  const auto& t = xi.grid()->nodes();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Index>(t.size()));
  std::vector<bool> valid(t.size(), false);
  std::size_t masked = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double c = std::cos(beta * t[i]);
    if (std::abs(c) <= exclusion) {
      ++masked;
      continue;
    }
    const auto k = static_cast<Index>(i);
    v[k] = (eta.values()[k] + std::polar(1.0, -beta * t[i]) * xi.values()[k]) / (2.0 * c);
    valid[i] = true;
  }
  if (masked == t.size()) throw GridError("all nodes excluded");
  return {L2Function(xi.grid(), std::move(v)), std::move(valid), masked};
}

double counterexample_eta_value(double theta, double beta, double t) {
  const double sgn = t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0);
  return sgn * std::pow(std::abs(std::cos(beta * t)), theta) / (1.0 + t * t);
}

L2Function counterexample_eta(double theta, double beta, GridPtr grid) {
  if (!(theta > 0.0) || !(beta > 0.0)) throw DomainError("counterexample_eta: theta and beta must be positive");
  return L2Function::sample(std::move(grid),
                            [=](double t) { return Complex{counterexample_eta_value(theta, beta, t)}; });
}

double counterexample_phi_value(double theta, double beta, double t) {
  return counterexample_eta_value(theta, beta, t) / (2.0 * std::cos(beta * t));
}

namespace {

void require_theta_beta(double theta, double beta, const char* who) {
  if (!(theta > 0.0) || !(beta > 0.0)) {
    throw DomainError(std::string(who) + ": theta and beta must be positive");
  }
}

double inv_square_sq(double t) {
  const double q = 1.0 + t * t;
  return 1.0 / (q * q);
}

}  // namespace

QuadratureResult counterexample_numerator(double theta, double beta, const CosSingularOptions& opts) {
  require_theta_beta(theta, beta, "counterexample_numerator");
  return integrate_cos_singular([](double t) { return Complex{inv_square_sq(t)}; }, beta, 2.0 * theta, opts);
}

QuadratureResult counterexample_denominator(double theta, double beta, const CosSingularOptions& opts) {
  require_theta_beta(theta, beta, "counterexample_denominator");
  // |phi_theta|^2 = |eta_theta|^2 / (4 cos^2)
  return integrate_cos_singular([](double t) { return Complex{0.25 * inv_square_sq(t)}; }, beta,
                                2.0 * theta - 2.0, opts);
}

SweepRecord sampling_ratio(double theta, double beta, const CosSingularOptions& opts) {
  const double num = std::real(counterexample_numerator(theta, beta, opts).value);
  const double den = std::real(counterexample_denominator(theta, beta, opts).value);
  SweepRecord rec;
  rec.set("theta", theta).set("beta", beta).set("numerator", num).set("denominator", den);
  rec.set("ratio", num / den);
  return rec;
}

BoundPair translate_pair_bound(const FockVector& v, double beta, Pad pad, double leak_tol) {
  if (!(beta > 0.0)) throw DomainError("translate_pair_bound: beta must be positive");
  const Index n = v.degree();
  if (n == 0) return {};
  const Index p = pad.resolve(beta, n);
  const OperatorMatrix plus = displacement_matrix(beta, n + p, n);
  const OperatorMatrix minus = displacement_matrix(-beta, n + p, n);
  if (plus.tail_leak > leak_tol) throw TailLeakageError(plus.tail_leak, leak_tol);
  if (minus.tail_leak > leak_tol) throw TailLeakageError(minus.tail_leak, leak_tol);
  const double lhs = ((plus.entries + minus.entries) * v.coeffs()).squaredNorm();
  const double rhs = 8.0 * seminorm_direct(v, IndexSet::even(), beta, Pad::fixed(p), leak_tol);
  return {lhs, rhs};
}

BoundPair cos_weight_bound(const L2Function& phi, double beta) {
  const auto& t = phi.grid()->nodes();
  Eigen::VectorXcd weighted = phi.values();
  for (std::size_t i = 0; i < t.size(); ++i) weighted[static_cast<Index>(i)] *= std::cos(beta * t[i]);
  const double lhs = 4.0 * l2_norm_squared(L2Function(phi.grid(), std::move(weighted)));
  const XiEta parts = xi_eta(phi, beta, Parity::Even);
  const double rhs = 2.0 * (l2_norm_squared(parts.xi) + l2_norm_squared(parts.eta));
  return {lhs, rhs};
}

SweepRecord pointwise_probe(double theta, double beta, Complex w, const CosSingularOptions& opts) {
  require_theta_beta(theta, beta, "pointwise_probe");
  // The kernel decays like e^{-t^2/4}; nothing beyond |t| = 60 registers.
  CosSingularOptions value_opts = opts;
  value_opts.cutoff = std::min(opts.cutoff, 60.0);
  value_opts.times_sign = true;
  // phi_theta = sgn(t) sgn(cos) |cos|^{theta-1} / (2 (1 + t^2))
  const auto g = [w](double t) {
    const double sgn = t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0);
    return bargmann_kernel(w, t) * (0.5 * sgn / (1.0 + t * t));
  };
  const Complex value = integrate_cos_singular(g, beta, theta - 1.0, value_opts).value;
  const double seminorm = 0.25 * std::real(counterexample_numerator(theta, beta, opts).value);
  SweepRecord rec;
  rec.set("theta", theta).set("beta", beta).set("w_re", w.real()).set("w_im", w.imag());
  rec.set("value_sq", std::norm(value)).set("seminorm", seminorm).set("ratio", std::norm(value) / seminorm);
  return rec;
}

}  // namespace deepzero
