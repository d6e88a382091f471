#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "deepzero/bargmann.hpp"
#include "deepzero/deep_zero.hpp"
#include "deepzero/errors.hpp"
#include "deepzero/fock.hpp"
#include "deepzero/operators.hpp"
#include "deepzero/quadrature.hpp"
#include "deepzero_cli/commands.hpp"

namespace deepzero::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  Complex normal() {
    std::normal_distribution<double> n;
    return {n(gen_), n(gen_)};
  }
  Complex disc(double radius) { return std::polar(radius * std::sqrt(uniform(0, 1)), uniform(0, 2 * kPi)); }
  FockVector fock(Index degree) {
    Eigen::VectorXcd c(degree);
    for (Index j = 0; j < degree; ++j) c[j] = normal();
    return FockVector(std::move(c));
  }
  // p(t) e^{-t^2/4} with deg p <= max_degree
  std::function<Complex(double)> poly_gaussian(int max_degree) {
    std::vector<Complex> p(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, max_degree)(gen_)) + 1);
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = normal() / std::sqrt(1.0 + k);
    return [p](double t) {
      Complex acc{};
      for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
      return acc * std::exp(-0.25 * t * t);
    };
  }

 private:
  std::mt19937_64 gen_;
};

class Suite {
 public:
  explicit Suite(const RunConfig& cfg) : tol_(cfg.tol) {}

  void module(std::string name) { module_ = std::move(name); }

  // Passes when measured <= tolerance (cfg.tol overrides the native value).
  void residual(const std::string& name, const std::function<double()>& measure, double native_tol) {
    const double tol = tol_.value_or(native_tol);
    run(name, measure, tol, "<=", [tol](double v) { return v <= tol; });
  }

  void greater(const std::string& name, const std::function<double()>& measure, double bound) {
    run(name, measure, bound, ">", [bound](double v) { return v > bound; });
  }

  void equal(const std::string& name, const std::function<double()>& measure, double expected) {
    run(name, measure, expected, "==", [expected](double v) { return v == expected; });
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void run(const std::string& name, const std::function<double()>& measure, double threshold,
           const std::string& relation, const std::function<bool(double)>& ok) {
    CheckResult r{module_, name, std::nan(""), threshold, relation, false, {}};
    try {
      r.measured = measure();
      r.passed = ok(r.measured);
    } catch (const std::exception& e) {
      r.note = e.what();
    }
    results_.push_back(std::move(r));
  }

  std::optional<double> tol_;
  std::string module_;
  std::vector<CheckResult> results_;
};

double unitarity_defect(const OperatorMatrix& d) {
  const Eigen::MatrixXcd g = d.entries.adjoint() * d.entries;
  return (g - Eigen::MatrixXcd::Identity(d.cols(), d.cols())).cwiseAbs().maxCoeff();
}

double factorial(int n) { return std::tgamma(n + 1.0); }

void fock_checks(Suite& s) {
  s.module("fock");
  s.residual("basis orthonormality (degree 32)", [] {
    double worst = 0.0;
    for (Index i = 0; i < 32; ++i)
      for (Index j = 0; j < 32; ++j)
        worst = std::max(worst, std::abs(inner(FockVector::basis(i, 32), FockVector::basis(j, 32)) - (i == j ? 1.0 : 0.0)));
    return worst;
  }, 1e-15);
  s.residual("reproducing property, 200 samples, |w| <= 2", [] {
    Rng rng(101);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const FockVector f = rng.fock(1 + static_cast<Index>(rng.uniform(0, 32)));
      const Complex w = rng.disc(2.0);
      const Complex lhs = inner(f, kernel_vector(w, 200));
      worst = std::max(worst, std::abs(lhs - evaluate(f, w)) / norm(f));
    }
    return worst;
  }, 1e-12);
  s.residual("kernel norm squared = e^{|w|^2}", [] {
    double worst = 0.0;
    for (const Complex w : {Complex(1.0, 0.0), Complex(0.5, -1.2), Complex(-1.5, 0.3)}) {
      worst = std::max(worst, std::abs(norm_squared(kernel_vector(w, 120)) / std::exp(std::norm(w)) - 1.0));
    }
    return worst;
  }, 1e-13);
  s.residual("pointwise bound e^{-|z|^2/2}|f(z)| <= ||f||, excess", [] {
    Rng rng(102);
    double excess = 0.0;
    for (int k = 0; k < 500; ++k) {
      const FockVector f = rng.fock(20);
      const Complex z = rng.disc(6.0);
      excess = std::max(excess, weighted_modulus(f, z) / norm(f) - 1.0);
    }
    return std::max(0.0, excess);
  }, 1e-12);
  s.residual("Taylor round trip", [] {
    Rng rng(103);
    const FockVector v = rng.fock(40);
    return norm(from_taylor(to_taylor(v)) - v) / norm(v);
  }, 1e-13);
  s.residual("evaluation matches power series", [] {
    Rng rng(104);
    const FockVector v = rng.fock(15);
    const std::vector<Complex> a = to_taylor(v);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Complex z = rng.disc(1.5);
      Complex s{};
      for (auto it = a.rbegin(); it != a.rend(); ++it) s = s * z + *it;
      worst = std::max(worst, std::abs(s - evaluate(v, z)) / std::max(1.0, std::abs(s)));
    }
    return worst;
  }, 1e-12);
}

void operator_checks(Suite& s) {
  s.module("operators");
  s.residual("zero displacement is the identity", [] {
    const OperatorMatrix d = displacement_matrix(0.0, 40, 32);
    return (d.entries.topRows(32) - Eigen::MatrixXcd::Identity(32, 32)).cwiseAbs().maxCoeff() +
           d.entries.bottomRows(8).cwiseAbs().maxCoeff();
  }, 0.0);
  s.residual("coherent column of U_1", [] {
    const OperatorMatrix d = displacement_matrix(1.0, 30, 1);
    double worst = 0.0;
    for (int m = 0; m < 30; ++m) worst = std::max(worst, std::abs(d.entries(m, 0) - std::exp(-0.5) / std::sqrt(factorial(m))));
    return worst;
  }, 1e-15);
  s.residual("near-unitarity, |alpha| <= 2, degree 32, auto pad", [] {
    Rng rng(105);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Complex a = rng.disc(2.0);
      worst = std::max(worst, unitarity_defect(displacement_matrix(a, 32 + auto_pad(a, 32), 32)));
    }
    return worst;
  }, 1e-9);
  s.residual("commutation U_a U_b = e^{-i Im(a conj b)} U_{a+b}", [] {
    Rng rng(106);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Complex a = rng.disc(2.0);
      const Complex b = rng.disc(2.0);
      const Index pad = std::max({auto_pad(a, 32), auto_pad(b, 32), auto_pad(a + b, 32)});
      const CommutationResult r = commutation_check(a, b, 32, pad);
      worst = std::max(worst, r.residual + std::abs(r.phase - std::exp(Complex(0, -std::imag(a * std::conj(b))))));
    }
    return worst;
  }, 1e-9);
  s.residual("rigid motion composition rule", [] {
    Rng rng(107);
    double worst = 0.0;
    for (int k = 0; k < 8; ++k) {
      const RigidMotion g(std::polar(1.0, rng.uniform(0, 2 * kPi)), rng.disc(1.0));
      const RigidMotion h(std::polar(1.0, rng.uniform(0, 2 * kPi)), rng.disc(1.0));
      const FockVector v = rng.fock(12);
      const FockVector lhs = apply_rigid_motion(g, apply_rigid_motion(h, v, 48), 48);
      const FockVector rhs = composition_phase(g, h) * apply_rigid_motion(h * g, v, 96);
      worst = std::max(worst, norm(lhs - rhs) / norm(v));
    }
    return worst;
  }, 1e-9);
  s.residual("inverse law U_{-a} U_a = I", [] {
    Rng rng(108);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Complex a = rng.disc(2.0);
      const FockVector v = rng.fock(24);
      const FockVector there = apply_rigid_motion(RigidMotion::translation(a), v, Pad::automatic());
      const FockVector back = apply_rigid_motion(RigidMotion::translation(-a), there, Pad::automatic());
      worst = std::max(worst, norm(back - v) / norm(v));
    }
    return worst;
  }, 1e-9);
  s.residual("reflection is an involution", [] {
    Rng rng(109);
    const FockVector v = rng.fock(33);
    return norm(reflect(reflect(v)) - v);
  }, 0.0);
  s.residual("density shift |U_a f|(z) weighted = |f|(z - a) weighted", [] {
    Rng rng(110);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Complex a = rng.disc(1.5);
      const FockVector f = rng.fock(16);
      const FockVector uf = apply_rigid_motion(RigidMotion::translation(a), f, Pad::automatic());
      for (int j = 0; j < 10; ++j) {
        const Complex z = rng.disc(2.5);
        worst = std::max(worst, std::abs(weighted_modulus(uf, z) - weighted_modulus(f, z - a)) / norm(f));
      }
    }
    return worst;
  }, 1e-9);
  s.residual("translate decay probe of the constant: a_n = e^{-n^2/2}", [] {
    const auto a = translate_decay_probe(FockVector::basis(0, 1), 1.0, 0.0, 8);
    double worst = 0.0;
    for (int n = 0; n <= 8; ++n) worst = std::max(worst, std::abs(a[static_cast<std::size_t>(n)] - std::exp(-0.5 * n * n)));
    return worst;
  }, 1e-15);
}

void quadrature_checks(Suite& s) {
  s.module("quadrature");
  s.residual("Gauss-Hermite Gaussian moments (20 nodes)", [] {
    const GridPtr g = gauss_hermite_grid(20);
    double worst = 0.0;
    double dfact = 1.0;
    for (int k = 0; k < 20; ++k) {
      if (k > 0) dfact *= 2 * k - 1;
      double sum = 0.0;
      for (std::size_t i = 0; i < g->size(); ++i) {
        const double t = g->nodes()[i];
        sum += g->weights()[i] * std::pow(t, 2 * k) * std::exp(-0.5 * t * t);
      }
      worst = std::max(worst, std::abs(sum / (std::sqrt(2 * kPi) * dfact) - 1.0));
    }
    return worst;
  }, 1e-12);
  s.residual("Gauss-Legendre exactness (order 16)", [] {
    const GaussRule r = gauss_legendre(16);
    double worst = 0.0;
    for (int k = 0; k < 32; ++k) {
      double sum = 0.0;
      for (int i = 0; i < 16; ++i) sum += r.weights[i] * std::pow(r.nodes[i], k);
      worst = std::max(worst, std::abs(sum - (k % 2 == 0 ? 2.0 / (k + 1) : 0.0)));
    }
    return worst;
  }, 1e-14);
  s.residual("integral of (1 + t^2)^{-2} = pi/2", [] {
    const auto g = [](double t) { return Complex{1.0 / ((1 + t * t) * (1 + t * t))}; };
    return std::abs(integrate_cos_singular(g, 1.0, 0.0).value.real() - kPi / 2);
  }, 1e-8);
  s.residual("signed cos integral = pi (1 + beta) e^{-beta} / 2", [] {
    CosSingularOptions opts;
    opts.times_sign = true;
    double worst = 0.0;
    for (double beta : {0.5, 1.0, 2.0}) {
      const auto g = [](double t) { return Complex{1.0 / ((1 + t * t) * (1 + t * t))}; };
      worst = std::max(worst, std::abs(integrate_cos_singular(g, beta, 1.0, opts).value.real() -
                                       kPi * (1 + beta) * std::exp(-beta) / 2));
    }
    return worst;
  }, 1e-8);
  s.equal("non-integrable spike |cos t|^{-1} reported as not converged", [] {
    try {
      integrate_cos_singular([](double t) { return Complex{1.0 / (1 + t * t)}; }, 1.0, -1.0);
    } catch (const QuadratureNotConverged&) {
      return 1.0;
    }
    return 0.0;
  }, 1.0);
}

void bargmann_checks(Suite& s) {
  s.module("bargmann");
  s.residual("Gaussian maps to (2 pi)^{1/4} e_0", [] {
    const FockVector c = bargmann_forward([](double t) { return Complex{std::exp(-0.25 * t * t)}; }, 16);
    return norm(c - std::pow(2 * kPi, 0.25) * FockVector::basis(0, 16));
  }, 1e-12);
  s.residual("isometry on 100 functions, relative defect", [] {
    Rng rng(111);
    const GridPtr grid = gauss_hermite_grid(kDefaultHermiteNodes);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const L2Function phi = L2Function::sample(grid, rng.poly_gaussian(10));
      worst = std::max(worst, std::abs(norm_squared(bargmann_forward(phi, 16)) / l2_norm_squared(phi) - 1.0));
    }
    return worst;
  }, 1e-6);
  s.residual("B modulate(beta) = U_beta B, beta in {0.5, 1, 2}", [] {
    Rng rng(112);
    const GridPtr grid = gauss_hermite_grid(kDefaultHermiteNodes);
    double worst = 0.0;
    for (double beta : {0.5, 1.0, 2.0}) {
      const L2Function phi = L2Function::sample(grid, rng.poly_gaussian(6));
      const FockVector v = bargmann_forward(phi, 8);
      const FockVector shifted = apply_rigid_motion(RigidMotion::translation(beta), v, Pad::automatic());
      const FockVector direct = bargmann_forward(modulate(phi, beta), shifted.degree());
      worst = std::max(worst, norm(shifted - direct) / norm(v));
    }
    return worst;
  }, 1e-6);
  s.residual("B reflect = R B", [] {
    Rng rng(113);
    const GridPtr grid = gauss_hermite_grid(kDefaultHermiteNodes);
    const L2Function phi = L2Function::sample(grid, rng.poly_gaussian(9));
    return norm(bargmann_forward(reflect(phi), 12) - reflect(bargmann_forward(phi, 12))) / norm(bargmann_forward(phi, 12));
  }, 1e-6);
  s.residual("Fock -> L2 -> Fock round trip (degree 40)", [] {
    Rng rng(114);
    const FockVector v = rng.fock(40);
    return norm(bargmann_forward(bargmann_inverse(v, gauss_hermite_grid(kDefaultHermiteNodes)), 40) - v) / norm(v);
  }, 1e-12);
  s.residual("adjoint pairing <B phi, v> = <phi, B* v>", [] {
    Rng rng(115);
    const GridPtr grid = gauss_hermite_grid(kDefaultHermiteNodes);
    const L2Function phi = L2Function::sample(grid, rng.poly_gaussian(8));
    const FockVector v = rng.fock(20);
    return std::abs(inner(bargmann_forward(phi, 20), v) - l2_inner(phi, bargmann_inverse(v, grid))) /
           (norm(v) * std::sqrt(l2_norm_squared(phi)));
  }, 1e-12);
}

void deep_zero_checks(Suite& s, const RunConfig& cfg) {
  s.module("deep-zero");
  if (cfg.beta == 0.0) {
    s.residual("Gram matrix at beta = 0 is the identity", [] {
      const SeminormForm f = seminorm_gram(IndexSet::even(), 0.0, 32);
      return (f.matrix - Eigen::MatrixXcd::Identity(32, 32)).cwiseAbs().maxCoeff();
    }, 1e-15);
  } else {
    s.residual("Gram form matches direct seminorm at configured beta", [&cfg] {
      Rng rng(116);
      const SeminormForm f = seminorm_gram(IndexSet::of(cfg.parity), cfg.beta, 24, cfg.pad);
      double worst = 0.0;
      for (int k = 0; k < 20; ++k) {
        const FockVector v = rng.fock(24);
        worst = std::max(worst, std::abs(f.evaluate(v) - seminorm_direct(v, IndexSet::of(cfg.parity), cfg.beta, cfg.pad)) /
                                    norm_squared(v));
      }
      return worst;
    }, 1e-12);
  }
  s.residual("seminorm at beta = 0 is the Fock norm", [] {
    Rng rng(117);
    const FockVector v = rng.fock(20);
    return std::abs(seminorm_direct(v, IndexSet::odd(), 0.0) / norm_squared(v) - 1.0);
  }, 1e-12);
  s.residual("constant function at beta = 1: 1 + e^{-1} sinh 1", [] {
    return std::abs(seminorm_direct(FockVector::basis(0, 1), IndexSet::even(), 1.0) - 1.0 - std::exp(-1.0) * std::sinh(1.0));
  }, 1e-12);
  s.residual("Gram PSD: -lambda_min over E, beta", [] {
    double worst = 0.0;
    for (const IndexSet& e : {IndexSet::even(), IndexSet::odd(), IndexSet::explicit_set({0, 3, 4})}) {
      for (double beta : {0.5, 1.0, 2.0}) {
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(seminorm_gram(e, beta, 32).matrix, Eigen::EigenvaluesOnly);
        worst = std::max(worst, -es.eigenvalues()[0]);
      }
    }
    return std::max(0.0, worst);
  }, 1e-12);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const std::string tag = std::string(to_string(p));
    s.residual("direct = Gram = symmetrized, " + tag + ", 50 vectors x 3 betas", [p] {
      Rng rng(p == Parity::Even ? 118 : 119);
      double worst = 0.0;
      for (double beta : {0.5, 1.0, 2.0}) {
        const SeminormForm f = seminorm_gram(IndexSet::of(p), beta, 24);
        for (int k = 0; k < 50; ++k) {
          const FockVector v = rng.fock(24);
          const double d = seminorm_direct(v, IndexSet::of(p), beta);
          const double scale = norm_squared(v);
          worst = std::max({worst, std::abs(d - f.evaluate(v)) / scale,
                            std::abs(d - symmetrized_seminorm(v, p, beta)) / scale});
        }
      }
      return worst;
    }, 1e-10);
    s.residual("xi/eta route = seminorm of B phi, " + tag, [p] {
      Rng rng(p == Parity::Even ? 120 : 121);
      const GridPtr grid = gauss_hermite_grid(kDefaultHermiteNodes);
      double worst = 0.0;
      for (double beta : {0.5, 1.0, 2.0}) {
        for (int k = 0; k < 10; ++k) {
          const L2Function phi = L2Function::sample(grid, rng.poly_gaussian(8));
          const XiEta parts = xi_eta(phi, beta, p);
          const double l2 = 0.25 * (l2_norm_squared(parts.xi) + l2_norm_squared(parts.eta));
          const double fock = seminorm_direct(bargmann_forward(phi, 12), IndexSet::of(p), beta);
          worst = std::max(worst, std::abs(l2 - fock) / std::max(1.0, l2));
        }
      }
      return worst;
    }, 1e-6);
  }
  s.residual("rotation reduction to positive beta", [] {
    Rng rng(122);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const FockVector v = rng.fock(16);
      const Complex beta = rng.disc(2.0);
      const Complex rho = beta / std::abs(beta);
      worst = std::max(worst, std::abs(seminorm_direct(v, IndexSet::even(), beta) -
                                       seminorm_direct(rotate(v, rho), IndexSet::even(), std::abs(beta))) /
                                  norm_squared(v));
    }
    return worst;
  }, 1e-10);
  s.equal("sampling constant at beta = 0", [] { return sampling_constant(IndexSet::even(), 0.0, 16).lambda_min; }, 1.0);
  s.greater("min lambda_min, N <= 128, both parities, beta in {0.5, 1, 2}", [] {
    double lo = INFINITY;
    for (const IndexSet& e : {IndexSet::even(), IndexSet::odd()})
      for (double beta : {0.5, 1.0, 2.0})
        for (Index n : {8, 16, 32, 64, 128}) lo = std::min(lo, sampling_constant(e, beta, n).lambda_min);
    return lo;
  }, 0.0);
  s.residual("lambda_min non-increasing in N (largest increase)", [] {
    double worst = 0.0;
    for (const IndexSet& e : {IndexSet::even(), IndexSet::odd()}) {
      double prev = INFINITY;
      for (Index n : {8, 16, 32, 64, 128}) {
        const double lam = sampling_constant(e, 1.0, n).lambda_min;
        worst = std::max(worst, lam - prev);
        prev = lam;
      }
    }
    return std::max(0.0, worst);
  }, 0.0);
  s.residual("recovery round trip, 50 functions", [] {
    Rng rng(123);
    const GridPtr grid = gauss_hermite_grid(kDefaultHermiteNodes);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const L2Function phi = L2Function::sample(grid, rng.poly_gaussian(6));
      const double beta = rng.uniform(0.3, 2.5);
      const XiEta parts = xi_eta(phi, beta, Parity::Even);
      const Recovered r = recover_phi(parts.xi, parts.eta, beta);
      for (std::size_t i = 0; i < grid->size(); ++i) {
        const auto j = static_cast<Index>(i);
        if (r.valid[i]) worst = std::max(worst, std::abs(r.phi.values()[j] - phi.values()[j]));
      }
    }
    return worst;
  }, 1e-10);
  s.residual("(U_b + U_-b) bound: max(lhs - rhs), 100 vectors", [] {
    Rng rng(124);
    double worst = -INFINITY;
    for (int k = 0; k < 100; ++k) {
      const BoundPair b = translate_pair_bound(rng.fock(1 + static_cast<Index>(rng.uniform(0, 24))), rng.uniform(0.2, 2.5));
      worst = std::max(worst, b.lhs - b.rhs);
    }
    return std::max(0.0, worst);
  }, 1e-9);
  s.residual("cos-weight bound: max(lhs - rhs), 100 functions", [] {
    Rng rng(125);
    const GridPtr grid = gauss_hermite_grid(kDefaultHermiteNodes);
    double worst = -INFINITY;
    for (int k = 0; k < 100; ++k) {
      const BoundPair b = cos_weight_bound(L2Function::sample(grid, rng.poly_gaussian(8)), rng.uniform(0.2, 2.5));
      worst = std::max(worst, b.lhs - b.rhs);
    }
    return std::max(0.0, worst);
  }, 1e-9);
  s.residual("counterexample numerator above 3, theta in {0.05 .. 2}", [] {
    double worst = -INFINITY;
    for (double theta : {0.05, 0.1, 0.2, 0.5, 1.0, 2.0}) {
      worst = std::max(worst, counterexample_numerator(theta, 1.0).value.real() - 3.0);
    }
    return std::max(0.0, worst);
  }, 0.0);
  s.residual("counterexample eta is odd", [] {
    const GridPtr grid = uniform_grid(0.05, 400, false);
    const L2Function eta = counterexample_eta(0.3, 1.0, grid);
    return std::sqrt(l2_norm_squared(reflect(eta) + eta));
  }, 0.0);
  s.residual("denominator at theta = 1 equals pi/8", [] {
    return std::abs(counterexample_denominator(1.0, 1.0).value.real() - kPi / 8);
  }, 1e-8);
}

}  // namespace

std::vector<CheckResult> run_verify_checks(const RunConfig& cfg) {
  Suite s(cfg);
  fock_checks(s);
  operator_checks(s);
  quadrature_checks(s);
  bargmann_checks(s);
  deep_zero_checks(s, cfg);
  return s.take();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto results = run_verify_checks(cfg);
  out << describe(cfg) << '\n';
  std::size_t failed = 0;
  const CheckResult* first = nullptr;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name << "  measured=" << format_number(r.measured)
        << ' ' << r.relation << ' ' << format_number(r.threshold);
    if (!r.note.empty()) out << "  (" << r.note << ')';
    out << '\n';
    if (!r.passed) {
      ++failed;
      if (!first) first = &r;
    }
  }
  out << "verify: " << results.size() << " checks, " << failed << " failed\n";
  if (first) {
    err << "verify: first failing invariant: " << first->module << ": " << first->name << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace deepzero::cli
