#pragma once

// The two-point deep-zero seminorm
//   ||f||^2_{E,beta} = sum_{j in E} |c_j|^2 + sum_{j not in E} |(U_beta c)_j|^2
// on truncated Fock coefficient spaces, its Gram matrix and smallest
// eigenvalue, the L^2(R) picture through the Bargmann transform, and the
// counterexample family showing that no sampling constant exists.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "deepzero/bargmann.hpp"
#include "deepzero/fock.hpp"
#include "deepzero/operators.hpp"
#include "deepzero/quadrature.hpp"
#include "deepzero/sweep.hpp"

namespace deepzero {

enum class Parity { Even, Odd };

std::string_view to_string(Parity p);
// Accepts "even" / "odd"; throws DomainError otherwise.
Parity parse_parity(std::string_view s);

// Set of nonnegative integers; the complement is taken inside N_0.
class IndexSet {
 public:
  enum class Kind { Even, Odd, Explicit };

  static IndexSet even() { return IndexSet(Kind::Even, {}); }
  static IndexSet odd() { return IndexSet(Kind::Odd, {}); }
  static IndexSet of(Parity p) { return p == Parity::Even ? even() : odd(); }
  // Members are sorted and deduplicated; negative entries are rejected.
  static IndexSet explicit_set(std::vector<Index> members);

  Kind kind() const noexcept { return kind_; }
  const std::vector<Index>& members() const noexcept { return members_; }
  bool contains(Index j) const;
  std::string describe() const;

 private:
  IndexSet(Kind kind, std::vector<Index> members) : kind_(kind), members_(std::move(members)) {}
  Kind kind_;
  std::vector<Index> members_;
};

// Hermitian PSD matrix A with v^H A v = ||v||^2_{E,beta} on degree-N vectors.
struct SeminormForm {
  IndexSet E = IndexSet::even();
  double beta = 0.0;
  Index degree = 0;
  Index pad = 0;
  double tail_leak = 0.0;
  Eigen::MatrixXcd matrix;

  double evaluate(const FockVector& v) const;
};

double seminorm_direct(const FockVector& v, const IndexSet& E, double beta, Pad pad = Pad::automatic(),
                       double leak_tol = kDefaultLeakTolerance);
// Complex beta, used to check the rotation reduction to beta > 0.
double seminorm_direct(const FockVector& v, const IndexSet& E, Complex beta, Pad pad = Pad::automatic(),
                       double leak_tol = kDefaultLeakTolerance);

// A = P_E + D^H P_{E^c} D with D the padded (N + pad) x N displacement by
// beta; P_{E^c} acts on the padded range.
SeminormForm seminorm_gram(const IndexSet& E, double beta, Index degree, Pad pad = Pad::automatic(),
                           double leak_tol = kDefaultLeakTolerance);

// Even E: (1/4)||f + Rf||^2 + (1/4)||U_beta f - R U_beta f||^2, R f(z) = f(-z).
// Odd E: the same with both signs flipped.
double symmetrized_seminorm(const FockVector& v, Parity parity, double beta, Pad pad = Pad::automatic(),
                            double leak_tol = kDefaultLeakTolerance);

struct SamplingConstant {
  double lambda_min = 0.0;
  double lambda_next = 0.0;        // second smallest eigenvalue
  double inverse_iteration = 0.0;  // Rayleigh quotient after inverse iteration
  Index pad = 0;
};

// Smallest eigenvalue of the form, cross-checked by 50 steps of inverse
// iteration shifted just below the dense value. Throws EigenNotConverged if the dense solver fails or the two
// estimates disagree beyond 1e-6 relative and outside the bottom cluster.
SamplingConstant smallest_eigenvalue(const SeminormForm& form);
SamplingConstant sampling_constant(const IndexSet& E, double beta, Index degree, Pad pad = Pad::automatic(),
                                   double leak_tol = kDefaultLeakTolerance);

// Even parity: xi = phi + phi(-t), eta = phi_beta - (phi_beta)(-t).
// Odd parity: xi = phi - phi(-t), eta = phi_beta + (phi_beta)(-t).
// phi_beta(t) = e^{i beta t} phi(t).
struct XiEta {
  L2Function xi;
  L2Function eta;
};
XiEta xi_eta(const L2Function& phi, double beta, Parity parity);

// phi = (eta + e^{-i beta t} xi) / (2 cos(beta t)) at nodes with
// |cos(beta t)| > exclusion; other nodes are set to zero and flagged.
struct Recovered {
  L2Function phi;
  std::vector<bool> valid;
  std::size_t masked = 0;
};
inline constexpr double kDefaultExclusion = 0.1;
Recovered recover_phi(const L2Function& xi, const L2Function& eta, double beta,
                      double exclusion = kDefaultExclusion);

// eta_theta(t) = (1 + t^2)^{-1} |cos(beta t)|^theta sgn(t).
double counterexample_eta_value(double theta, double beta, double t);
L2Function counterexample_eta(double theta, double beta, GridPtr grid);
// phi_theta = eta_theta / (2 cos(beta t)); infinite at zeros of cos.
double counterexample_phi_value(double theta, double beta, double t);

// numerator = ||xi||^2 + ||eta_theta||^2 with xi = 0,
// denominator = ||phi_theta||^2, ratio = numerator / denominator.
// Throws QuadratureNotConverged when the denominator does not settle.
SweepRecord sampling_ratio(double theta, double beta, const CosSingularOptions& opts = {});

// Integral of (1 + t^2)^{-2} |cos(beta t)|^{2 theta}.
QuadratureResult counterexample_numerator(double theta, double beta, const CosSingularOptions& opts = {});
// (1/4) times the integral of (1 + t^2)^{-2} |cos(beta t)|^{2 theta - 2}.
QuadratureResult counterexample_denominator(double theta, double beta, const CosSingularOptions& opts = {});

struct BoundPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

// lhs = ||(U_beta + U_{-beta}) v||^2, rhs = 8 ||v||^2_{even,beta}.
BoundPair translate_pair_bound(const FockVector& v, double beta, Pad pad = Pad::automatic(),
                               double leak_tol = kDefaultLeakTolerance);

// lhs = 4 ||cos(beta t) phi||^2, rhs = 2 (||xi||^2 + ||eta||^2) for the even
// parity split, which equals 8 ||B phi||^2_{even,beta}.
BoundPair cos_weight_bound(const L2Function& phi, double beta);

// |f_theta(w)|^2 / ||f_theta||^2_{even,beta} with f_theta = B phi_theta.
// Fields: theta, beta, w_re, w_im, value_sq, seminorm, ratio.
SweepRecord pointwise_probe(double theta, double beta, Complex w, const CosSingularOptions& opts = {});

}  // namespace deepzero
