#pragma once

// Quadrature grids on the real line and an integrator for integrands with
// |cos(beta t)|^p singularities.

#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "deepzero/fock.hpp"

namespace deepzero {

enum class GridKind { GaussHermiteScaled, AdaptivePanel, Uniform };

std::string_view to_string(GridKind kind);

// Nodes strictly increasing, weights strictly positive; sum_i w_i g(t_i)
// approximates the plain Lebesgue integral of g.
class QuadratureGrid {
 public:
  QuadratureGrid(GridKind kind, std::vector<double> nodes, std::vector<double> weights);

  GridKind kind() const noexcept { return kind_; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  // t_i = -t_{n-1-i} and w_i = w_{n-1-i} up to a relative tolerance.
  bool is_symmetric(double rel_tol = 1e-12) const;

  friend bool operator==(const QuadratureGrid&, const QuadratureGrid&) = default;

 private:
  GridKind kind_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre(int n);

// Gauss-Hermite rule for the weight e^{-t^2/2}, rescaled so that the weights
// integrate against dt: nodes t_i = sqrt(2) x_i, w_i = sqrt(2) W_i e^{x_i^2}.
// Exact for p(t) e^{-t^2/2} with deg p <= 2n - 1.
GridPtr gauss_hermite_grid(int n);

inline constexpr int kDefaultHermiteNodes = 201;

// Equispaced grid symmetric about 0. With midpoint = false the nodes are
// k h for |k| <= half_count (trapezoid weights); with midpoint = true they
// are (k + 1/2) h for -half_count <= k < half_count (weight h each).
GridPtr uniform_grid(double spacing, int half_count, bool midpoint);

// Composite Gauss-Legendre of the given order on consecutive breakpoints.
GridPtr panel_grid(std::span<const double> breakpoints, int order);

// Hermite functions psi_k(x) = (2^k k! sqrt(pi))^{-1/2} H_k(x) e^{-x^2/2},
// k = 0..out.size()-1, by the normalized three-term recurrence.
void hermite_functions(double x, std::span<double> out);

struct CosSingularOptions {
  double cutoff = 1000.0;   // integrate over [-cutoff, cutoff]
  double rel_tol = 1e-6;    // relative change between refinement levels
  int max_levels = 5;
  int order = 16;           // Gauss-Legendre points per sub-panel
  int base_layers = 8;      // graded layers towards each zero at level 0
  double grading = 0.25;    // geometric ratio of the graded mesh
  double max_width = 1.0;   // widest smooth sub-panel
  bool times_sign = false;  // multiply the integrand by sgn(cos(beta t))
};

struct QuadratureResult {
  Complex value;
  double last_change = 0.0;
  int levels = 0;
};

// Integral of g(t) |cos(beta t)|^exponent over [-cutoff, cutoff].
//
// The line is split at 0 and at every zero of cos(beta t); g may jump there
// but must be smooth on each open panel. Near a zero s the mesh is graded
// geometrically and |cos(beta(s + u))| is evaluated as |sin(beta u)|. The
// innermost piece [0, eps] is added in closed form from the model
// g(s) (beta u)^p when p > -1. Each refinement level doubles the layer
// count; QuadratureNotConverged is thrown when max_levels is reached
// without the relative change dropping below rel_tol, which is what a
// non-integrable spike (p <= -1) produces.
QuadratureResult integrate_cos_singular(const std::function<Complex(double)>& g, double beta,
                                        double exponent, const CosSingularOptions& opts = {});

}  // namespace deepzero
