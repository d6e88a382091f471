#pragma once

// Bargmann transform between L^2(R) and the Fock space,
//   B phi(z) = (2 pi)^{-1/4} int exp(-i z t + z^2/2 - t^2/4) phi(t) dt,
// realized through the preimages h_j = B^* e_j of the Fock basis.

#include <functional>

#include <Eigen/Dense>

#include "deepzero/fock.hpp"
#include "deepzero/operators.hpp"
#include "deepzero/quadrature.hpp"

namespace deepzero {

// A function on R held as samples on a quadrature grid.
class L2Function {
 public:
  L2Function(GridPtr grid, Eigen::VectorXcd values);
  static L2Function zero(GridPtr grid);
  static L2Function sample(GridPtr grid, const std::function<Complex(double)>& fn);

  const GridPtr& grid() const noexcept { return grid_; }
  const Eigen::VectorXcd& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return grid_->size(); }

  friend L2Function operator+(const L2Function& a, const L2Function& b);
  friend L2Function operator-(const L2Function& a, const L2Function& b);
  friend L2Function operator*(Complex s, const L2Function& f);

 private:
  GridPtr grid_;
  Eigen::VectorXcd values_;
};

// Same grid object or identical nodes and weights.
bool same_grid(const L2Function& a, const L2Function& b);

// sum_i w_i u(t_i) conj(v(t_i)). Throws GridError("grid mismatch").
Complex l2_inner(const L2Function& u, const L2Function& v);
double l2_norm_squared(const L2Function& f);

// phi(t) e^{i beta t}
L2Function modulate(const L2Function& phi, double beta);
// phi(-t); requires a grid symmetric about 0.
L2Function reflect(const L2Function& phi);

// The transform kernel (2 pi)^{-1/4} exp(-i z t + z^2/2 - t^2/4).
Complex bargmann_kernel(Complex z, double t);

// Values h_j(t_i), j < degree: h_j(t) = i^j 2^{-1/4} psi_j(t / sqrt(2)).
Eigen::MatrixXcd preimage_basis(const QuadratureGrid& grid, Index degree);

struct BargmannOptions {
  double tol = 1e-8;
};

// c_j = <phi, h_j>_{L^2}. Throws GridError("grid underresolved") when the
// grid does not keep {h_j} orthonormal to `tol`, or when the outermost nodes
// carry more than `tol` of the mass of phi.
FockVector bargmann_forward(const L2Function& phi, Index degree, const BargmannOptions& opts = {});

// Same transform for a callable phi on a scaled Gauss-Hermite grid; the
// result is recomputed with twice the nodes and GridError is thrown if any
// coefficient moves by more than `tol`.
FockVector bargmann_forward(const std::function<Complex(double)>& phi, Index degree,
                            int nodes = kDefaultHermiteNodes, const BargmannOptions& opts = {});

// sum_j c_j h_j sampled on the grid.
L2Function bargmann_inverse(const FockVector& v, GridPtr grid, const BargmannOptions& opts = {});

}  // namespace deepzero
