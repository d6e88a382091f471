#pragma once

// Truncated matrices of the Fock translates U_alpha, rotations, the
// reflection f(z) -> f(-z), and the rigid motions U_(rho, alpha).

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "deepzero/fock.hpp"

namespace deepzero {

// Element (rho, alpha) of the rigid motion group, acting by z -> rho z - alpha.
// Composition: (rho', alpha') * (rho, alpha) = (rho' rho, rho' alpha + alpha').
class RigidMotion {
 public:
  RigidMotion() = default;
  // Throws DomainError unless | |rho| - 1 | < 1e-12.
  RigidMotion(Complex rho, Complex alpha);

  static RigidMotion rotation(Complex rho) { return {rho, 0.0}; }
  static RigidMotion translation(Complex alpha) { return {1.0, alpha}; }
  static RigidMotion reflection() { return {-1.0, 0.0}; }

  Complex rho() const noexcept { return rho_; }
  Complex alpha() const noexcept { return alpha_; }

  friend RigidMotion operator*(const RigidMotion& outer, const RigidMotion& inner);

 private:
  Complex rho_{1.0};
  Complex alpha_{0.0};
};

// Scalar with U_g U_h = phase * U_{h*g}: e^{-i Im(alpha_g rho_h conj(alpha_h))}.
Complex composition_phase(const RigidMotion& g, const RigidMotion& h);

// Truncated operator between coefficient spaces, rows >= cols.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  // max_j (1 - ||column j||^2), clamped at zero.
  double tail_leak = 0.0;

  Index rows() const noexcept { return entries.rows(); }
  Index cols() const noexcept { return entries.cols(); }
};

double column_tail_leak(const Eigen::MatrixXcd& m);

// Row padding: either a fixed count or the adaptive rule.
class Pad {
 public:
  static Pad automatic() { return Pad(std::nullopt); }
  static Pad fixed(Index rows);

  bool is_auto() const noexcept { return !rows_.has_value(); }
  Index fixed_rows() const { return rows_.value(); }

  // Concrete padding for a displacement by `alpha` of a `cols`-dimensional space.
  Index resolve(Complex alpha, Index cols) const;

 private:
  explicit Pad(std::optional<Index> rows) : rows_(rows) {}
  std::optional<Index> rows_;
};

// Default leakage tolerance for operations that apply a padded displacement.
inline constexpr double kDefaultLeakTolerance = 1e-10;

// Smallest pad of the form pad0 * 2^k with tail_leak < 1e-12, where
// pad0 = ceil(8 (|alpha|^2 + |alpha| sqrt(cols))) + 8.
Index auto_pad(Complex alpha, Index cols);

// Entry (m, n) = <U_alpha e_n, e_m>. Lower triangle by a three-term recurrence
// along each diagonal; the upper triangle from U_alpha^* = U_{-alpha}.
OperatorMatrix displacement_matrix(Complex alpha, Index rows, Index cols);

// Diagonal action of f(z) -> f(rho z): c_j -> rho^j c_j.
FockVector rotate(const FockVector& v, Complex rho);
FockVector reflect(const FockVector& v);

// U_(rho, alpha) v with output degree v.degree() + pad. Throws
// TailLeakageError when the displacement leaks more than `leak_tol`.
FockVector apply_rigid_motion(const RigidMotion& g, const FockVector& v, Index pad,
                              double leak_tol = kDefaultLeakTolerance);
FockVector apply_rigid_motion(const RigidMotion& g, const FockVector& v, Pad pad = Pad::automatic(),
                              double leak_tol = kDefaultLeakTolerance);

struct CommutationResult {
  Complex phase;
  double residual = 0.0;
};

// phase = e^{-i Im(alpha conj(beta))};
// residual = max_{j < degree} || U_alpha U_beta e_j - phase U_{alpha+beta} e_j ||.
CommutationResult commutation_check(Complex alpha, Complex beta, Index degree, Index pad,
                                    double leak_tol = kDefaultLeakTolerance);

// a_n = e^{-|z - n alpha|^2 / 2} |f(z - n alpha)|, n = 0..n_max.
std::vector<double> translate_decay_probe(const FockVector& f, Complex alpha, Complex z,
                                          Index n_max);

}  // namespace deepzero
