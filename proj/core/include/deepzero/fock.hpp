#pragma once

// Truncated Bargmann-Fock space elements.
//
// A FockVector stores coefficients c_j in the orthonormal basis
// e_j(z) = z^j / sqrt(j!), so the Fock norm is the Euclidean norm of c and
// no factorials are ever formed explicitly. Taylor coefficients are reached
// through from_taylor / to_taylor.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace deepzero {

using Complex = std::complex<double>;
using Index = Eigen::Index;

class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(Eigen::VectorXcd coeffs);
  // Zero vector with `degree` coefficients.
  explicit FockVector(Index degree);

  // e_j inside a space of the given degree.
  static FockVector basis(Index j, Index degree);

  Index degree() const noexcept { return coeffs_.size(); }
  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }

  // Coefficient j, zero beyond the stored degree.
  Complex operator[](Index j) const noexcept {
    return j < coeffs_.size() ? coeffs_[j] : Complex{};
  }

  // Truncate or zero-extend.
  FockVector resized(Index degree) const;

  friend FockVector operator+(const FockVector& a, const FockVector& b);
  friend FockVector operator-(const FockVector& a, const FockVector& b);
  friend FockVector operator*(Complex s, const FockVector& v);

 private:
  Eigen::VectorXcd coeffs_;
};

// <u, v> = sum_j u_j conj(v_j); lengths are aligned by zero extension.
Complex inner(const FockVector& u, const FockVector& v);
double norm_squared(const FockVector& v);
double norm(const FockVector& v);

// f(z) = sum_j c_j z^j / sqrt(j!), Horner form in the scaled basis.
Complex evaluate(const FockVector& v, Complex z);

// Bound on the contribution of discarded coefficients to f(z):
// |tail(z)| <= ||tail|| e^{|z|^2/2}.
double evaluation_tail_bound(double tail_norm, Complex z);

// e^{-|z|^2/2} |f(z)|, at most ||f|| everywhere.
double weighted_modulus(const FockVector& v, Complex z);

// Coefficients of K(., w) = e^{z conj(w)}: c_j = conj(w)^j / sqrt(j!).
FockVector kernel_vector(Complex w, Index degree);

// Largest degree for which sqrt(j!) stays finite in double precision.
Index max_taylor_degree();

// c_j = sqrt(j!) * taylor[j]. Throws DomainError when sqrt(j!) overflows.
FockVector from_taylor(std::span<const Complex> taylor);
std::vector<Complex> to_taylor(const FockVector& v);

}  // namespace deepzero
