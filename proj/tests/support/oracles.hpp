#pragma once

// Independent reference computations. Nothing here calls into the library's
// numerical routines; each oracle evaluates the defining formula directly.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <Eigen/Dense>

namespace deepzero::testing {

using C = std::complex<double>;

inline double factorial(int n) { return std::tgamma(n + 1.0); }

// Adaptive Gauss-Kronrod of a complex integrand over [a, b].
inline C integrate_gk(const std::function<C(double)>& f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  const double re = gauss_kronrod<double, 61>::integrate([&](double t) { return f(t).real(); }, a, b, 15, 1e-14);
  const double im = gauss_kronrod<double, 61>::integrate([&](double t) { return f(t).imag(); }, a, b, 15, 1e-14);
  return {re, im};
}

// (U_alpha e_n)(z) = e^{-|a|^2/2 + conj(a) z} (z - a)^n / sqrt(n!)
inline C translated_basis(C alpha, int n, C z) {
  return std::exp(-0.5 * std::norm(alpha) + std::conj(alpha) * z) * std::pow(z - alpha, n) /
         std::sqrt(factorial(n));
}

// <U_alpha e_n, e_m> as the Gaussian-measure integral
//   (1/pi) int U_alpha e_n(z) conj(z^m / sqrt(m!)) e^{-|z|^2} dA(z),
// in polar coordinates: trapezoid in the angle (spectrally accurate for
// periodic integrands), 30-point Gauss-Legendre on unit panels in the radius.
inline C displacement_entry_quadrature(C alpha, int m, int n, int angles = 256, double rmax = 14.0) {
  using boost::math::quadrature::gauss;
  auto radial = [&](double r) {
    C s{};
    for (int k = 0; k < angles; ++k) {
      const C z = std::polar(r, 2.0 * std::numbers::pi * k / angles);
      s += translated_basis(alpha, n, z) * std::conj(std::pow(z, m) / std::sqrt(factorial(m)));
    }
    return s * (2.0 * std::numbers::pi / angles) * r * std::exp(-r * r) / std::numbers::pi;
  };
  C total{};
  for (double a = 0.0; a < rmax; a += 1.0) {
    const double half = 0.5, mid = a + 0.5;
    const auto& x = gauss<double, 30>::abscissa();
    const auto& w = gauss<double, 30>::weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) {
        total += w[i] * half * radial(mid);
      } else {
        total += w[i] * half * (radial(mid - half * x[i]) + radial(mid + half * x[i]));
      }
    }
  }
  return total;
}

// Direct quadrature of B phi(z) = (2 pi)^{-1/4} int e^{-izt + z^2/2 - t^2/4} phi(t) dt.
inline C bargmann_direct(const std::function<C(double)>& phi, C z, double cutoff = 40.0) {
  const C i{0.0, 1.0};
  auto integrand = [&](double t) { return std::exp(-i * z * t + 0.5 * z * z - 0.25 * t * t) * phi(t); };
  return std::pow(2.0 * std::numbers::pi, -0.25) * integrate_gk(integrand, -cutoff, cutoff);
}

// Fourier transform F psi(z) = int e^{-izt} psi(t) dt by direct quadrature.
inline C fourier_direct(const std::function<C(double)>& psi, C z, double cutoff = 40.0) {
  const C i{0.0, 1.0};
  return integrate_gk([&](double t) { return std::exp(-i * z * t) * psi(t); }, -cutoff, cutoff);
}

// Number of eigenvalues of a Hermitian matrix below x, from the signs of the
// pivots of an unpivoted LDL^H elimination of A - x I (Sylvester inertia).
inline int count_below(const Eigen::MatrixXcd& a, double x) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<C>> m(n, std::vector<C>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = a(r, c) - (r == c ? x : 0.0);
  int neg = 0;
  for (int k = 0; k < n; ++k) {
    double piv = m[k][k].real();
    if (piv == 0.0) piv = -1e-300;
    if (piv < 0) ++neg;
    for (int r = k + 1; r < n; ++r) {
      const C f = m[r][k] / piv;
      for (int c = k + 1; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return neg;
}

// Smallest eigenvalue by bisection on the inertia count.
inline double smallest_eigenvalue_bisection(const Eigen::MatrixXcd& a) {
  double lo = -1.0;
  double hi = 0.0;
  for (int r = 0; r < a.rows(); ++r) hi = std::max(hi, a(r, r).real() + a.row(r).cwiseAbs().sum());
  for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (count_below(a, mid) >= 1 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// Integral of g(t) |cos(beta t)|^p over [0, cutoff] by tanh-sinh on each
// panel between consecutive zeros of cos. tanh-sinh handles the endpoint
// singularities natively; Boost passes the signed distance to the nearer
// endpoint, which gives |cos| near a zero as |sin(beta * distance)|.
inline double cos_power_integral_tanh_sinh(const std::function<double(double)>& g, double beta, double p,
                                           double cutoff) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double period = std::numbers::pi / beta;
  double a = 0.0;
  double total = 0.0;
  while (a < cutoff) {
    const double b = std::min(a == 0.0 ? 0.5 * period : a + period, cutoff);
    const bool a_zero = a > 0.0;
    const bool b_zero = b < cutoff;
    auto f = [&](double t, double tc) {
      double c;
      if (tc <= 0.0) {
        c = a_zero ? std::abs(std::sin(-beta * tc)) : std::abs(std::cos(beta * t));
      } else {
        c = b_zero ? std::abs(std::sin(beta * tc)) : std::abs(std::cos(beta * t));
      }
      return g(t) * std::pow(c, p);
    };
    total += ts.integrate(f, a, b);
    a = b;
  }
  return total;
}

// Integral over [0, inf) of a smooth decaying function.
inline double half_line_integral(const std::function<double(double)>& f) {
  boost::math::quadrature::exp_sinh<double> es;
  return es.integrate(f);
}

}  // namespace deepzero::testing
