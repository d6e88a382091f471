#include "deepzero/operators.hpp"

#include <cmath>

#include "deepzero/errors.hpp"

namespace deepzero {

RigidMotion::RigidMotion(Complex rho, Complex alpha) : rho_(rho), alpha_(alpha) {
  if (!(std::abs(std::abs(rho) - 1.0) < 1e-12)) {
    throw DomainError("RigidMotion: rotation part must be unimodular");
  }
}

RigidMotion operator*(const RigidMotion& outer, const RigidMotion& inner) {
  return {outer.rho_ * inner.rho_, outer.rho_ * inner.alpha_ + outer.alpha_};
}

Complex composition_phase(const RigidMotion& g, const RigidMotion& h) {
  const double im = std::imag(g.alpha() * h.rho() * std::conj(h.alpha()));
  return std::polar(1.0, -im);
}

double column_tail_leak(const Eigen::MatrixXcd& m) {
  double leak = 0.0;
  for (Index j = 0; j < m.cols(); ++j) {
    leak = std::max(leak, 1.0 - m.col(j).squaredNorm());
  }
  return leak;
}

Pad Pad::fixed(Index rows) {
  if (rows < 0) throw DomainError("Pad: negative padding");
  return Pad(rows);
}

Index Pad::resolve(Complex alpha, Index cols) const {
  return rows_ ? *rows_ : auto_pad(alpha, cols);
}

namespace {

// Fills out(m, n) = <U_alpha e_n, e_m> for every m >= n inside the block.
// Along the diagonal k = m - n the entries r_n satisfy
//   sqrt((n+1)(n+1+k)) r_{n+1} = (2n+1+k-x) r_n - sqrt(n(n+k)) r_{n-1},
// x = |alpha|^2, which is the Laguerre recurrence after folding the
// sqrt(n!/m!) normalization into r_n. It is stable where the column
// recurrence from U_alpha z = (z - alpha) U_alpha is not.
template <typename Sink>
void fill_lower(Complex alpha, Index rows, Index cols, Sink&& sink) {
  const double x = std::norm(alpha);
  const double mag = std::abs(alpha);
  const double phase = -std::arg(alpha);  // arg of conj(alpha)
  for (Index k = 0; k < rows; ++k) {
    const Index len = std::min(cols, rows - k);
    if (len <= 0) break;
    Complex r0;
    if (mag == 0.0) {
      r0 = k == 0 ? 1.0 : 0.0;
    } else {
      const double logr = -0.5 * x + static_cast<double>(k) * std::log(mag) -
                          0.5 * std::lgamma(static_cast<double>(k + 1));
      r0 = std::polar(std::exp(logr), static_cast<double>(k) * phase);
    }
    const double kd = static_cast<double>(k);
    Complex prev = r0;
    sink(k, 0, r0);
    if (len == 1) continue;
    Complex cur = r0 * (1.0 + kd - x) / std::sqrt(kd + 1.0);
    sink(k + 1, 1, cur);
    for (Index n = 1; n + 1 < len; ++n) {
      const double nd = static_cast<double>(n);
      const Complex next = ((2.0 * nd + 1.0 + kd - x) * cur - std::sqrt(nd * (nd + kd)) * prev) /
                           std::sqrt((nd + 1.0) * (nd + 1.0 + kd));
      prev = cur;
      cur = next;
      sink(n + 1 + k, n + 1, cur);
    }
  }
}

}  // namespace

OperatorMatrix displacement_matrix(Complex alpha, Index rows, Index cols) {
  if (cols < 1 || rows < cols) {
    throw DomainError("displacement_matrix: need rows >= cols >= 1");
  }
  OperatorMatrix out;
  out.entries = Eigen::MatrixXcd::Zero(rows, cols);
  auto& d = out.entries;
  fill_lower(alpha, rows, cols, [&](Index m, Index n, Complex v) { d(m, n) = v; });
  // <U_a e_n, e_m> = conj(<U_{-a} e_m, e_n>) for m < n.
  fill_lower(-alpha, cols, rows, [&](Index n, Index m, Complex v) {
    if (m < n) d(m, n) = std::conj(v);
  });
  out.tail_leak = std::max(0.0, column_tail_leak(d));
  return out;
}

Index auto_pad(Complex alpha, Index cols) {
  if (cols < 1) throw DomainError("auto_pad: cols must be >= 1");
  const double a = std::abs(alpha);
  Index pad = static_cast<Index>(std::ceil(8.0 * (a * a + a * std::sqrt(static_cast<double>(cols))))) + 8;
  constexpr Index kMaxPad = Index{1} << 16;
  while (pad <= kMaxPad) {
    if (displacement_matrix(alpha, cols + pad, cols).tail_leak < 1e-12) return pad;
    pad *= 2;
  }
  throw DomainError("auto_pad: displacement too large for adaptive padding");
}

FockVector rotate(const FockVector& v, Complex rho) {
  Eigen::VectorXcd c = v.coeffs();
  Complex p = 1.0;
  for (Index j = 0; j < c.size(); ++j) {
    c[j] *= p;
    p *= rho;
  }
  return FockVector(std::move(c));
}

FockVector reflect(const FockVector& v) {
  Eigen::VectorXcd c = v.coeffs();
  for (Index j = 1; j < c.size(); j += 2) c[j] = -c[j];
  return FockVector(std::move(c));
}

FockVector apply_rigid_motion(const RigidMotion& g, const FockVector& v, Index pad,
                              double leak_tol) {
  if (pad < 0) throw DomainError("apply_rigid_motion: negative pad");
  const Index n = v.degree();
  if (n == 0) return FockVector(pad);
  // U_(rho, alpha) f(z) = (U_alpha f)(rho z)
  const OperatorMatrix d = displacement_matrix(g.alpha(), n + pad, n);
  if (d.tail_leak > leak_tol) throw TailLeakageError(d.tail_leak, leak_tol);
  FockVector moved(Eigen::VectorXcd(d.entries * v.coeffs()));
  return g.rho() == Complex{1.0} ? moved : rotate(moved, g.rho());
}

FockVector apply_rigid_motion(const RigidMotion& g, const FockVector& v, Pad pad,
                              double leak_tol) {
  const Index n = std::max<Index>(v.degree(), 1);
  return apply_rigid_motion(g, v, pad.resolve(g.alpha(), n), leak_tol);
}

CommutationResult commutation_check(Complex alpha, Complex beta, Index degree, Index pad,
                                    double leak_tol) {
  if (degree < 1) throw DomainError("commutation_check: degree must be >= 1");
  if (pad < 0) throw DomainError("commutation_check: negative pad");
  const Complex phase = std::polar(1.0, -std::imag(alpha * std::conj(beta)));

  const OperatorMatrix db = displacement_matrix(beta, degree + pad, degree);
  const OperatorMatrix da = displacement_matrix(alpha, degree + 2 * pad, degree + pad);
  const OperatorMatrix dab = displacement_matrix(alpha + beta, degree + 2 * pad, degree);
  if (db.tail_leak > leak_tol) throw TailLeakageError(db.tail_leak, leak_tol);
  if (dab.tail_leak > leak_tol) throw TailLeakageError(dab.tail_leak, leak_tol);

  const Eigen::MatrixXcd diff = da.entries * db.entries - phase * dab.entries;
  double residual = 0.0;
  for (Index j = 0; j < diff.cols(); ++j) residual = std::max(residual, diff.col(j).norm());
  return {phase, residual};
}

std::vector<double> translate_decay_probe(const FockVector& f, Complex alpha, Complex z,
                                          Index n_max) {
  if (alpha == Complex{}) throw DomainError("translate_decay_probe: alpha must be nonzero");
  if (n_max < 1) throw DomainError("translate_decay_probe: n_max must be >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (Index n = 0; n <= n_max; ++n) {
    out.push_back(weighted_modulus(f, z - static_cast<double>(n) * alpha));
  }
  return out;
}

}  // namespace deepzero
