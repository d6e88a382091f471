#include "deepzero/fock.hpp"

#include <cmath>
#include <limits>

#include "deepzero/errors.hpp"

namespace deepzero {

FockVector::FockVector(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) {}

FockVector::FockVector(Index degree) {
  if (degree < 0) throw DomainError("FockVector: negative degree");
  coeffs_ = Eigen::VectorXcd::Zero(degree);
}

FockVector FockVector::basis(Index j, Index degree) {
  if (j < 0 || j >= degree) throw DomainError("FockVector::basis: index outside degree");
  FockVector v(degree);
  v.coeffs_[j] = 1.0;
  return v;
}

FockVector FockVector::resized(Index degree) const {
  if (degree < 0) throw DomainError("FockVector::resized: negative degree");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(degree);
  const Index n = std::min(degree, coeffs_.size());
  out.head(n) = coeffs_.head(n);
  return FockVector(std::move(out));
}

FockVector operator+(const FockVector& a, const FockVector& b) {
  const Index n = std::max(a.degree(), b.degree());
  Eigen::VectorXcd out = a.resized(n).coeffs_ + b.resized(n).coeffs_;
  return FockVector(std::move(out));
}

FockVector operator-(const FockVector& a, const FockVector& b) {
  const Index n = std::max(a.degree(), b.degree());
  Eigen::VectorXcd out = a.resized(n).coeffs_ - b.resized(n).coeffs_;
  return FockVector(std::move(out));
}

FockVector operator*(Complex s, const FockVector& v) {
  return FockVector(Eigen::VectorXcd(s * v.coeffs_));
}

Complex inner(const FockVector& u, const FockVector& v) {
  const Index n = std::min(u.degree(), v.degree());
  // Eigen's dot conjugates its first argument.
  return v.coeffs().head(n).dot(u.coeffs().head(n));
}

double norm_squared(const FockVector& v) { return v.coeffs().squaredNorm(); }

double norm(const FockVector& v) { return v.coeffs().norm(); }

Complex evaluate(const FockVector& v, Complex z) {
  const auto& c = v.coeffs();
  const Index n = c.size();
  if (n == 0) return {};
  Complex acc = c[n - 1];
  for (Index j = n - 1; j >= 1; --j) {
    acc = c[j - 1] + acc * z / std::sqrt(static_cast<double>(j));
  }
  return acc;
}

double evaluation_tail_bound(double tail_norm, Complex z) {
  return tail_norm * std::exp(0.5 * std::norm(z));
}

double weighted_modulus(const FockVector& v, Complex z) {
  // log-space keeps e^{-|z|^2/2} from underflowing before the product does
  const double m = std::abs(evaluate(v, z));
  if (m == 0.0) return 0.0;
  return std::exp(std::log(m) - 0.5 * std::norm(z));
}

FockVector kernel_vector(Complex w, Index degree) {
  if (degree < 1) throw DomainError("kernel_vector: degree must be >= 1");
  Eigen::VectorXcd c(degree);
  const Complex wb = std::conj(w);
  c[0] = 1.0;
  for (Index j = 1; j < degree; ++j) c[j] = c[j - 1] * wb / std::sqrt(static_cast<double>(j));
  return FockVector(std::move(c));
}

Index max_taylor_degree() {
  static const Index cap = [] {
    const double lim = std::log(std::numeric_limits<double>::max());
    Index j = 0;
    while (0.5 * std::lgamma(static_cast<double>(j + 2)) < lim) ++j;
    return j + 1;  // indices 0..j are representable
  }();
  return cap;
}

FockVector from_taylor(std::span<const Complex> taylor) {
  const auto n = static_cast<Index>(taylor.size());
  if (n > max_taylor_degree()) {
    throw DomainError("degree too large for Taylor representation");
  }
  Eigen::VectorXcd c(n);
  double s = 1.0;  // sqrt(j!)
  for (Index j = 0; j < n; ++j) {
    if (j > 0) s *= std::sqrt(static_cast<double>(j));
    c[j] = s * taylor[static_cast<std::size_t>(j)];
  }
  return FockVector(std::move(c));
}

std::vector<Complex> to_taylor(const FockVector& v) {
  if (v.degree() > max_taylor_degree()) {
    throw DomainError("degree too large for Taylor representation");
  }
  std::vector<Complex> out(static_cast<std::size_t>(v.degree()));
  double s = 1.0;
  for (Index j = 0; j < v.degree(); ++j) {
    if (j > 0) s *= std::sqrt(static_cast<double>(j));
    out[static_cast<std::size_t>(j)] = v.coeffs()[j] / s;
  }
  return out;
}

}  // namespace deepzero
