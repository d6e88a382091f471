#include "deepzero/bargmann.hpp"

#include <cmath>
#include <numbers>

#include "deepzero/errors.hpp"

namespace deepzero {

L2Function::L2Function(GridPtr grid, Eigen::VectorXcd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw GridError("L2Function: null grid");
  if (static_cast<std::size_t>(values_.size()) != grid_->size()) {
    throw GridError("L2Function: values length differs from grid size");
  }
}

L2Function L2Function::zero(GridPtr grid) {
  const auto n = static_cast<Index>(grid->size());
  return L2Function(std::move(grid), Eigen::VectorXcd::Zero(n));
}

L2Function L2Function::sample(GridPtr grid, const std::function<Complex(double)>& fn) {
  const auto& t = grid->nodes();
  Eigen::VectorXcd v(static_cast<Index>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) v[static_cast<Index>(i)] = fn(t[i]);
  return L2Function(std::move(grid), std::move(v));
}

bool same_grid(const L2Function& a, const L2Function& b) {
  return a.grid() == b.grid() || *a.grid() == *b.grid();
}

namespace {

void require_same_grid(const L2Function& a, const L2Function& b) {
  if (!same_grid(a, b)) throw GridError("grid mismatch");
}

}  // namespace

L2Function operator+(const L2Function& a, const L2Function& b) {
  require_same_grid(a, b);
  return L2Function(a.grid_, a.values_ + b.values_);
}

L2Function operator-(const L2Function& a, const L2Function& b) {
  require_same_grid(a, b);
  return L2Function(a.grid_, a.values_ - b.values_);
}

L2Function operator*(Complex s, const L2Function& f) { return L2Function(f.grid_, s * f.values_); }

Complex l2_inner(const L2Function& u, const L2Function& v) {
  require_same_grid(u, v);
  const auto& w = u.grid()->weights();
  Complex s{};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto k = static_cast<Index>(i);
    s += w[i] * u.values()[k] * std::conj(v.values()[k]);
  }
  return s;
}

double l2_norm_squared(const L2Function& f) { return std::real(l2_inner(f, f)); }

L2Function modulate(const L2Function& phi, double beta) {
  if (beta == 0.0) return phi;
  const auto& t = phi.grid()->nodes();
  Eigen::VectorXcd v = phi.values();
  for (std::size_t i = 0; i < t.size(); ++i) v[static_cast<Index>(i)] *= std::polar(1.0, beta * t[i]);
  return L2Function(phi.grid(), std::move(v));
}

L2Function reflect(const L2Function& phi) {
  if (!phi.grid()->is_symmetric()) throw GridError("asymmetric grid");
  return L2Function(phi.grid(), phi.values().reverse());
}

Complex bargmann_kernel(Complex z, double t) {
  const Complex i{0.0, 1.0};
  return std::pow(2.0 * std::numbers::pi, -0.25) * std::exp(-i * z * t + 0.5 * z * z - 0.25 * t * t);
}

Eigen::MatrixXcd preimage_basis(const QuadratureGrid& grid, Index degree) {
  if (degree < 0) throw DomainError("preimage_basis: negative degree");
  const auto& t = grid.nodes();
  Eigen::MatrixXcd h(static_cast<Index>(t.size()), degree);
  std::vector<double> psi(static_cast<std::size_t>(degree));
  const double scale = std::pow(2.0, -0.25);
  static constexpr Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    hermite_functions(t[i] / std::numbers::sqrt2, psi);
    for (Index j = 0; j < degree; ++j) {
      h(static_cast<Index>(i), j) = kPhase[j % 4] * (scale * psi[static_cast<std::size_t>(j)]);
    }
  }
  return h;
}

namespace {

void check_resolution(const QuadratureGrid& grid, const Eigen::MatrixXcd& h, double tol) {
  Eigen::VectorXd w(static_cast<Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) w[static_cast<Index>(i)] = grid.weights()[i];
  const Eigen::MatrixXcd gram = h.adjoint() * w.asDiagonal() * h;
  const double dev = (gram - Eigen::MatrixXcd::Identity(h.cols(), h.cols())).cwiseAbs().maxCoeff();
  if (!(dev <= tol)) throw GridError("grid underresolved");
}

void check_edge_mass(const L2Function& phi, double tol) {
  const auto& w = phi.grid()->weights();
  const auto n = static_cast<Index>(w.size());
  double total = 0.0;
  for (Index i = 0; i < n; ++i) total += w[static_cast<std::size_t>(i)] * std::norm(phi.values()[i]);
  if (total == 0.0 || n < 4) return;
  double edge = 0.0;
  for (Index i : {Index{0}, Index{1}, n - 2, n - 1}) {
    edge += w[static_cast<std::size_t>(i)] * std::norm(phi.values()[i]);
  }
  if (edge > tol * total) throw GridError("grid underresolved");
}

}  // namespace

FockVector bargmann_forward(const L2Function& phi, Index degree, const BargmannOptions& opts) {
  if (degree < 1) throw DomainError("bargmann_forward: degree must be >= 1");
  const Eigen::MatrixXcd h = preimage_basis(*phi.grid(), degree);
  check_resolution(*phi.grid(), h, opts.tol);
  check_edge_mass(phi, opts.tol);
  Eigen::VectorXcd wphi = phi.values();
  const auto& w = phi.grid()->weights();
  for (std::size_t i = 0; i < w.size(); ++i) wphi[static_cast<Index>(i)] *= w[i];
  return FockVector(Eigen::VectorXcd(h.adjoint() * wphi));
}

FockVector bargmann_forward(const std::function<Complex(double)>& phi, Index degree, int nodes,
                            const BargmannOptions& opts) {
  const FockVector coarse = bargmann_forward(L2Function::sample(gauss_hermite_grid(nodes), phi), degree, opts);
  const FockVector fine =
      bargmann_forward(L2Function::sample(gauss_hermite_grid(2 * nodes), phi), degree, opts);
  const double diff = (fine.coeffs() - coarse.coeffs()).cwiseAbs().maxCoeff();
  if (!(diff <= opts.tol * std::max(1.0, norm(fine)))) throw GridError("grid underresolved");
  return fine;
}

L2Function bargmann_inverse(const FockVector& v, GridPtr grid, const BargmannOptions& opts) {
  if (v.degree() == 0) return L2Function::zero(std::move(grid));
  const Eigen::MatrixXcd h = preimage_basis(*grid, v.degree());
  check_resolution(*grid, h, opts.tol);
  return L2Function(std::move(grid), h * v.coeffs());
}

}  // namespace deepzero
