#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "deepzero/errors.hpp"
#include "deepzero/fock.hpp"
#include "generators.hpp"

namespace deepzero {
namespace {

using testing::Gen;

TEST(FockInner, BasisIsOrthonormal) {
  const auto e1 = FockVector::basis(1, 4);
  const auto e2 = FockVector::basis(2, 4);
  EXPECT_EQ(inner(e2, e2), Complex(1.0));
  EXPECT_EQ(inner(e1, e2), Complex(0.0));
}

TEST(FockInner, NormFromTaylorCoefficients) {
  // f = 1 + z: 0! |1|^2 + 1! |1|^2
  const std::vector<Complex> taylor{1.0, 1.0};
  EXPECT_DOUBLE_EQ(norm_squared(from_taylor(taylor)), 2.0);
}

TEST(FockInner, ShorterVectorIsZeroPadded) {
  const FockVector a(Eigen::VectorXcd::Constant(3, Complex(1.0, 1.0)));
  const FockVector b(Eigen::VectorXcd::Constant(6, Complex(2.0, 0.0)));
  EXPECT_EQ(inner(a, b), Complex(6.0, 6.0));
  EXPECT_EQ(inner(b, a), Complex(6.0, -6.0));
  EXPECT_EQ((a + b).degree(), 6);
}

TEST(FockInner, ParsevalMatchesCoefficientSum) {
  Gen gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const FockVector v = gen.fock(gen.integer(1, 64));
    double s = 0.0;
    for (Index j = 0; j < v.degree(); ++j) s += std::norm(v[j]);
    EXPECT_NEAR(std::real(inner(v, v)), s, 1e-15 * s);
    EXPECT_EQ(std::imag(inner(v, v)), 0.0);
  }
}

TEST(FockEvaluate, PolynomialValue) {
  const std::vector<Complex> taylor{1.0, 1.0};
  const FockVector f = from_taylor(taylor);
  EXPECT_NEAR(std::abs(evaluate(f, 2.0) - 3.0), 0.0, 1e-15);
  // |f(2)| <= ||f|| e^{|2|^2/2} = sqrt(2) e^2
  EXPECT_LE(std::abs(evaluate(f, 2.0)), std::sqrt(2.0) * std::exp(2.0));
  EXPECT_NEAR(std::sqrt(2.0) * std::exp(2.0), 10.45, 0.01);
}

TEST(FockEvaluate, KernelAtItsOwnPoint) {
  EXPECT_NEAR(std::abs(evaluate(kernel_vector(1.0, 40), 1.0) - std::numbers::e), 0.0, 1e-14);
}

TEST(FockEvaluate, MatchesNaiveTaylorSeries) {
  Gen gen(12);
  const FockVector v = gen.fock(20);
  const auto taylor = to_taylor(v);
  for (int k = 0; k < 20; ++k) {
    const Complex z = gen.point_in_disc(2.0);
    Complex naive{};
    for (std::size_t j = 0; j < taylor.size(); ++j) naive += taylor[j] * std::pow(z, static_cast<int>(j));
    EXPECT_LT(std::abs(evaluate(v, z) - naive), 1e-12 * std::max(1.0, std::abs(naive)));
  }
}

TEST(FockEvaluate, TruncationTailBound) {
  Gen gen(13);
  const FockVector v = gen.fock(40);
  const FockVector head = v.resized(25);
  const double tail = norm(v - head);
  for (int k = 0; k < 20; ++k) {
    const Complex z = gen.point_in_disc(3.0);
    EXPECT_LE(std::abs(evaluate(v, z) - evaluate(head, z)), evaluation_tail_bound(tail, z) * (1 + 1e-12));
  }
}

TEST(FockKernel, OriginKernelIsConstant) {
  const FockVector k = kernel_vector(0.0, 5);
  EXPECT_EQ(k[0], Complex(1.0));
  for (Index j = 1; j < 5; ++j) EXPECT_EQ(k[j], Complex(0.0));
}

TEST(FockKernel, NormIsExponential) {
  EXPECT_NEAR(norm_squared(kernel_vector(1.0, 40)), std::numbers::e, 1e-14);
}

TEST(FockKernel, RejectsEmptyDegree) { EXPECT_THROW(kernel_vector(1.0, 0), DomainError); }

TEST(FockKernel, ReproducesPointValue) {
  Gen gen(14);
  const FockVector f = gen.fock(16);
  const Complex w{0.7, 0.3};
  EXPECT_LT(std::abs(inner(f, kernel_vector(w, 16)) - evaluate(f, w)), 1e-12);
}

TEST(FockKernel, ReproducingPropertySweep) {
  Gen gen(15);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = gen.integer(1, 32);
    const FockVector f = gen.fock(n);
    const Complex w = gen.point_in_disc(2.0);
    const Complex a = inner(f, kernel_vector(w, n));
    const Complex b = evaluate(f, w);
    EXPECT_LE(std::abs(a - b), 1e-12 * std::max(std::abs(b), norm(f)));
  }
}

TEST(FockTaylor, UnitTaylorVectors) {
  const std::vector<Complex> one{1.0, 0.0, 0.0};
  const FockVector v = from_taylor(one);
  EXPECT_EQ(v[0], Complex(1.0));
  EXPECT_EQ(v[1], Complex(0.0));
  const std::vector<Complex> quad{0.0, 0.0, 1.0};
  EXPECT_NEAR(from_taylor(quad)[2].real(), std::numbers::sqrt2, 1e-15);
}

TEST(FockTaylor, RoundTrip) {
  Gen gen(16);
  std::vector<Complex> taylor(20);
  for (auto& a : taylor) a = gen.complex_normal();
  const auto back = to_taylor(from_taylor(taylor));
  double err = 0.0;
  for (std::size_t j = 0; j < taylor.size(); ++j) err = std::max(err, std::abs(back[j] - taylor[j]));
  EXPECT_LT(err, 1e-13);
}

TEST(FockTaylor, DerivativeRelation) {
  // f^{(j)}(0) = j! fhat(j) = sqrt(j!) c_j
  Gen gen(17);
  const FockVector v = gen.fock(10);
  const auto taylor = to_taylor(v);
  for (int j = 0; j < 10; ++j) {
    const double fact = std::tgamma(j + 1.0);
    EXPECT_LT(std::abs(fact * taylor[static_cast<std::size_t>(j)] - std::sqrt(fact) * v[j]),
              1e-12 * std::sqrt(fact) * std::abs(v[j]));
  }
}

TEST(FockTaylor, OverflowGuard) {
  const Index cap = max_taylor_degree();
  EXPECT_GT(cap, 250);
  EXPECT_TRUE(std::isfinite(std::exp(0.5 * std::lgamma(static_cast<double>(cap)))));
  std::vector<Complex> ok(static_cast<std::size_t>(cap), 1e-300);
  EXPECT_NO_THROW(from_taylor(ok));
  std::vector<Complex> big(static_cast<std::size_t>(cap) + 1, 0.0);
  EXPECT_THROW(from_taylor(big), DomainError);
}

TEST(FockLemma, PointwiseBound) {
  Gen gen(18);
  for (int trial = 0; trial < 1000; ++trial) {
    const FockVector f = gen.unit_fock(gen.integer(1, 64));
    const Complex z = gen.point_in_disc(3.0);
    EXPECT_LE(weighted_modulus(f, z), 1.0 + 1e-10);
  }
}

TEST(FockLemma, DecayAtInfinity) {
  const std::vector<Complex> taylor{1.0, -2.0, 0.5, 0.0, 0.25};
  const FockVector f = from_taylor(taylor);
  double prev = std::numeric_limits<double>::infinity();
  for (int r = 4; r <= 10; ++r) {
    double m = 0.0;
    for (int k = 0; k < 720; ++k) m = std::max(m, weighted_modulus(f, std::polar(double(r), k * M_PI / 360)));
    EXPECT_LT(m, prev) << "R = " << r;
    prev = m;
  }
  EXPECT_LT(prev, 1e-15);
}

TEST(FockLemma, KernelIsExtremal) {
  for (Complex w : {Complex(0.0), Complex(1.0, -0.5), Complex(-1.5, 1.2), Complex(0.0, 2.0)}) {
    const FockVector k = kernel_vector(w, 96);
    const FockVector f = Complex{1.0 / norm(k)} * k;
    EXPECT_NEAR(weighted_modulus(f, w), 1.0, 1e-10);
  }
}

}  // namespace
}  // namespace deepzero
