#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bt/errors.hpp"
#include "bt/spectra.hpp"
#include "support.hpp"

using namespace bt;

TEST_CASE("gamma(2) spectrum") {
  const auto eig = eigen_sequence(gamma_symbol(2.0), 3);
  CHECK(eig.values == std::vector<Complex>{1.0, 0.5, 0.25, 0.125});
  CHECK(eig.method == EigenMethod::closed_form);
  REQUIRE(eig.tail);
  CHECK(eig.tail->ratio == Complex{0.5});
}

TEST_CASE("gamma(1) is the identity") {
  for (const Complex& v : eigen_sequence(gamma_symbol(1.0), 20).values) CHECK(v == Complex{1.0});
}

TEST_CASE("polynomial spectrum: phi(r) = r^2 gives n + 1") {
  const auto eig = eigen_sequence(PolynomialRadialSymbol({0.0, 1.0}), 4);
  CHECK(eig.values == std::vector<Complex>{1.0, 2.0, 3.0, 4.0, 5.0});
  CHECK_FALSE(eig.tail);
}

TEST_CASE("polynomial spectrum matches the Gamma integral") {
  // phi_n = sum_m p_m Gamma(n+m+1)/n!
  const PolynomialRadialSymbol p({{1.0, 0.0}, {0.5, 0.0}, {0.0, -0.1}});
  const auto eig = eigen_sequence(p, 10);
  for (int n = 0; n <= 10; ++n) {
    Complex expected{};
    for (int m = 0; m <= p.degree(); ++m) expected += p.coefficients()[m] * std::exp(std::lgamma(n + m + 1.0) - std::lgamma(n + 1.0));
    CHECK(std::abs(eig.values[n] - expected) < 1e-12 * std::abs(expected));
  }
}

TEST_CASE("divergent spectra are refused") {
  CHECK_THROWS_AS(eigen_sequence(gamma_symbol(-0.5), 3), DivergentMoment);
  CHECK_THROWS_AS(eigen_sequence(GaussianRadialSymbol{1.0, 1.0}, 3), DivergentMoment);
  CHECK_THROWS_AS(quadrature_eigen(gamma_symbol({0.0, 1.0}), 0, {}), DivergentMoment);
  CHECK_THROWS_AS(eigen_sequence(enveloped_function("cos_r2", nullptr, 1.0, 1.0), 3), DivergentMoment);
  CHECK_THROWS_AS(eigen_sequence(gamma_symbol(2.0), -1), InvalidInput);
}

TEST_CASE("quadrature matches closed forms for n <= 20") {
  for (const auto& sym : test::closed_form_corpus()) {
    const auto closed = eigen_sequence(sym, 20);
    const auto quad = quadrature_sequence(sym, 20, {});
    CAPTURE(describe(sym));
    CHECK(quad.method == EigenMethod::quadrature);
    for (int n = 0; n <= 20; ++n) {
      CAPTURE(n);
      CHECK(std::abs(quad.values[n] - closed.values[n]) < 1e-8);
    }
  }
}

TEST_CASE("enveloped cos r^2 spectrum") {
  // (1/n!) int cos(t) t^n e^{-t} dt = Re (1 - i)^{-(n+1)}
  const auto eig = eigen_sequence(enveloped_function("cos_r2", nullptr, 1.0, 0.0), 15);
  CHECK(eig.method == EigenMethod::quadrature);
  for (int n = 0; n <= 15; ++n) {
    CHECK(std::abs(eig.values[n] - std::pow(Complex{1.0, -1.0}, -(n + 1)).real()) < 1e-10);
  }
}

TEST_CASE("quadrature refuses a discontinuous symbol") {
  // The indicator of r <= 1 is not resolved by Gauss-Laguerre at 1e-10.
  CHECK_THROWS_AS(quadrature_eigen(enveloped_function("indicator", nullptr, 1.0, 0.0), 0, {}), NonConvergent);
}

TEST_CASE("geometric tail: values[n+1] k = values[n] in the closed-form path") {
  for (int i = 0; i < 200; ++i) {
    const Complex k = test::uniform_complex(0.05, 3.0, -2.0, 2.0);
    const auto eig = eigen_sequence(gamma_symbol(k), 40);
    for (int n = 0; n < 40; ++n) CHECK(close_rel(eig.values[n + 1] * k, eig.values[n], 1e-15));
  }
}

TEST_CASE("property: linearity on the closed-form family") {
  for (int i = 0; i < 100; ++i) {
    const Complex alpha = test::uniform_complex(-2, 2, -2, 2);
    const Complex beta = test::uniform_complex(-2, 2, -2, 2);
    const auto p = test::random_coeffs(3);
    const auto q = test::random_coeffs(2);
    std::vector<Complex> mix(4);
    for (int m = 0; m < 4; ++m) mix[m] = alpha * p[m] + beta * (m < 3 ? q[m] : Complex{});
    const auto lhs = eigen_sequence(PolynomialRadialSymbol(mix), 12);
    const auto ep = eigen_sequence(PolynomialRadialSymbol(p), 12);
    const auto eq = eigen_sequence(PolynomialRadialSymbol(q), 12);
    for (int n = 0; n <= 12; ++n) {
      const Complex rhs = alpha * ep.values[n] + beta * eq.values[n];
      CHECK(std::abs(lhs.values[n] - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
    // Same-exponent Gaussians add amplitudes.
    const Complex sigma = test::uniform_complex(-1, 0.9, -1, 1);
    const auto g = eigen_sequence(GaussianRadialSymbol{alpha + beta, sigma}, 12);
    const auto ga = eigen_sequence(GaussianRadialSymbol{alpha, sigma}, 12);
    const auto gb = eigen_sequence(GaussianRadialSymbol{beta, sigma}, 12);
    for (int n = 0; n <= 12; ++n) {
      CHECK(std::abs(g.values[n] - (ga.values[n] + gb.values[n])) <= 1e-12 * (std::abs(ga.values[n]) + std::abs(gb.values[n])));
    }
  }
}

TEST_CASE("spectrum Gamma identity: phi_n of e^{-r^2} is 2^{-(n+1)}") {
  const auto eig = eigen_sequence(GaussianRadialSymbol{1.0, -1.0}, 10);
  for (int n = 0; n <= 10; ++n) CHECK(eig.values[n].real() == std::ldexp(1.0, -(n + 1)));
}

TEST_CASE("worked quadrature examples") {
  CHECK(std::abs(quadrature_eigen(gamma_symbol(2.0), 1, {200}) - 0.5) < 1e-10);
  CHECK(std::abs(quadrature_eigen(PolynomialRadialSymbol({0.0, 1.0}), 4, {64}) - 5.0) < 1e-10);
  CHECK(std::abs(quadrature_eigen(maxwell_boltzmann_symbol(1.0), 2, {200}) - std::exp(-0.5 - 2.0)) < 1e-10);
}

TEST_CASE("unimodular symbol spectrum") {
  const Complex base{0.5, -std::sqrt(3.0) / 2.0};
  const auto eig = eigen_sequence(unimodular_outside_p_symbol(), 2);
  for (int n = 0; n <= 2; ++n) {
    CHECK(close_rel(eig.values[n], std::pow(base, -(n + 1)), 1e-15));
    CHECK(std::abs(std::abs(eig.values[n]) - 1.0) < 1e-15);
  }
}
