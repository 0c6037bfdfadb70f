// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Tolerances are the ones each criterion states; "exact" closed-form
// comparisons are pinned at kRounding relative error.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bt/composition.hpp"
#include "bt/laguerre.hpp"
#include "bt/operators.hpp"
#include "bt/serialize.hpp"
#include "bt/spaces.hpp"
#include "bt/spectra.hpp"
#include "bt/symbols.hpp"

using namespace bt;

namespace {

constexpr double kRounding = 1e-13;

std::mt19937_64 gen(7);
double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
Complex in_disk(double radius) {
  return std::polar(radius * std::sqrt(uniform(0, 1)), uniform(0, 2 * std::numbers::pi));
}
std::vector<Complex> random_coeffs(int degree) {
  std::vector<Complex> c(degree + 1);
  for (auto& x : c) x = {uniform(-1, 1), uniform(-1, 1)};
  return c;
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << x;
  return os.str();
}

struct Result {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::vector<RadialSymbol> corpus() {
  return {gamma_symbol(2.0),
          gamma_symbol(std::numbers::e),
          gamma_symbol({0.6, -0.8}),
          gamma_symbol({0.8, -0.9}),
          gamma_symbol(1.0),
          maxwell_boltzmann_symbol(1.0),
          unimodular_outside_p_symbol(),
          PolynomialRadialSymbol({0.0, 1.0}),
          PolynomialRadialSymbol({{1.0, 0.0}, {0.5, 0.0}, {0.0, -0.1}}),
          enveloped_function("cos_r2", nullptr, 1.0, 0.0),
          enveloped_function("bessel_j0", nullptr, 1.0, 0.0),
          enveloped_function("chirp", Json{{"omega", 0.5}}, 1.0, 0.0)};
}

Result gaussian_spectra() {
  Result r;
  const QuadratureSpec spec{200};
  double worst_exact = 0.0;
  double worst_quad = 0.0;
  for (Complex k : {Complex{2.0}, Complex{std::numbers::e}, Complex{0.6, -0.8}, Complex{0.8, -0.9}}) {
    const auto g = gamma_symbol(k);
    const auto eig = eigen_sequence(g, 40);
    for (int n = 0; n <= 40; ++n) {
      const Complex expected = std::pow(k, -n);
      worst_exact = std::max(worst_exact, std::abs(eig.values[n] - expected) / std::abs(expected));
    }
    for (int n = 0; n <= 20; ++n) worst_quad = std::max(worst_quad, std::abs(quadrature_eigen(g, n, spec) - eig.values[n]));
  }
  r.require(worst_exact < kRounding, "closed form deviates from k^-n by " + sci(worst_exact));
  r.require(worst_quad < 1e-8, "quadrature deviates by " + sci(worst_quad));
  r.detail = r.pass ? "closed form rel " + sci(worst_exact) + ", quadrature abs " + sci(worst_quad) : r.detail;
  return r;
}

Result unimodular_example() {
  Result r;
  const auto g = unimodular_outside_p_symbol();
  double dev = 0.0;
  for (const Complex& v : eigen_sequence(g, 30).values) dev = std::max(dev, std::abs(std::abs(v) - 1.0));
  const auto cls = classify(g, 2);
  const auto eq = equivalence_report(g, 8, 1e-8, {});
  r.require(dev < 1e-10, "| |phi_n| - 1 | = " + sci(dev));
  r.require(cls.in_L1_inf == Decision::yes, "in_L1_inf is not yes");
  r.require(cls.in_P == Decision::no, "in_P is not no");
  r.require(eq.verdict == Verdict::not_equivalent, "verdict is " + std::string(to_string(eq.verdict)));
  r.require(eq.reason.rfind("u_0 ", 0) == 0, "reason does not cite u_0: " + eq.reason);
  if (r.pass) r.detail = "max | |phi_n| - 1 | = " + sci(dev) + "; " + eq.reason.substr(0, eq.reason.find(';'));
  return r;
}

Result diagonality() {
  Result r;
  const QuadratureSpec spec;
  double off = 0.0;
  double diag = 0.0;
  for (const auto& sym : corpus()) {
    const auto eig = eigen_sequence(sym, 8, spec);
    for (int m = 0; m <= 8; ++m) {
      for (int n = 0; n <= 8; ++n) {
        const Complex a = anti_wick_matrix_element(sym, m, n, spec);
        if (m == n) {
          diag = std::max(diag, std::abs(a - eig.values[n]));
        } else {
          off = std::max(off, std::abs(a));
        }
      }
    }
  }
  r.require(off < 1e-9, "off-diagonal " + sci(off));
  r.require(diag < 1e-8, "diagonal mismatch " + sci(diag));
  if (r.pass) r.detail = "max off-diagonal " + sci(off) + ", max diagonal error " + sci(diag);
  return r;
}

Result theorem_equivalence() {
  Result r;
  const QuadratureSpec spec;
  const auto g = gamma_symbol(2.0);
  double residual = 0.0;
  for (int n = 0; n <= 12; ++n) {
    const auto image = toeplitz_apply(g, FockPolynomial::basis(n), spec);
    double sq = 0.0;
    for (int m = 0; m <= image.degree(); ++m) sq += std::norm(image.coeff(m) - (m == n ? std::ldexp(1.0, -n) : 0.0));
    residual = std::max(residual, std::sqrt(sq));
  }
  const DiagonalOperator d{eigen_sequence(g, 12)};
  double ext = 0.0;
  for (int i = 0; i < 50; ++i) {
    const FockPolynomial p(random_coeffs(static_cast<int>(uniform(0, 11))));
    const auto direct = toeplitz_apply(g, p, spec);
    const auto via_l2 = from_sequence(diagonal_apply(d, to_sequence(p)).sequence);
    for (int m = 0; m <= p.degree(); ++m) ext = std::max(ext, std::abs(direct.coeff(m) - via_l2.coeff(m)));
  }
  r.require(residual < 1e-8, "residual " + sci(residual));
  r.require(ext < 1e-8, "extension mismatch " + sci(ext));
  if (r.pass) r.detail = "max residual " + sci(residual) + ", max U^-1 D U mismatch " + sci(ext);
  return r;
}

Result maxwell_boltzmann() {
  Result r;
  const auto g = maxwell_boltzmann_symbol(1.0);
  const auto closed = eigen_sequence(g, 20);
  const auto quad = quadrature_sequence(g, 20, {});
  double worst = 0.0;
  double worst_quad = 0.0;
  for (int n = 0; n <= 20; ++n) {
    const double expected = std::exp(-0.5) * std::exp(-double(n));
    worst = std::max(worst, std::abs(closed.values[n] - expected));
    worst_quad = std::max(worst_quad, std::abs(quad.values[n] - expected));
  }
  r.require(worst < 1e-10, "closed form " + sci(worst));
  r.require(worst_quad < 1e-10, "quadrature " + sci(worst_quad));
  if (r.pass) r.detail = "closed form " + sci(worst) + ", quadrature " + sci(worst_quad);
  return r;
}

Result coburn_counterexample() {
  Result r;
  const Complex a{0.6, -0.8};
  const auto same = compose_gaussian(gamma_symbol(a), gamma_symbol(a));
  r.require(same.status == CompositionStatus::not_toeplitz_in_P, "a*a status " + std::string(to_string(same.status)));
  r.require(std::abs((a * a).real() + 7.0 / 25.0) < kRounding, "Re(a^2) != -7/25");
  const auto inv = compose_gaussian(gamma_symbol(a), gamma_symbol(std::conj(a)));
  r.require(inv.status == CompositionStatus::closed_in_P, "a*conj(a) status " + std::string(to_string(inv.status)));
  r.require(inv.recognized_symbol && close_rel(inv.recognized_symbol->amplitude, 1.0, kRounding) &&
                std::abs(inv.recognized_symbol->exponent) < kRounding,
            "recognized symbol is not gamma_1");
  double ones = 0.0;
  for (const Complex& v : inv.product_sequence.values) ones = std::max(ones, std::abs(v - 1.0));
  r.require(ones < kRounding, "product sequence deviates from 1 by " + sci(ones));
  if (r.pass) r.detail = "a^2 = " + format_complex(a * a) + " -> not_toeplitz_in_P; a conj(a) -> gamma_1";
  return r;
}

Result moyal_closure() {
  Result r;
  double exponent_err = 0.0;
  double series_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    // |1 - a| |1 - b| <= 2
    const double ra = uniform(0, 2.0);
    const double rb = uniform(0, 2.0 / std::max(ra, 1.0));
    const Complex a = 1.0 - std::polar(ra, uniform(0, 2 * std::numbers::pi));
    const Complex b = 1.0 - std::polar(rb, uniform(0, 2 * std::numbers::pi));
    const auto m = moyal_gaussian(gamma_symbol(a), gamma_symbol(b));
    r.require(m.amplitude == a * b, "amplitude is not ab");
    exponent_err = std::max(exponent_err, std::abs(m.exponent - (1.0 - a * b)) / (1.0 + std::abs(a * b)));
    const auto target = gamma_symbol(a * b);
    for (double rad : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const Complex w = std::polar(rad, uniform(0, 2 * std::numbers::pi));
      series_err = std::max(series_err, std::abs(moyal_partial_sum(gamma_symbol(a), gamma_symbol(b), 60, w) -
                                                 eval_symbol(target, rad)));
    }
  }
  r.require(exponent_err < kRounding, "exponent differs from 1 - ab by " + sci(exponent_err));
  r.require(series_err < 1e-9, "partial sum differs by " + sci(series_err));
  if (r.pass) r.detail = "exponent rel " + sci(exponent_err) + ", K = 60 series " + sci(series_err);
  return r;
}

Result class_l() {
  Result r;
  for (int i = 0; i < 100; ++i) {
    const double k1 = uniform(1.0, 10.0);
    const double k2 = uniform(1.0, 10.0);
    const auto v = compose_gaussian(gamma_symbol(k1), gamma_symbol(k2));
    r.require(v.status == CompositionStatus::closed_in_P, "pair not closed");
    r.require(v.recognized_symbol && v.recognized_symbol->amplitude.imag() == 0.0 &&
                  v.recognized_symbol->amplitude.real() >= 1.0 &&
                  v.recognized_symbol->amplitude.real() == k1 * k2,
              "product symbol is not gamma_{k1 k2} with k1 k2 >= 1");
  }
  if (r.pass) r.detail = "100 pairs closed_in_P with real k1 k2 >= 1";
  return r;
}

Result reproducing_kernel() {
  Result r;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const FockPolynomial p(random_coeffs(static_cast<int>(uniform(0, 11))));
    for (int j = 0; j < 10; ++j) {
      const Complex z = in_disk(1.0);
      worst = std::max(worst, std::abs(reproduce_at(p, z, {}) - p(z)));
    }
  }
  const auto id = truncated_identity(8, {});
  double id_err = 0.0;
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) id_err = std::max(id_err, std::abs(id[m][n] - (m == n ? 1.0 : 0.0)));
  }
  r.require(worst < 1e-8, "reproduce_at error " + sci(worst));
  r.require(id_err < 1e-8, "resolution of identity error " + sci(id_err));
  if (r.pass) r.detail = "reproduce_at " + sci(worst) + ", identity " + sci(id_err);
  return r;
}

Result unitarity() {
  Result r;
  for (int i = 0; i < 200; ++i) {
    const FockPolynomial f(random_coeffs(static_cast<int>(uniform(0, 16))));
    const FockPolynomial g(random_coeffs(static_cast<int>(uniform(0, 16))));
    r.require(fock_inner(f, g) == sequence_inner(to_sequence(f), to_sequence(g)), "inner product not preserved");
  }
  double worst = 0.0;
  for (int q = 1; q <= 64; ++q) {
    const auto rule = laguerre_rule(q);
    for (int j = 0; j <= 2 * q - 1; ++j) {
      double sum = 0.0;
      for (std::size_t i = 0; i < rule->size(); ++i) {
        sum += std::exp(rule->log_weights[i] + j * std::log(rule->nodes[i]) - std::lgamma(j + 1.0));
      }
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  }
  r.require(worst < 1e-12, "Gauss-Laguerre degree exactness " + sci(worst));
  if (r.pass) r.detail = "200 pairs exact; degree exactness worst rel " + sci(worst);
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"Gaussian spectra k^-n, closed form and quadrature", gaussian_spectra},
      {"unimodular symbol outside P", unimodular_example},
      {"anti-Wick matrix elements are diagonal", diagonality},
      {"Toeplitz operator equals U^-1 D U for gamma_2", theorem_equivalence},
      {"Maxwell-Boltzmann spectrum", maxwell_boltzmann},
      {"Coburn counterexample", coburn_counterexample},
      {"Moyal product closure on gamma_k", moyal_closure},
      {"class L closed under composition", class_l},
      {"reproducing kernel and resolution of identity", reproducing_kernel},
      {"unitarity of U and Gauss-Laguerre exactness", unitarity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    failures += res.pass ? 0 : 1;
    std::printf("%s criterion %zu: %s (%s)\n", res.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                res.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
