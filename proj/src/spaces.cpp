#include "bt/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bt/errors.hpp"
#include "bt/kernels.hpp"

namespace bt {

namespace {

// Angular nodes for the reproducing-kernel integrand e^{z conj w} psi(w).
// The kernel is not a trigonometric polynomial; with |z| <= 2, aliasing of
// the order-M Taylor term is below |z|^M (M/2)! / M! < 1e-20 once M >= 48.
int reproduce_angular_nodes(int degree) { return std::max(angular_nodes_for_degree(degree), 48); }

template <class Eval>
Complex converged(const QuadratureSpec& spec, Eval&& eval, const char* what) {
  const auto coarse = eval(spec.node_count);
  if (spec.check_convergence) {
    const auto fine = eval(2 * spec.node_count);
    if (!kernels::agrees(coarse, fine, spec.tolerance)) {
      throw NonConvergent(std::string(what) + ": " + std::to_string(spec.node_count) + " and " +
                          std::to_string(2 * spec.node_count) + " radial nodes differ by " +
                          std::to_string(std::abs(coarse.value - fine.value)));
    }
  }
  return coarse.value;
}

}  // namespace

FockPolynomial FockPolynomial::basis(int n) {
  if (n < 0) throw InvalidInput("basis index must be >= 0");
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  return FockPolynomial(std::move(c));
}

bool FockPolynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

std::vector<Complex> FockPolynomial::monomial_coeffs() const {
  std::vector<Complex> a(coeffs_.size());
  double inv_sqrt_factorial = 1.0;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (n > 0) inv_sqrt_factorial /= std::sqrt(double(n));
    a[n] = coeffs_[n] * inv_sqrt_factorial;
  }
  return a;
}

Complex FockPolynomial::operator()(Complex z) const {
  const auto a = monomial_coeffs();
  Complex acc{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double FockPolynomial::norm_squared() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return s;
}

L2Sequence to_sequence(const FockPolynomial& poly) { return {poly.u_coeffs(), std::nullopt}; }

FockPolynomial from_sequence(const L2Sequence& seq) { return FockPolynomial(seq.entries); }

Complex fock_inner(const FockPolynomial& f, const FockPolynomial& g) {
  return sequence_inner(to_sequence(f), to_sequence(g));
}

Complex sequence_inner(const L2Sequence& a, const L2Sequence& b) {
  const std::size_t n = std::min(a.entries.size(), b.entries.size());
  Complex s{};
  for (std::size_t i = 0; i < n; ++i) s += std::conj(a.entries[i]) * b.entries[i];
  return s;
}

Complex coherent_overlap(Complex z, Complex w) {
  return std::exp(-0.5 * std::norm(z) - 0.5 * std::norm(w) + z * w);
}

Complex coherent_component(Complex z, int n) {
  if (n < 0) throw InvalidInput("occupation number must be >= 0");
  // e^{-|z|^2/2} z^n / sqrt(n!) in log-magnitude form.
  const double r = std::abs(z);
  if (r == 0.0) return n == 0 ? Complex{1.0} : Complex{};
  const double log_mag = -0.5 * r * r + n * std::log(r) - 0.5 * std::lgamma(n + 1.0);
  return std::polar(std::exp(log_mag), n * std::arg(z));
}

Complex reproduce_at(const FockPolynomial& poly, Complex z, const QuadratureSpec& spec) {
  if (!(std::abs(z) <= kReproduceRadius)) {
    throw InvalidInput("reproduce_at is validated on |z| <= 2, got |z| = " + std::to_string(std::abs(z)));
  }
  const int angular = reproduce_angular_nodes(std::max(poly.degree(), 0));
  const auto a = poly.monomial_coeffs();
  auto eval = [&](int nodes) {
    const auto rule = laguerre_rule(nodes);
    return kernels::parallel::polar_sum(*rule, angular, [&](double, Complex w) {
      Complex psi{};
      for (auto it = a.rbegin(); it != a.rend(); ++it) psi = psi * w + *it;
      return kernels::Scaled{0.0, std::exp(z * std::conj(w)) * psi};
    });
  };
  return converged(spec, eval, "reproducing kernel");
}

std::vector<std::vector<Complex>> truncated_identity(int n_max, const QuadratureSpec& spec) {
  if (n_max < 0) throw InvalidInput("n_max must be >= 0");
  const int angular = angular_nodes_for_degree(n_max);
  std::vector<std::vector<Complex>> m(n_max + 1, std::vector<Complex>(n_max + 1));
  for (int row = 0; row <= n_max; ++row) {
    for (int col = 0; col <= n_max; ++col) {
      auto eval = [&](int nodes) {
        const auto rule = laguerre_rule(nodes);
        // d^2z / pi = e^{|z|^2} dmu(z)
        return kernels::parallel::polar_sum(*rule, angular, [&](double t, Complex w) {
          return kernels::Scaled{t, coherent_component(w, row) * std::conj(coherent_component(w, col))};
        });
      };
      m[row][col] = converged(spec, eval, "resolution of identity");
    }
  }
  return m;
}

}  // namespace bt
