#include "bt/spectra.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "bt/errors.hpp"
#include "bt/kernels.hpp"

namespace bt {

void require_convergent_moments(const RadialSymbol& sym) {
  if (const auto* g = std::get_if<GaussianRadialSymbol>(&sym)) {
    if (g->amplitude != Complex{} && !(g->decay().real() > 0.0)) {
      throw DivergentMoment("Re(1 - sigma) = " + std::to_string(g->decay().real()) +
                            " <= 0: the symbol is outside L1_inf and phi_n diverges");
    }
  } else if (const auto* e = std::get_if<EnvelopedSymbol>(&sym)) {
    if (!(e->envelope_delta < 1.0)) {
      throw DivergentMoment("envelope delta = " + std::to_string(e->envelope_delta) +
                            " >= 1 does not certify convergence of phi_n");
    }
  }
}

namespace {

kernels::QuadratureSum eigen_sum(const RadialSymbol& sym, int n, int node_count) {
  const auto rule = laguerre_rule(node_count);
  const double log_factorial = std::lgamma(n + 1.0);
  return kernels::parallel::radial_sum(*rule, [&](double t) {
    const ScaledValue phi = eval_symbol_scaled(sym, t);
    return kernels::Scaled{phi.log_scale + n * std::log(t) - log_factorial, phi.value};
  });
}

EigenSequence gaussian_sequence(const GaussianRadialSymbol& g, int n_max) {
  EigenSequence seq;
  seq.method = EigenMethod::closed_form;
  seq.values.resize(n_max + 1);
  if (g.amplitude == Complex{}) return seq;
  const Complex decay = g.decay();
  Complex v = g.amplitude / decay;
  for (int n = 0; n <= n_max; ++n) {
    seq.values[n] = v;
    v /= decay;
  }
  seq.tail = GeometricTail{1.0 / decay};
  return seq;
}

EigenSequence polynomial_sequence(const PolynomialRadialSymbol& p, int n_max) {
  EigenSequence seq;
  seq.method = EigenMethod::closed_form;
  seq.values.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    // (n+m)!/n! = (n+1)(n+2)...(n+m)
    Complex acc{};
    double rising = 1.0;
    for (int m = 0; m <= p.degree(); ++m) {
      if (m > 0) rising *= n + m;
      acc += p.coefficients()[m] * rising;
    }
    seq.values[n] = acc;
  }
  return seq;
}

}  // namespace

EigenSequence eigen_sequence(const RadialSymbol& sym, int n_max, const QuadratureSpec& spec) {
  if (n_max < 0) throw InvalidInput("n_max must be >= 0");
  require_convergent_moments(sym);
  if (const auto* g = std::get_if<GaussianRadialSymbol>(&sym)) return gaussian_sequence(*g, n_max);
  if (const auto* p = std::get_if<PolynomialRadialSymbol>(&sym)) return polynomial_sequence(*p, n_max);
  return quadrature_sequence(sym, n_max, spec);
}

Complex quadrature_eigen(const RadialSymbol& sym, int n, const QuadratureSpec& spec) {
  if (n < 0) throw InvalidInput("eigenvalue index must be >= 0");
  if (spec.node_count < 1) throw InvalidInput("node_count must be >= 1");
  require_convergent_moments(sym);

  const auto coarse = eigen_sum(sym, n, spec.node_count);
  if (spec.check_convergence) {
    const auto fine = eigen_sum(sym, n, 2 * spec.node_count);
    if (!kernels::agrees(coarse, fine, spec.tolerance)) {
      throw NonConvergent("phi_" + std::to_string(n) + ": " + std::to_string(spec.node_count) + " and " +
                          std::to_string(2 * spec.node_count) + " nodes differ by " +
                          std::to_string(std::abs(coarse.value - fine.value)));
    }
  }
  return coarse.value;
}

EigenSequence quadrature_sequence(const RadialSymbol& sym, int n_max, const QuadratureSpec& spec) {
  if (n_max < 0) throw InvalidInput("n_max must be >= 0");
  require_convergent_moments(sym);
  // Build the rules before entering the parallel region.
  laguerre_rule(spec.node_count);
  if (spec.check_convergence) laguerre_rule(2 * spec.node_count);

  EigenSequence seq;
  seq.method = EigenMethod::quadrature;
  seq.values.resize(n_max + 1);
  std::vector<std::exception_ptr> errors(n_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (int n = 0; n <= n_max; ++n) {
    try {
      seq.values[n] = quadrature_eigen(sym, n, spec);
    } catch (...) {
      errors[n] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return seq;
}

}  // namespace bt
