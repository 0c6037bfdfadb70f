#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bt/complex.hpp"
#include "bt/laguerre.hpp"
#include "bt/symbols.hpp"

namespace bt {

enum class EigenMethod { closed_form, quadrature };

constexpr std::string_view to_string(EigenMethod m) {
  return m == EigenMethod::closed_form ? "closed_form" : "quadrature";
}

/// values[n+1] = ratio * values[n] for every n, stored or not.
struct GeometricTail {
  Complex ratio{};
  friend bool operator==(const GeometricTail&, const GeometricTail&) = default;
};

/// Eigenvalues phi_0..phi_N of a radial anti-Wick operator on the
/// occupation-number basis.
struct EigenSequence {
  std::vector<Complex> values;
  EigenMethod method = EigenMethod::closed_form;
  std::optional<GeometricTail> tail;

  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

/// Throws DivergentMoment unless the moments int |phi| r^m e^{-r^2} dr are
/// known to converge: Gaussian symbols need Re(1 - sigma) > 0, enveloped
/// symbols need delta < 1.
void require_convergent_moments(const RadialSymbol& sym);

/// phi_n = (1/n!) int_0^inf phi(sqrt t) t^n e^{-t} dt for n = 0..n_max.
///
/// Closed form for Gaussian (c (1 - sigma)^{-(n+1)}, geometric tail with
/// ratio 1/(1 - sigma)) and polynomial (sum_m p_m (n+m)!/n!) symbols;
/// enveloped symbols go through quadrature_sequence.
/// Throws DivergentMoment when Re(1 - sigma) <= 0 or when the envelope does
/// not certify convergence (delta >= 1).
EigenSequence eigen_sequence(const RadialSymbol& sym, int n_max, const QuadratureSpec& spec = {});

/// One eigenvalue by Gauss-Laguerre quadrature in t = r^2, with the 1/n! t^n
/// factor carried in log space. Under the convergence policy of `spec` the
/// node_count result is returned after a 2*node_count cross-check; throws
/// NonConvergent when they disagree.
Complex quadrature_eigen(const RadialSymbol& sym, int n, const QuadratureSpec& spec);

/// quadrature_eigen for n = 0..n_max, distinct n evaluated concurrently.
EigenSequence quadrature_sequence(const RadialSymbol& sym, int n_max, const QuadratureSpec& spec);

}  // namespace bt
