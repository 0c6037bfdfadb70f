#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bt/laguerre.hpp"
#include "bt/spectra.hpp"
#include "bt/symbols.hpp"

namespace bt {

enum class CompositionStatus { closed_in_P, not_toeplitz_in_P, unrecognized };

constexpr std::string_view to_string(CompositionStatus s) {
  switch (s) {
    case CompositionStatus::closed_in_P: return "closed_in_P";
    case CompositionStatus::not_toeplitz_in_P: return "not_toeplitz_in_P";
    case CompositionStatus::unrecognized: return "unrecognized";
  }
  return "unrecognized";
}

/// Outcome of composing two radial Toeplitz operators.
/// closed_in_P always comes with a recognized symbol that is itself in P.
struct CompositionVerdict {
  EigenSequence product_sequence;
  std::optional<GaussianRadialSymbol> recognized_symbol;
  CompositionStatus status = CompositionStatus::unrecognized;
  std::string reason;
};

/// values[n] = e1[n] e2[n] over the common length; tail ratios multiply when
/// both are geometric. Closed form only if both inputs are.
EigenSequence compose_sequences(const EigenSequence& e1, const EigenSequence& e2);

/// Fits values[n] = c q^{n+1} by successive-ratio constancy (relative `tol`,
/// anchored at values[0]) and returns the Gaussian symbol whose spectrum
/// reproduces the input: sigma = 1 - 1/q, c = values[0] / q. Absent when
/// fewer than three entries, any zero entry, a non-constant ratio, or
/// Re(1/q) <= 0 (no Gaussian symbol in L1_inf generates the sequence).
std::optional<GaussianRadialSymbol> recognize_gaussian(const EigenSequence& eig, double tol);

/// T_{gamma_a} T_{gamma_b} for gamma-form symbols with Re a, Re b > 1/2:
/// closed in P with symbol gamma_{ab} iff Re(ab) > 1/2. The product sequence
/// is reported for n = 0..n_max. Throws DomainViolation when a factor is
/// not gamma-form or outside P.
CompositionVerdict compose_gaussian(const GaussianRadialSymbol& ga, const GaussianRadialSymbol& gb, int n_max = 16);

/// Sequence-level composition of arbitrary radial symbols in P. Gamma-form
/// pairs go to compose_gaussian; otherwise the product sequence is matched
/// against the Gaussian family, and anything not recognized is reported as
/// such rather than guessed.
CompositionVerdict compose_symbols(const RadialSymbol& a, const RadialSymbol& b, int n_max,
                                   const QuadratureSpec& spec = {});

/// Closed-form sum of the Moyal-type series for two Gaussian symbols:
/// amplitude c_a c_b, exponent sigma_a + sigma_b - sigma_a sigma_b. For gamma_a,
/// gamma_b this is gamma_{ab}. Defined for every a, b.
GaussianRadialSymbol moyal_gaussian(const GaussianRadialSymbol& ga, const GaussianRadialSymbol& gb);

/// sum_{k=0}^{K} ((-1)^k / k!) d^k phi_a(w) dbar^k phi_b(w), each derivative
/// taken term by term: d^k (c e^{sigma w wbar}) = c sigma^k wbar^k e^{sigma |w|^2}.
/// Reference evaluator for moyal_gaussian.
Complex moyal_partial_sum(const GaussianRadialSymbol& ga, const GaussianRadialSymbol& gb, int K, Complex w);

}  // namespace bt
