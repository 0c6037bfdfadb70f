#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bt/complex.hpp"
#include "bt/decision.hpp"

namespace bt {

/// phi(r) = amplitude * exp(exponent * r^2).
///
/// The gamma_k family is (amplitude k, exponent 1 - k); the unimodular
/// non-P example is (1, 1/2 + i sqrt(3)/2).
struct GaussianRadialSymbol {
  Complex amplitude{1.0, 0.0};
  Complex exponent{};

  /// 1 - exponent: decay rate of phi(sqrt t) e^{-t}. Spectra are
  /// amplitude * decay^{-(n+1)}.
  Complex decay() const { return 1.0 - exponent; }

  friend bool operator==(const GaussianRadialSymbol&, const GaussianRadialSymbol&) = default;
};

/// gamma_k(r) = k exp((1 - k) r^2); spectrum {k^{-n}}.
GaussianRadialSymbol gamma_symbol(Complex k);

/// exp(beta/2) exp((1 - e^beta) r^2), the anti-Wick symbol of the harmonic
/// oscillator density matrix exp(-beta (N + 1/2)).
GaussianRadialSymbol maxwell_boltzmann_symbol(double beta);

/// exp((1/2 + i sqrt(3)/2) r^2): in L1_inf with unimodular spectrum, but
/// u_0 = 1 is outside its natural domain.
GaussianRadialSymbol unimodular_outside_p_symbol();

/// True when the symbol is gamma_k for k = amplitude, i.e.
/// amplitude + exponent == 1 up to `tol` relative to 1 + |amplitude|.
bool is_gamma_form(const GaussianRadialSymbol& sym, double tol = 1e-12);

/// phi(r) = sum_m p_m r^{2m}. Trailing zero coefficients are dropped.
class PolynomialRadialSymbol {
 public:
  PolynomialRadialSymbol() = default;
  explicit PolynomialRadialSymbol(std::vector<Complex> coefficients);

  const std::vector<Complex>& coefficients() const { return coefficients_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  friend bool operator==(const PolynomialRadialSymbol&, const PolynomialRadialSymbol&) = default;

 private:
  std::vector<Complex> coefficients_;
};

/// Black-box radial symbol with a declared envelope |phi(r)| <= C e^{delta r^2}.
/// The envelope is checked at every evaluation; a violation throws
/// EnvelopeViolation.
struct EnvelopedSymbol {
  std::function<Complex(double)> evaluator;
  double envelope_C = 1.0;
  double envelope_delta = 0.0;
  /// JSON text of the descriptor this symbol was built from, when any.
  /// Symbols built from an arbitrary callable are not serializable.
  std::optional<std::string> source;
};

using RadialSymbol = std::variant<GaussianRadialSymbol, PolynomialRadialSymbol, EnvelopedSymbol>;

/// phi(r). Throws InvalidInput for r < 0, EnvelopeViolation for an
/// enveloped symbol exceeding its bound.
Complex eval_symbol(const RadialSymbol& sym, double r);

/// phi at t = r^2 as value * exp(log_scale). Gaussian symbols keep the
/// growth in log_scale so that the value never overflows.
struct ScaledValue {
  double log_scale = 0.0;
  Complex value{};
};
ScaledValue eval_symbol_scaled(const RadialSymbol& sym, double t);

/// alpha * phi, staying inside the variant.
RadialSymbol scaled(const RadialSymbol& sym, Complex alpha);

/// Short human label, e.g. "gaussian(c=2+0i, sigma=-1+0i)".
std::string describe(const RadialSymbol& sym);

struct MomentEvidence {
  int m = 0;
  /// int_0^inf |phi(r)| r^m e^{-r^2} dr, or an upper bound for polynomials;
  /// absent when the integral diverges or the numeric check did not settle.
  std::optional<double> value;
  bool closed_form = false;
};

struct ClassificationReport {
  Decision in_L1_inf = Decision::undecidable;
  /// Largest m for which the L1_inf moment was verified (closed form or
  /// envelope); for undecidable symbols, the largest m whose numeric check
  /// settled, reported as evidence only.
  std::optional<int> largest_verified_moment;
  Decision in_P = Decision::undecidable;
  Decision in_folland = Decision::undecidable;
  Decision in_coburn = Decision::undecidable;
  std::vector<MomentEvidence> moments;
  std::vector<std::string> reasons;
};

/// Decides membership in L1_inf, P, Folland's and Coburn's classes.
/// Exact for Gaussian and polynomial symbols; envelope-driven for enveloped
/// symbols. Moments m = 0..m_max are attached as evidence.
ClassificationReport classify(const RadialSymbol& sym, int m_max);

}  // namespace bt
