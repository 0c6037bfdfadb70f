#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bt/decision.hpp"
#include "bt/laguerre.hpp"
#include "bt/spaces.hpp"
#include "bt/spectra.hpp"
#include "bt/symbols.hpp"

namespace bt {

/// Pointwise multiplier {phi_n} on l^2.
struct DiagonalOperator {
  EigenSequence eigen;
};

struct DiagonalResult {
  L2Sequence sequence;
  /// Set when the tails say {phi_n psi_n} leaves l^2 beyond the truncation.
  std::optional<std::string> domain_warning;
};

/// entries[n] = phi_n psi_n. The shorter operand is zero-padded. When both
/// the operator and the sequence carry geometric tails, the result carries
/// their product, and |ratio product| >= 1 attaches a domain warning.
DiagonalResult diagonal_apply(const DiagonalOperator& op, const L2Sequence& seq);

/// U^{-1} D U: the diagonal realization pulled back to F^2. Coincides with
/// toeplitz_apply on the natural domain and extends it beyond.
FockPolynomial extension_apply(const DiagonalOperator& op, const FockPolynomial& poly);

/// <m|A_phi|n> = int phi(|w|) conj(u_m(w)) u_n(w) dmu(w) by polar quadrature
/// with 4(max(m,n)+1) angles. Vanishes off the diagonal; equals phi_n on it.
/// Throws DivergentMoment outside L1_inf, NonConvergent on Q/2Q disagreement.
Complex anti_wick_matrix_element(const RadialSymbol& sym, int m, int n, const QuadratureSpec& spec);

/// Whether phi psi is in L^2(C, dmu). For a polynomial psi the angular
/// integral decouples, so this reduces to finiteness of the |phi|^2 moments
/// at the degrees present in psi.
Decision in_natural_domain(const RadialSymbol& sym, const FockPolynomial& poly);

/// Bargmann projection P(phi psi) read off coefficientwise,
/// b_m = int conj(u_m) phi psi dmu, by polar quadrature on a grid tabulating
/// phi psi once. No use is made of the diagonal form of radial operators.
/// Throws DomainViolation unless in_natural_domain is yes.
FockPolynomial toeplitz_apply(const RadialSymbol& sym, const FockPolynomial& poly, const QuadratureSpec& spec);

enum class Verdict { equivalent, not_equivalent, undecidable };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::not_equivalent: return "not_equivalent";
    case Verdict::undecidable: return "undecidable";
  }
  return "undecidable";
}

struct EquivalenceReport {
  Decision symbol_in_P = Decision::undecidable;
  int max_tested_n = 0;
  /// ||T_phi u_n - phi_n u_n|| for n = 0..max_tested_n; empty when T_phi
  /// is not defined on the basis.
  std::vector<double> per_n_residual;
  double tolerance = 0.0;
  Verdict verdict = Verdict::undecidable;
  std::string reason;
  /// Whether the diagonal extension U^{-1} D U is available (symbol in L1_inf).
  bool extension_defined = false;
};

/// Checks unitary equivalence of T_phi and U^{-1} D U on u_0..u_{n_max}.
/// Never throws on numeric trouble; failures become an undecidable verdict.
EquivalenceReport equivalence_report(const RadialSymbol& sym, int n_max, double tol, const QuadratureSpec& spec);

}  // namespace bt
