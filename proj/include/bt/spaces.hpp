#pragma once

#include <optional>
#include <vector>

#include "bt/complex.hpp"
#include "bt/laguerre.hpp"
#include "bt/spectra.hpp"

namespace bt {

/// Truncated element of the Segal-Bargmann space F^2(C, dmu),
/// psi(z) = sum_n c_n u_n(z) with u_n(z) = z^n / sqrt(n!).
///
/// The u-basis coefficients are the canonical representation; they coincide
/// with the l^2 image, so the unitary map to sequences is a copy.
class FockPolynomial {
 public:
  FockPolynomial() = default;
  explicit FockPolynomial(std::vector<Complex> u_coeffs) : coeffs_(std::move(u_coeffs)) {}

  /// u_n itself.
  static FockPolynomial basis(int n);

  const std::vector<Complex>& u_coeffs() const { return coeffs_; }
  /// Truncation degree N (coefficient count - 1); -1 when empty.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(int n) const { return n >= 0 && n <= degree() ? coeffs_[n] : Complex{}; }
  bool is_zero() const;

  /// psi(z) by Horner on the Maclaurin coefficients.
  Complex operator()(Complex z) const;

  /// Maclaurin coefficients a_n = c_n / sqrt(n!).
  std::vector<Complex> monomial_coeffs() const;

  /// sum |c_n|^2
  double norm_squared() const;

 private:
  std::vector<Complex> coeffs_;
};

/// Truncated l^2 sequence with optional geometric tail metadata describing
/// the entries beyond the stored ones.
struct L2Sequence {
  std::vector<Complex> entries;
  std::optional<GeometricTail> tail;
};

/// U psi = { psi^(n)(0) / sqrt(n!) }; exact.
L2Sequence to_sequence(const FockPolynomial& poly);

/// U^{-1}; drops tail metadata (the polynomial is the stored truncation).
FockPolynomial from_sequence(const L2Sequence& seq);

/// (f, g) = sum conj(f_n) g_n; antilinear in f. Mismatched truncations are
/// zero-padded.
Complex fock_inner(const FockPolynomial& f, const FockPolynomial& g);
Complex sequence_inner(const L2Sequence& a, const L2Sequence& b);

/// <conj(z)|w> = e^{-|z|^2/2} e^{-|w|^2/2} e^{z w}.
Complex coherent_overlap(Complex z, Complex w);

/// <n|z> = e^{-|z|^2/2} z^n / sqrt(n!).
Complex coherent_component(Complex z, int n);

/// Radius of the disk on which reproduce_at is validated.
inline constexpr double kReproduceRadius = 2.0;

/// (K_{conj z}, psi) = int e^{z conj w} psi(w) dmu(w) by polar quadrature.
/// Equals psi(z) for psi in F^2. Throws InvalidInput outside |z| <= 2 and
/// NonConvergent when Q and 2Q radial nodes disagree.
Complex reproduce_at(const FockPolynomial& poly, Complex z, const QuadratureSpec& spec);

/// M_{mn} = (1/pi) int <m|z><z|n> d^2z for m, n <= n_max by polar quadrature;
/// the truncated resolution of the identity.
std::vector<std::vector<Complex>> truncated_identity(int n_max, const QuadratureSpec& spec);

/// Angular node count used for degree-N integrands: 4(N+1).
inline int angular_nodes_for_degree(int degree) { return 4 * (degree + 1); }

}  // namespace bt
