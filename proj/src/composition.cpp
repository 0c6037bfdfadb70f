#include "bt/composition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bt/errors.hpp"

namespace bt {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void require_gamma_in_p(const GaussianRadialSymbol& g, const char* which) {
  if (!is_gamma_form(g)) {
    throw DomainViolation(std::string(which) + " = " + describe(g) + " is not of the form k e^{(1-k) r^2}");
  }
  if (!(g.amplitude.real() > 0.5)) {
    throw DomainViolation(std::string(which) + ": Re k = " + num(g.amplitude.real()) +
                          " <= 1/2, the factor is outside P and T_phi is not densely defined");
  }
}

}  // namespace

EigenSequence compose_sequences(const EigenSequence& e1, const EigenSequence& e2) {
  EigenSequence out;
  const std::size_t len = std::min(e1.values.size(), e2.values.size());
  out.values.resize(len);
  for (std::size_t n = 0; n < len; ++n) out.values[n] = e1.values[n] * e2.values[n];
  out.method = e1.method == EigenMethod::closed_form && e2.method == EigenMethod::closed_form
                   ? EigenMethod::closed_form
                   : EigenMethod::quadrature;
  if (e1.tail && e2.tail) out.tail = GeometricTail{e1.tail->ratio * e2.tail->ratio};
  return out;
}

std::optional<GaussianRadialSymbol> recognize_gaussian(const EigenSequence& eig, double tol) {
  const auto& v = eig.values;
  if (v.size() < 3) return std::nullopt;
  if (std::any_of(v.begin(), v.end(), [](Complex x) { return x == Complex{}; })) return std::nullopt;

  const Complex ratio = v[1] / v[0];
  for (std::size_t n = 1; n + 1 < v.size(); ++n) {
    if (std::abs(v[n + 1] / v[n] - ratio) > tol * std::abs(ratio)) return std::nullopt;
  }
  const Complex decay = 1.0 / ratio;
  if (!(decay.real() > 0.0)) return std::nullopt;
  return GaussianRadialSymbol{v[0] * decay, 1.0 - decay};
}

CompositionVerdict compose_gaussian(const GaussianRadialSymbol& ga, const GaussianRadialSymbol& gb, int n_max) {
  if (n_max < 0) throw InvalidInput("n_max must be >= 0");
  require_gamma_in_p(ga, "first factor");
  require_gamma_in_p(gb, "second factor");

  CompositionVerdict verdict;
  verdict.product_sequence = compose_sequences(eigen_sequence(ga, n_max), eigen_sequence(gb, n_max));
  const Complex ab = ga.amplitude * gb.amplitude;
  const std::string ab_text = "ab = " + format_complex(ab);
  if (ab.real() > 0.5) {
    verdict.status = CompositionStatus::closed_in_P;
    verdict.recognized_symbol = gamma_symbol(ab);
    verdict.reason = ab_text + " has Re(ab) = " + num(ab.real()) +
                     " > 1/2: the product spectrum {(ab)^{-n}} is that of gamma_{ab}, which is in P";
  } else {
    verdict.status = CompositionStatus::not_toeplitz_in_P;
    verdict.reason = ab_text + " has Re(ab) = " + num(ab.real()) +
                     " <= 1/2: the composition is densely defined but is not a Toeplitz operator with symbol in P";
    if (ab.real() <= 0.0) verdict.reason += " (gamma_{ab} is not even in L1_inf)";
  }
  return verdict;
}

CompositionVerdict compose_symbols(const RadialSymbol& a, const RadialSymbol& b, int n_max,
                                   const QuadratureSpec& spec) {
  const auto* ga = std::get_if<GaussianRadialSymbol>(&a);
  const auto* gb = std::get_if<GaussianRadialSymbol>(&b);
  if (ga && gb && is_gamma_form(*ga) && is_gamma_form(*gb)) return compose_gaussian(*ga, *gb, n_max);

  if (classify(a, 0).in_P != Decision::yes || classify(b, 0).in_P != Decision::yes) {
    throw DomainViolation("composition through l^2 needs both symbols in P");
  }

  // c e^{sigma r^2} = (c / d) gamma_d with d = 1 - sigma: reduce to gamma form.
  if (ga && gb && ga->amplitude != Complex{} && gb->amplitude != Complex{}) {
    const Complex scale = (ga->amplitude / ga->decay()) * (gb->amplitude / gb->decay());
    CompositionVerdict verdict = compose_gaussian(gamma_symbol(ga->decay()), gamma_symbol(gb->decay()), n_max);
    verdict.product_sequence = compose_sequences(eigen_sequence(a, n_max, spec), eigen_sequence(b, n_max, spec));
    if (verdict.recognized_symbol) verdict.recognized_symbol->amplitude *= scale;
    verdict.reason += "; both factors are scalar multiples of gamma symbols, overall factor " + format_complex(scale);
    return verdict;
  }

  CompositionVerdict verdict;
  verdict.product_sequence = compose_sequences(eigen_sequence(a, n_max, spec), eigen_sequence(b, n_max, spec));
  const auto fit = recognize_gaussian(verdict.product_sequence, 1e-10);
  if (fit && classify(*fit, 0).in_P == Decision::yes) {
    verdict.status = CompositionStatus::closed_in_P;
    verdict.recognized_symbol = fit;
    verdict.reason = "product spectrum is geometric and matches " + describe(*fit) + ", which is in P";
  } else {
    verdict.status = CompositionStatus::unrecognized;
    verdict.reason = fit ? "product spectrum fits " + describe(*fit) +
                               ", outside P; no representability claim is made beyond the Gaussian family"
                         : "product spectrum is not geometric; no symbol is recognized";
  }
  return verdict;
}

GaussianRadialSymbol moyal_gaussian(const GaussianRadialSymbol& ga, const GaussianRadialSymbol& gb) {
  // sum_k (-1)^k/k! (sigma_a sigma_b |w|^2)^k = e^{-sigma_a sigma_b |w|^2}
  return {ga.amplitude * gb.amplitude, ga.exponent + gb.exponent - ga.exponent * gb.exponent};
}

Complex moyal_partial_sum(const GaussianRadialSymbol& ga, const GaussianRadialSymbol& gb, int K, Complex w) {
  if (K < 0) throw InvalidInput("K must be >= 0");
  const double t = std::norm(w);
  const Complex base_a = ga.amplitude * std::exp(ga.exponent * t);
  const Complex base_b = gb.amplitude * std::exp(gb.exponent * t);
  Complex d_a = base_a;  // d^k phi_a = c_a sigma_a^k wbar^k e^{sigma_a t}
  Complex d_b = base_b;  // dbar^k phi_b = c_b sigma_b^k w^k e^{sigma_b t}
  double inv_factorial = 1.0;
  Complex sum{};
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      d_a *= ga.exponent * std::conj(w);
      d_b *= gb.exponent * w;
      inv_factorial /= k;
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * inv_factorial * d_a * d_b;
  }
  return sum;
}

}  // namespace bt
