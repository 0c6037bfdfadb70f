#include "bt/symbols.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bt/errors.hpp"
#include "bt/kernels.hpp"
#include "bt/laguerre.hpp"

namespace bt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// |c| Gamma((m+1)/2) / (2 rate^{(m+1)/2}) = int_0^inf |c| r^m e^{-rate r^2} dr.
double gaussian_moment(double abs_amplitude, double rate, int m) {
  const double s = 0.5 * (m + 1);
  return std::exp(std::log(abs_amplitude) + std::lgamma(s) - std::numbers::ln2 - s * std::log(rate));
}

std::optional<double> finite_or_none(double x) {
  if (std::isfinite(x)) return x;
  return std::nullopt;
}

// int_0^inf |phi(r)| r^m e^{-r^2} dr as Gauss-Laguerre in r itself, with the
// integrand |phi(r)| r^m e^{r - r^2}. Substituting t = r^2 instead would leave
// a t^{-1/2} singularity at even m.
std::optional<double> numeric_moment(const RadialSymbol& sym, int m) {
  auto integrate = [&](int nodes) {
    const auto rule = laguerre_rule(nodes);
    return kernels::parallel::radial_sum(*rule, [&](double r) {
             const double mag = std::abs(eval_symbol(sym, r));
             if (mag == 0.0) return kernels::Scaled{};
             return kernels::Scaled{std::log(mag) + m * std::log(r) + r - r * r, Complex{1.0, 0.0}};
           })
        .value.real();
  };
  const double coarse = integrate(200);
  const double fine = integrate(400);
  if (!std::isfinite(coarse) || !std::isfinite(fine)) return std::nullopt;
  if (std::abs(coarse - fine) > 1e-6 * std::max(1.0, std::abs(fine))) return std::nullopt;
  return fine;
}

void enforce_inclusions(ClassificationReport& report) {
  // Folland => Coburn => P => L1_inf.
  if (report.in_folland == Decision::yes && report.in_coburn != Decision::yes) {
    report.in_coburn = Decision::yes;
    report.reasons.emplace_back("Coburn: implied by Folland membership");
  }
  if (report.in_coburn == Decision::yes && report.in_P != Decision::yes) {
    report.in_P = Decision::yes;
    report.reasons.emplace_back("P: implied by Coburn membership");
  }
  if (report.in_P == Decision::yes && report.in_L1_inf != Decision::yes) {
    report.in_L1_inf = Decision::yes;
    report.reasons.emplace_back("L1_inf: implied by P membership (Cauchy-Schwarz)");
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void classify_gaussian(const GaussianRadialSymbol& g, int m_max, ClassificationReport& report) {
  if (g.amplitude == Complex{}) {
    report.in_L1_inf = report.in_P = report.in_folland = report.in_coburn = Decision::yes;
    report.largest_verified_moment = m_max;
    for (int m = 0; m <= m_max; ++m) report.moments.push_back({m, 0.0, true});
    report.reasons.emplace_back("zero symbol: every class contains it");
    return;
  }
  const double growth = g.exponent.real();
  const double abs_c = std::abs(g.amplitude);

  report.in_L1_inf = from_bool(growth < 1.0);
  if (growth < 1.0) {
    report.largest_verified_moment = m_max;
    for (int m = 0; m <= m_max; ++m) {
      report.moments.push_back({m, finite_or_none(gaussian_moment(abs_c, 1.0 - growth, m)), true});
    }
    report.reasons.push_back("L1_inf: |phi| r^m e^{-r^2} = |c| r^m e^{-(1 - Re sigma) r^2} with 1 - Re sigma = " +
                             fmt(1.0 - growth) + " > 0, every moment is a finite Gamma integral");
  } else {
    for (int m = 0; m <= m_max; ++m) report.moments.push_back({m, std::nullopt, true});
    report.reasons.push_back("L1_inf: Re sigma = " + fmt(growth) + " >= 1, the moments diverge");
  }

  const bool square_integrable = growth < 0.5;
  report.in_P = from_bool(square_integrable);
  report.in_folland = from_bool(square_integrable);
  report.in_coburn = from_bool(square_integrable);
  const std::string rate = fmt(1.0 - 2.0 * growth);
  if (square_integrable) {
    report.reasons.push_back("P: int |phi u_n|^2 dmu = |c|^2/n! int t^n e^{-(1 - 2 Re sigma) t} dt, finite since 1 - 2 Re sigma = " +
                             rate + " > 0");
    report.reasons.push_back("Folland: |phi(r)| = |c| e^{delta r^2} with delta = Re sigma = " + fmt(growth) + " < 1/2");
    report.reasons.push_back("Coburn: |phi e^{w conj z}|^2 e^{-|w|^2} has Gaussian factor e^{-(1 - 2 Re sigma)|w|^2}, integrable");
  } else {
    report.reasons.push_back("P: int |phi u_0|^2 dmu = |c|^2 int e^{-(1 - 2 Re sigma) t} dt diverges since 1 - 2 Re sigma = " +
                             rate + " <= 0");
    report.reasons.push_back("Folland: the sharp growth rate Re sigma = " + fmt(growth) + " is not below 1/2");
    report.reasons.push_back("Coburn: phi e^{w conj z} is not square integrable for z = 0");
  }
}

void classify_polynomial(const PolynomialRadialSymbol& p, int m_max, ClassificationReport& report) {
  report.in_L1_inf = report.in_P = report.in_folland = report.in_coburn = Decision::yes;
  report.largest_verified_moment = m_max;
  for (int m = 0; m <= m_max; ++m) {
    // sum_j |p_j| Gamma(j + (m+1)/2) / 2 bounds the moment.
    double bound = 0.0;
    for (int j = 0; j <= p.degree(); ++j) {
      const double a = std::abs(p.coefficients()[j]);
      if (a == 0.0) continue;
      bound += std::exp(std::log(a) + std::lgamma(j + 0.5 * (m + 1)) - std::numbers::ln2);
    }
    report.moments.push_back({m, finite_or_none(bound), true});
  }
  report.reasons.emplace_back("polynomial in r^2: bounded by C e^{delta r^2} for every delta > 0, so Folland, Coburn, P and L1_inf all hold");
}

void classify_enveloped(const RadialSymbol& sym, const EnvelopedSymbol& e, int m_max, ClassificationReport& report) {
  const double delta = e.envelope_delta;
  int settled = -1;
  for (int m = 0; m <= m_max; ++m) {
    auto value = numeric_moment(sym, m);
    if (value) settled = m;
    report.moments.push_back({m, value, false});
  }

  if (delta < 1.0) {
    report.in_L1_inf = Decision::yes;
    report.largest_verified_moment = m_max;
    report.reasons.push_back("L1_inf: envelope C e^{delta r^2} with delta = " + fmt(delta) + " < 1 has finite moments");
  } else {
    report.in_L1_inf = Decision::undecidable;
    if (settled >= 0) report.largest_verified_moment = settled;
    report.reasons.push_back("L1_inf: envelope delta = " + fmt(delta) +
                             " >= 1 certifies nothing; numeric moments are evidence only");
  }

  if (delta < 0.5) {
    report.in_folland = Decision::yes;
    report.reasons.push_back("Folland: declared envelope delta = " + fmt(delta) + " < 1/2");
  } else {
    report.in_P = report.in_folland = report.in_coburn = Decision::undecidable;
    report.reasons.push_back("P/Folland/Coburn: envelope delta = " + fmt(delta) +
                             " >= 1/2; membership cannot be decided from samples");
  }
}

}  // namespace

// 0.0 - im rather than -im keeps a real k's exponent free of a signed zero.
GaussianRadialSymbol gamma_symbol(Complex k) { return {k, Complex{1.0 - k.real(), 0.0 - k.imag()}}; }

GaussianRadialSymbol maxwell_boltzmann_symbol(double beta) {
  if (!(beta > 0.0)) throw InvalidInput("inverse temperature must be positive");
  return {std::exp(beta / 2.0), 1.0 - std::exp(beta)};
}

GaussianRadialSymbol unimodular_outside_p_symbol() { return {1.0, Complex{0.5, std::sqrt(3.0) / 2.0}}; }

bool is_gamma_form(const GaussianRadialSymbol& sym, double tol) {
  return std::abs(sym.amplitude + sym.exponent - 1.0) <= tol * (1.0 + std::abs(sym.amplitude));
}

PolynomialRadialSymbol::PolynomialRadialSymbol(std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == Complex{}) coefficients_.pop_back();
}

Complex eval_symbol(const RadialSymbol& sym, double r) {
  if (!(r >= 0.0)) throw InvalidInput("symbol evaluated at negative radius");
  return std::visit(overloaded{
                        [&](const GaussianRadialSymbol& g) { return g.amplitude * std::exp(g.exponent * (r * r)); },
                        [&](const PolynomialRadialSymbol& p) {
                          const double t = r * r;
                          Complex acc{};
                          const auto& c = p.coefficients();
                          for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
                          return acc;
                        },
                        [&](const EnvelopedSymbol& e) {
                          if (!e.evaluator) throw InvalidInput("enveloped symbol without evaluator");
                          const Complex v = e.evaluator(r);
                          const double bound = e.envelope_C * std::exp(e.envelope_delta * r * r);
                          if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
                              std::abs(v) > bound * (1.0 + 1e-12)) {
                            throw EnvelopeViolation("|phi(" + fmt(r) + ")| = " + fmt(std::abs(v)) +
                                                    " exceeds envelope " + fmt(bound));
                          }
                          return v;
                        },
                    },
                    sym);
}

ScaledValue eval_symbol_scaled(const RadialSymbol& sym, double t) {
  if (const auto* g = std::get_if<GaussianRadialSymbol>(&sym)) {
    const double abs_c = std::abs(g->amplitude);
    if (abs_c == 0.0) return {};
    return {std::log(abs_c) + g->exponent.real() * t, (g->amplitude / abs_c) * std::polar(1.0, g->exponent.imag() * t)};
  }
  return {0.0, eval_symbol(sym, std::sqrt(t))};
}

RadialSymbol scaled(const RadialSymbol& sym, Complex alpha) {
  return std::visit(overloaded{
                        [&](const GaussianRadialSymbol& g) -> RadialSymbol {
                          return GaussianRadialSymbol{alpha * g.amplitude, g.exponent};
                        },
                        [&](const PolynomialRadialSymbol& p) -> RadialSymbol {
                          std::vector<Complex> c = p.coefficients();
                          for (auto& x : c) x *= alpha;
                          return PolynomialRadialSymbol(std::move(c));
                        },
                        [&](const EnvelopedSymbol& e) -> RadialSymbol {
                          EnvelopedSymbol out;
                          out.evaluator = [f = e.evaluator, alpha](double r) { return alpha * f(r); };
                          out.envelope_C = std::abs(alpha) * e.envelope_C;
                          out.envelope_delta = e.envelope_delta;
                          return out;
                        },
                    },
                    sym);
}

std::string describe(const RadialSymbol& sym) {
  return std::visit(overloaded{
                        [](const GaussianRadialSymbol& g) {
                          return "gaussian(c=" + format_complex(g.amplitude) + ", sigma=" + format_complex(g.exponent) +
                                 ")";
                        },
                        [](const PolynomialRadialSymbol& p) {
                          std::string s = "polynomial(";
                          for (int j = 0; j <= p.degree(); ++j) {
                            if (j) s += ", ";
                            s += format_complex(p.coefficients()[j]);
                          }
                          return s + ")";
                        },
                        [](const EnvelopedSymbol& e) {
                          return "enveloped(C=" + fmt(e.envelope_C) + ", delta=" + fmt(e.envelope_delta) + ")";
                        },
                    },
                    sym);
}

ClassificationReport classify(const RadialSymbol& sym, int m_max) {
  if (m_max < 0) throw InvalidInput("m_max must be >= 0");
  ClassificationReport report;
  std::visit(overloaded{
                 [&](const GaussianRadialSymbol& g) { classify_gaussian(g, m_max, report); },
                 [&](const PolynomialRadialSymbol& p) { classify_polynomial(p, m_max, report); },
                 [&](const EnvelopedSymbol& e) { classify_enveloped(sym, e, m_max, report); },
             },
             sym);
  enforce_inclusions(report);
  return report;
}

}  // namespace bt
