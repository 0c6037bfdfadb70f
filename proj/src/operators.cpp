#include "bt/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bt/errors.hpp"
#include "bt/kernels.hpp"

namespace bt {

namespace {

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Multiplier at index n: stored value, the geometric tail beyond it, or 0.
Complex multiplier(const EigenSequence& eig, std::size_t n) {
  if (n < eig.values.size()) return eig.values[n];
  if (eig.tail && !eig.values.empty()) {
    Complex v = eig.values.back();
    for (std::size_t k = eig.values.size(); k <= n; ++k) v *= eig.tail->ratio;
    return v;
  }
  return {};
}

}  // namespace

DiagonalResult diagonal_apply(const DiagonalOperator& op, const L2Sequence& seq) {
  const std::size_t len = std::max(op.eigen.values.size(), seq.entries.size());
  DiagonalResult out;
  out.sequence.entries.resize(len);
  for (std::size_t n = 0; n < seq.entries.size(); ++n) {
    out.sequence.entries[n] = multiplier(op.eigen, n) * seq.entries[n];
  }
  if (op.eigen.tail && seq.tail) {
    const Complex ratio = op.eigen.tail->ratio * seq.tail->ratio;
    out.sequence.tail = GeometricTail{ratio};
    if (std::abs(ratio) >= 1.0) {
      out.domain_warning = "tail ratio |" + format_complex(ratio) + "| = " + std::to_string(std::abs(ratio)) +
                           " >= 1: {phi_n psi_n} is not square summable, the sequence is outside the domain";
    }
  }
  return out;
}

FockPolynomial extension_apply(const DiagonalOperator& op, const FockPolynomial& poly) {
  return from_sequence(diagonal_apply(op, to_sequence(poly)).sequence);
}

Complex anti_wick_matrix_element(const RadialSymbol& sym, int m, int n, const QuadratureSpec& spec) {
  if (m < 0 || n < 0) throw InvalidInput("matrix indices must be >= 0");
  require_convergent_moments(sym);
  const int angular = angular_nodes_for_degree(std::max(m, n));
  const double log_norm = -0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0));

  auto eval = [&](int nodes) {
    const auto rule = laguerre_rule(nodes);
    return kernels::parallel::polar_sum(*rule, angular, [&](double t, Complex w) {
      // conj(u_m(w)) u_n(w) = t^{(m+n)/2} e^{i(n-m)theta} / sqrt(m! n!)
      const ScaledValue phi = eval_symbol_scaled(sym, t);
      return kernels::Scaled{phi.log_scale + 0.5 * (m + n) * std::log(t) + log_norm,
                             phi.value * std::polar(1.0, (n - m) * std::arg(w))};
    });
  };
  const auto coarse = eval(spec.node_count);
  if (spec.check_convergence) {
    const auto fine = eval(2 * spec.node_count);
    if (!kernels::agrees(coarse, fine, spec.tolerance)) {
      throw NonConvergent("<" + std::to_string(m) + "|A|" + std::to_string(n) + ">: Q and 2Q differ by " +
                          sci(std::abs(coarse.value - fine.value)));
    }
  }
  return coarse.value;
}

Decision in_natural_domain(const RadialSymbol& sym, const FockPolynomial& poly) {
  if (poly.is_zero()) return Decision::yes;
  if (const auto* g = std::get_if<GaussianRadialSymbol>(&sym)) {
    // int |phi|^2 |u_n|^2 dmu = |c|^2/n! int t^n e^{-(1 - 2 Re sigma) t} dt
    if (g->amplitude == Complex{}) return Decision::yes;
    return from_bool(g->exponent.real() < 0.5);
  }
  if (std::holds_alternative<PolynomialRadialSymbol>(sym)) return Decision::yes;
  const auto& e = std::get<EnvelopedSymbol>(sym);
  return e.envelope_delta < 0.5 ? Decision::yes : Decision::undecidable;
}

FockPolynomial toeplitz_apply(const RadialSymbol& sym, const FockPolynomial& poly, const QuadratureSpec& spec) {
  const Decision domain = in_natural_domain(sym, poly);
  if (domain != Decision::yes) {
    throw DomainViolation("phi psi in L^2(dmu) is " + std::string(to_string(domain)) + " for " + describe(sym) +
                          "; T_phi psi is not defined");
  }
  const int degree = poly.degree();
  if (degree < 0) return {};
  const int angular = angular_nodes_for_degree(degree);
  const auto a = poly.monomial_coeffs();

  auto eval = [&](int nodes) {
    const auto rule = laguerre_rule(nodes);
    return kernels::parallel::polar_project(*rule, angular, degree, [&](double t, Complex w) {
      Complex psi{};
      for (auto it = a.rbegin(); it != a.rend(); ++it) psi = psi * w + *it;
      const ScaledValue phi = eval_symbol_scaled(sym, t);
      return kernels::Scaled{phi.log_scale, phi.value * psi};
    });
  };

  const auto coarse = eval(spec.node_count);
  if (spec.check_convergence) {
    const auto fine = eval(2 * spec.node_count);
    for (int m = 0; m <= degree; ++m) {
      if (!kernels::agrees(coarse[m], fine[m], spec.tolerance)) {
        throw NonConvergent("Toeplitz coefficient " + std::to_string(m) + ": Q and 2Q differ by " +
                            sci(std::abs(coarse[m].value - fine[m].value)));
      }
    }
  }
  std::vector<Complex> out(degree + 1);
  for (int m = 0; m <= degree; ++m) out[m] = coarse[m].value;
  return FockPolynomial(std::move(out));
}

EquivalenceReport equivalence_report(const RadialSymbol& sym, int n_max, double tol, const QuadratureSpec& spec) {
  if (n_max < 0) throw InvalidInput("n_max must be >= 0");
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");

  EquivalenceReport report;
  report.max_tested_n = n_max;
  report.tolerance = tol;
  const ClassificationReport cls = classify(sym, 0);
  report.symbol_in_P = cls.in_P;
  report.extension_defined = cls.in_L1_inf == Decision::yes;

  if (cls.in_P == Decision::no) {
    report.verdict = Verdict::not_equivalent;
    int outside = -1;
    for (int m = 0; m <= n_max && outside < 0; ++m) {
      if (in_natural_domain(sym, FockPolynomial::basis(m)) == Decision::no) outside = m;
    }
    report.reason = outside >= 0 ? "u_" + std::to_string(outside) + " outside natural domain of T_phi"
                                 : "symbol outside P";
    report.reason += report.extension_defined
                         ? "; only the extension U^{-1} D U is defined there, and it strictly extends T_phi"
                         : "; the symbol is not in L1_inf either, so no diagonal extension exists";
    return report;
  }
  if (cls.in_P == Decision::undecidable) {
    report.verdict = Verdict::undecidable;
    report.reason = "membership in P cannot be decided from the envelope";
    return report;
  }

  try {
    const EigenSequence eig = eigen_sequence(sym, n_max, spec);
    for (int n = 0; n <= n_max; ++n) {
      const FockPolynomial image = toeplitz_apply(sym, FockPolynomial::basis(n), spec);
      double sq = 0.0;
      for (int m = 0; m <= image.degree(); ++m) {
        const Complex expected = m == n ? eig.values[n] : Complex{};
        sq += std::norm(image.coeff(m) - expected);
      }
      report.per_n_residual.push_back(std::sqrt(sq));
    }
  } catch (const Error& e) {
    report.verdict = Verdict::undecidable;
    report.reason = std::string("numerical evaluation failed: ") + e.kind() + ": " + e.what();
    return report;
  }

  const auto worst = std::max_element(report.per_n_residual.begin(), report.per_n_residual.end());
  if (*worst < tol) {
    report.verdict = Verdict::equivalent;
    report.reason = "symbol in P and T_phi u_n = phi_n u_n for n <= " + std::to_string(n_max) +
                    " (max residual " + sci(*worst) + "); T_phi = U^{-1} D U";
  } else {
    report.verdict = Verdict::undecidable;
    report.reason = "symbol in P but residual " + sci(*worst) + " at n = " +
                    std::to_string(worst - report.per_n_residual.begin()) + " exceeds tolerance " + sci(tol);
  }
  return report;
}

}  // namespace bt
