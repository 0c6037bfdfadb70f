#pragma once

#include <memory>
#include <vector>

namespace bt {

enum class QuadratureKind { gauss_laguerre };

/// How a half-line integral against e^{-t} is discretized.
///
/// `tolerance` drives the convergence policy shared by every quadrature
/// routine: a value computed with `node_count` radial nodes is accepted when
/// the same computation with 2*node_count nodes agrees to
/// tolerance * max(1, |value|). Set `check_convergence` to false to skip the
/// doubled evaluation.
struct QuadratureSpec {
  int node_count = 200;
  QuadratureKind kind = QuadratureKind::gauss_laguerre;
  double tolerance = 1e-10;
  bool check_convergence = true;

  QuadratureSpec doubled() const {
    QuadratureSpec d = *this;
    d.node_count *= 2;
    return d;
  }
};

/// Gauss-Laguerre rule for weight e^{-t} on (0, inf).
///
/// Weights of the outer nodes fall below the double range once node_count
/// exceeds ~150, so the rule also carries their logarithms; all kernels in
/// this library work from `log_weights`.
struct LaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;

  std::size_t size() const { return nodes.size(); }
};

/// Builds the rule from scratch: eigenvalues of the Jacobi matrix seed a
/// Newton polish on the Laguerre recurrence, evaluated with running rescaling
/// so that large nodes do not overflow. Throws InvalidInput if node_count < 1.
LaguerreRule laguerre_nodes(const QuadratureSpec& spec);

/// Memoized laguerre_nodes keyed by node count. Thread-safe.
std::shared_ptr<const LaguerreRule> laguerre_rule(int node_count);

}  // namespace bt
