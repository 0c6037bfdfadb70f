#include "bt/laguerre.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "bt/errors.hpp"

namespace bt {

namespace {

constexpr double kRescale = 1e100;
const double kLogRescale = std::log(kRescale);

// L_n(x) and L_{n-1}(x) as (p_n, p_{n-1}) * exp(log_scale).
struct LaguerrePair {
  double pn;
  double pn_minus_1;
  double log_scale;
};

LaguerrePair laguerre_pair(int n, double x) {
  double prev = 1.0;
  double cur = 1.0 - x;
  double log_scale = 0.0;
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 - x) * cur - j * prev) / (j + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += kLogRescale;
    }
  }
  return {cur, prev, log_scale};
}

std::vector<double> jacobi_eigenvalues(int n) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int j = 0; j < n; ++j) diag[j] = 2.0 * j + 1.0;
  for (int j = 1; j < n; ++j) sub[j - 1] = j;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

LaguerreRule laguerre_nodes(const QuadratureSpec& spec) {
  const int n = spec.node_count;
  if (n < 1) throw InvalidInput("node_count must be >= 1, got " + std::to_string(n));

  LaguerreRule rule;
  rule.nodes = jacobi_eigenvalues(n);
  rule.weights.resize(n);
  rule.log_weights.resize(n);

  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    LaguerrePair pair = laguerre_pair(n, x);
    for (int iter = 0; iter < 20; ++iter) {
      const double step = x * pair.pn / (n * (pair.pn - pair.pn_minus_1));
      x -= step;
      pair = laguerre_pair(n, x);
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * x) break;
    }
    // w = 1 / (x L_n'(x)^2) with L_n' = n (L_n - L_{n-1}) / x.
    const double scaled_deriv = n * (pair.pn - pair.pn_minus_1) / x;
    rule.nodes[i] = x;
    if (pair.log_scale == 0.0) {
      rule.weights[i] = 1.0 / (x * scaled_deriv * scaled_deriv);
      rule.log_weights[i] = std::log(rule.weights[i]);
    } else {
      rule.log_weights[i] = -std::log(x) - 2.0 * (std::log(std::abs(scaled_deriv)) + pair.log_scale);
      rule.weights[i] = std::exp(rule.log_weights[i]);
    }
  }
  return rule;
}

std::shared_ptr<const LaguerreRule> laguerre_rule(int node_count) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const LaguerreRule>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(node_count);
  if (it != cache.end()) return it->second;
  QuadratureSpec spec;
  spec.node_count = node_count;
  auto rule = std::make_shared<const LaguerreRule>(laguerre_nodes(spec));
  cache.emplace(node_count, rule);
  return rule;
}

}  // namespace bt
