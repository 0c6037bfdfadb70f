#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <numeric>

#include "bt/errors.hpp"
#include "bt/laguerre.hpp"

using namespace bt;

TEST_CASE("two-node rule is 2 -+ sqrt 2") {
  // L_2(t) = (t^2 - 4t + 2)/2; weights from the quadratic's roots.
  const auto rule = laguerre_nodes({2});
  REQUIRE(rule.size() == 2);
  const double s = std::sqrt(2.0);
  CHECK(rule.nodes[0] == doctest::Approx(2.0 - s).epsilon(1e-15));
  CHECK(rule.nodes[1] == doctest::Approx(2.0 + s).epsilon(1e-15));
  CHECK(rule.weights[0] == doctest::Approx((2.0 + s) / 4.0).epsilon(1e-15));
  CHECK(rule.weights[1] == doctest::Approx((2.0 - s) / 4.0).epsilon(1e-15));
}

TEST_CASE("one-node rule") {
  const auto rule = laguerre_nodes({1});
  CHECK(rule.nodes[0] == doctest::Approx(1.0));
  CHECK(rule.weights[0] == doctest::Approx(1.0));
}

TEST_CASE("degree exactness: int t^j e^{-t} = j! for j <= 2Q-1") {
  double worst = 0.0;
  for (int q = 1; q <= 64; ++q) {
    const auto rule = laguerre_rule(q);
    for (int j = 0; j <= 2 * q - 1; ++j) {
      // Sum in log space: log w_i + j log t_i - lgamma(j+1).
      double sum = 0.0;
      for (std::size_t i = 0; i < rule->size(); ++i) {
        sum += std::exp(rule->log_weights[i] + j * std::log(rule->nodes[i]) - std::lgamma(j + 1.0));
      }
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("large rules stay ordered with unit mass") {
  for (int q : {200, 400, 800}) {
    const auto rule = laguerre_rule(q);
    REQUIRE(rule->size() == static_cast<std::size_t>(q));
    CHECK(std::is_sorted(rule->nodes.begin(), rule->nodes.end()));
    CHECK(rule->nodes.front() > 0.0);
    double mass = 0.0;
    for (double lw : rule->log_weights) mass += std::exp(lw);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < rule->size(); ++i) {
      if (std::isnormal(rule->weights[i])) CHECK(std::log(rule->weights[i]) == doctest::Approx(rule->log_weights[i]));
    }
  }
}

TEST_CASE("cached rule matches a fresh build") {
  const auto a = laguerre_rule(37);
  const auto b = laguerre_rule(37);
  CHECK(a.get() == b.get());
  const auto fresh = laguerre_nodes({37});
  CHECK(fresh.nodes == a->nodes);
}

TEST_CASE("invalid node count") {
  CHECK_THROWS_AS(laguerre_nodes({0}), InvalidInput);
  CHECK_THROWS_AS(laguerre_rule(-3), InvalidInput);
}
