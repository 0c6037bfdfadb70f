// Serial reference kernels against the OpenMP ones on the integrands the
// library actually evaluates.

#include <benchmark/benchmark.h>

#include <cmath>

#include "bt/kernels.hpp"
#include "bt/symbols.hpp"

using namespace bt;

namespace {

const RadialSymbol kSymbol = gamma_symbol({0.8, -0.9});

auto eigen_integrand(int n) {
  const double log_factorial = std::lgamma(n + 1.0);
  return [n, log_factorial](double t) {
    const ScaledValue phi = eval_symbol_scaled(kSymbol, t);
    return kernels::Scaled{phi.log_scale + n * std::log(t) - log_factorial, phi.value};
  };
}

auto matrix_integrand(int m, int n) {
  const double log_norm = -0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0));
  return [m, n, log_norm](double t, Complex w) {
    const ScaledValue phi = eval_symbol_scaled(kSymbol, t);
    return kernels::Scaled{phi.log_scale + 0.5 * (m + n) * std::log(t) + log_norm,
                           phi.value * std::polar(1.0, (n - m) * std::arg(w))};
  };
}

template <bool Parallel>
void BM_radial_sum(benchmark::State& state) {
  const auto rule = laguerre_rule(static_cast<int>(state.range(0)));
  const auto f = eigen_integrand(10);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::radial_sum(*rule, f));
    } else {
      benchmark::DoNotOptimize(kernels::serial::radial_sum(*rule, f));
    }
  }
}

template <bool Parallel>
void BM_polar_sum(benchmark::State& state) {
  const auto rule = laguerre_rule(static_cast<int>(state.range(0)));
  const auto f = matrix_integrand(3, 5);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::polar_sum(*rule, 24, f));
    } else {
      benchmark::DoNotOptimize(kernels::serial::polar_sum(*rule, 24, f));
    }
  }
}

template <bool Parallel>
void BM_polar_project(benchmark::State& state) {
  const auto rule = laguerre_rule(static_cast<int>(state.range(0)));
  const int degree = 12;
  auto f = [](double t, Complex w) {
    const ScaledValue phi = eval_symbol_scaled(kSymbol, t);
    return kernels::Scaled{phi.log_scale, phi.value * std::pow(w, 7)};
  };
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::polar_project(*rule, 4 * (degree + 1), degree, f));
    } else {
      benchmark::DoNotOptimize(kernels::serial::polar_project(*rule, 4 * (degree + 1), degree, f));
    }
  }
}

}  // namespace

BENCHMARK(BM_radial_sum<false>)->Arg(200)->Arg(400)->Arg(1600);
BENCHMARK(BM_radial_sum<true>)->Arg(200)->Arg(400)->Arg(1600);
BENCHMARK(BM_polar_sum<false>)->Arg(200)->Arg(400);
BENCHMARK(BM_polar_sum<true>)->Arg(200)->Arg(400);
BENCHMARK(BM_polar_project<false>)->Arg(200)->Arg(400);
BENCHMARK(BM_polar_project<true>)->Arg(200)->Arg(400);

BENCHMARK_MAIN();
