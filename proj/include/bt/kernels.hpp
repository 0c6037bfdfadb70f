#pragma once

// Quadrature kernels over the half line (weight e^{-t}) and over the complex
// plane with the Gaussian measure dmu = (1/pi) e^{-|w|^2} d^2w.
//
// The plane is factorized in polar form with t = |w|^2:
//   int f dmu = (1/2pi) int_0^{2pi} int_0^inf f(sqrt(t) e^{i theta}) e^{-t} dt dtheta
// discretized as Gauss-Laguerre in t times the uniform trapezoid in theta.
//
// Integrands return a Scaled value (value * exp(log_scale)); the scale is
// merged with the log-weight before exponentiation so that symbols growing
// like e^{delta t} survive nodes whose weight underflows.
//
// Each kernel comes in two flavours. `serial` is the straightforward
// reference loop. `parallel` distributes radial nodes over OpenMP threads,
// stores one partial per node and reduces them in node order, so its result
// does not depend on the thread count. An exception thrown by the integrand
// is rethrown on the calling thread.

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <vector>

#include "bt/complex.hpp"
#include "bt/laguerre.hpp"

namespace bt::kernels {

struct Scaled {
  double log_scale = 0.0;
  Complex value{};
};

/// Sum of the quadrature terms and of their moduli. `magnitude` bounds the
/// cancellation in `value` and sets the rounding floor of a comparison.
struct QuadratureSum {
  Complex value{};
  double magnitude = 0.0;
};

namespace detail {

inline Complex weighted(double log_weight, const Scaled& s) {
  if (s.value == Complex{}) return {};
  return std::exp(log_weight + s.log_scale) * s.value;
}

// Exceptions may not leave an OpenMP region; the first one is kept and
// rethrown after the loop.
class ErrorSlot {
 public:
  template <class Body>
  void guard(Body&& body) {
    try {
      body();
    } catch (...) {
#pragma omp critical(bt_kernel_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

inline std::vector<Complex> unit_roots(int count) {
  std::vector<Complex> roots(count);
  for (int j = 0; j < count; ++j) roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / count);
  return roots;
}

}  // namespace detail

namespace serial {

/// sum_i w_i f(t_i), f: double -> Scaled.
template <class F>
QuadratureSum radial_sum(const LaguerreRule& rule, F&& f) {
  QuadratureSum out;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Complex term = detail::weighted(rule.log_weights[i], f(rule.nodes[i]));
    out.value += term;
    out.magnitude += std::abs(term);
  }
  return out;
}

/// Polar quadrature of int f dmu with `angular` equispaced angles.
/// f: (t, w) -> Scaled with |w|^2 = t.
template <class F>
QuadratureSum polar_sum(const LaguerreRule& rule, int angular, F&& f) {
  const auto roots = detail::unit_roots(angular);
  QuadratureSum out;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double t = rule.nodes[i];
    const double r = std::sqrt(t);
    for (int j = 0; j < angular; ++j) {
      const Complex term = detail::weighted(rule.log_weights[i], f(t, r * roots[j])) / double(angular);
      out.value += term;
      out.magnitude += std::abs(term);
    }
  }
  return out;
}

/// Coefficients b_m = int conj(u_m(w)) f(w) dmu for m = 0..degree, with
/// u_m(w) = w^m / sqrt(m!). This is the Bargmann projection of f read in
/// the u-basis.
template <class F>
std::vector<QuadratureSum> polar_project(const LaguerreRule& rule, int angular, int degree, F&& f) {
  const auto roots = detail::unit_roots(angular);
  std::vector<QuadratureSum> out(degree + 1);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double t = rule.nodes[i];
    const double r = std::sqrt(t);
    for (int j = 0; j < angular; ++j) {
      const Complex w = r * roots[j];
      const Complex fw = detail::weighted(rule.log_weights[i], f(t, w)) / double(angular);
      Complex basis = 1.0;
      for (int m = 0; m <= degree; ++m) {
        if (m > 0) basis *= w / std::sqrt(double(m));
        const Complex term = std::conj(basis) * fw;
        out[m].value += term;
        out[m].magnitude += std::abs(term);
      }
    }
  }
  return out;
}

}  // namespace serial

namespace parallel {

template <class F>
QuadratureSum radial_sum(const LaguerreRule& rule, F&& f) {
  const auto n = static_cast<std::ptrdiff_t>(rule.size());
  std::vector<Complex> partial(n);
  detail::ErrorSlot slot;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    slot.guard([&] { partial[i] = detail::weighted(rule.log_weights[i], f(rule.nodes[i])); });
  }
  slot.rethrow();
  QuadratureSum out;
  for (const Complex& p : partial) {
    out.value += p;
    out.magnitude += std::abs(p);
  }
  return out;
}

template <class F>
QuadratureSum polar_sum(const LaguerreRule& rule, int angular, F&& f) {
  const auto roots = detail::unit_roots(angular);
  const auto n = static_cast<std::ptrdiff_t>(rule.size());
  std::vector<QuadratureSum> partial(n);
  detail::ErrorSlot slot;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    slot.guard([&] {
      const double t = rule.nodes[i];
      const double r = std::sqrt(t);
      QuadratureSum acc;
      for (int j = 0; j < angular; ++j) {
        const Complex term = detail::weighted(rule.log_weights[i], f(t, r * roots[j])) / double(angular);
        acc.value += term;
        acc.magnitude += std::abs(term);
      }
      partial[i] = acc;
    });
  }
  slot.rethrow();
  QuadratureSum out;
  for (const auto& p : partial) {
    out.value += p.value;
    out.magnitude += p.magnitude;
  }
  return out;
}

template <class F>
std::vector<QuadratureSum> polar_project(const LaguerreRule& rule, int angular, int degree, F&& f) {
  const auto roots = detail::unit_roots(angular);
  const auto n = static_cast<std::ptrdiff_t>(rule.size());
  const std::size_t width = degree + 1;
  std::vector<QuadratureSum> partial(n * width);
  detail::ErrorSlot slot;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    slot.guard([&] {
      const double t = rule.nodes[i];
      const double r = std::sqrt(t);
      QuadratureSum* row = partial.data() + i * width;
      for (int j = 0; j < angular; ++j) {
        const Complex w = r * roots[j];
        const Complex fw = detail::weighted(rule.log_weights[i], f(t, w)) / double(angular);
        Complex basis = 1.0;
        for (int m = 0; m <= degree; ++m) {
          if (m > 0) basis *= w / std::sqrt(double(m));
          const Complex term = std::conj(basis) * fw;
          row[m].value += term;
          row[m].magnitude += std::abs(term);
        }
      }
    });
  }
  slot.rethrow();
  std::vector<QuadratureSum> out(width);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < width; ++m) {
      out[m].value += partial[i * width + m].value;
      out[m].magnitude += partial[i * width + m].magnitude;
    }
  }
  return out;
}

}  // namespace parallel

/// Convergence test between a Q-node and a 2Q-node evaluation: agreement to
/// tol * max(1, |fine|) plus a rounding floor proportional to the term mass.
inline bool agrees(const QuadratureSum& coarse, const QuadratureSum& fine, double tol) {
  constexpr double kRoundingFloor = 64.0 * std::numeric_limits<double>::epsilon();
  const double allowed =
      tol * std::max(1.0, std::abs(fine.value)) + kRoundingFloor * (coarse.magnitude + fine.magnitude);
  return std::abs(coarse.value - fine.value) <= allowed;
}

}  // namespace bt::kernels
