#pragma once

#include <random>
#include <vector>

#include "bt/complex.hpp"
#include "bt/serialize.hpp"
#include "bt/symbols.hpp"

namespace bt::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240517);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Complex uniform_complex(double re_lo, double re_hi, double im_lo, double im_hi) {
  return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
}

/// Point uniformly distributed in the disk |z| <= radius.
inline Complex in_disk(double radius) {
  const double r = radius * std::sqrt(uniform(0.0, 1.0));
  return std::polar(r, uniform(0.0, 6.283185307179586));
}

inline std::vector<Complex> random_coeffs(int degree, double scale = 1.0) {
  std::vector<Complex> c(degree + 1);
  for (auto& x : c) x = uniform_complex(-scale, scale, -scale, scale);
  return c;
}

/// Symbols with a closed-form spectrum, used where an oracle is needed.
inline std::vector<RadialSymbol> closed_form_corpus() {
  return {gamma_symbol(2.0),
          gamma_symbol(2.718281828459045),
          gamma_symbol({0.6, -0.8}),
          gamma_symbol({0.8, -0.9}),
          gamma_symbol(1.0),
          maxwell_boltzmann_symbol(1.0),
          unimodular_outside_p_symbol(),
          PolynomialRadialSymbol({0.0, 1.0}),
          PolynomialRadialSymbol({{1.0, 0.0}, {0.5, 0.0}, {0.0, -0.1}})};
}

/// closed_form_corpus plus enveloped symbols evaluated by quadrature only.
inline std::vector<RadialSymbol> full_corpus() {
  auto c = closed_form_corpus();
  c.push_back(enveloped_function("cos_r2", nullptr, 1.0, 0.0));
  c.push_back(enveloped_function("bessel_j0", nullptr, 1.0, 0.0));
  c.push_back(enveloped_function("chirp", Json{{"omega", 0.5}}, 1.0, 0.0));
  return c;
}

}  // namespace bt::test
