#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace bt {

using Complex = std::complex<double>;

/// Parses the shell-safe literal form `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`.
/// Whitespace is not allowed. Throws InvalidInput on malformed text.
Complex parse_complex(std::string_view text);

/// Renders `a+bi` / `a-bi` with round-trip precision; inverse of parse_complex.
std::string format_complex(Complex z);

/// Relative closeness used where a value is expected to match to rounding:
/// |a - b| <= rel * max(|a|, |b|), or both exactly zero.
bool close_rel(Complex a, Complex b, double rel);

}  // namespace bt
