#include "bt/complex.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "bt/errors.hpp"

namespace bt {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty()) throw InvalidInput("empty number in complex literal '" + std::string(whole) + "'");
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  double value = 0.0;
  const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || end != body.data() + body.size() || !std::isfinite(value)) {
    throw InvalidInput("malformed complex literal '" + std::string(whole) + "'");
  }
  return negative ? -value : value;
}

// Position of the sign separating real and imaginary parts, or npos.
std::size_t split_point(std::string_view body) {
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') return i;
  }
  return std::string_view::npos;
}

void append_double(std::string& out, double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  out.append(buf, end);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty complex literal");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  const std::size_t split = split_point(body);
  const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_text, text);
  }
  const double re = re_text.empty() ? 0.0 : parse_real(re_text, text);
  return {re, im};
}

std::string format_complex(Complex z) {
  std::string out;
  append_double(out, z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  append_double(out, std::abs(z.imag()));
  out += 'i';
  return out;
}

bool close_rel(Complex a, Complex b, double rel) {
  if (a == b) return true;
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace bt
