#include "bt/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bt/errors.hpp"

namespace bt {

namespace {

double number_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw InvalidInput(std::string("expected numeric field \"") + key + "\"");
  }
  const double x = j.at(key).get<double>();
  if (!std::isfinite(x)) throw InvalidInput(std::string("field \"") + key + "\" is not finite");
  return x;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Json complex_array(const std::vector<Complex>& values) {
  Json arr = Json::array();
  for (const Complex& z : values) arr.push_back(to_json(z));
  return arr;
}

std::vector<Complex> complex_array_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of complex numbers");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

std::string csv_rows(const std::vector<Complex>& values) {
  std::string out = "n,re,im,modulus\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    out += std::to_string(n) + ',' + format_double(values[n].real() + 0.0) + ',' + format_double(values[n].imag() + 0.0) + ',' +
           format_double(std::abs(values[n])) + '\n';
  }
  return out;
}

Json optional_double(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json symbol_params(const Json& params) { return params.is_null() ? Json::object() : params; }

double param_or(const Json& params, const char* key, double fallback) {
  if (params.is_null() || !params.contains(key)) return fallback;
  return number_field(params, key);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Adding +0.0 maps -0.0 to 0.0 so reports never show a signed zero.
Json to_json(Complex z) { return Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (!j.is_object()) throw InvalidInput("complex number must be {\"re\", \"im\"}, a number or a literal string");
  return {number_field(j, "re"), j.contains("im") ? number_field(j, "im") : 0.0};
}

Json to_json(const RadialSymbol& sym) {
  if (const auto* g = std::get_if<GaussianRadialSymbol>(&sym)) {
    return Json{{"kind", "gaussian"}, {"amplitude", to_json(g->amplitude)}, {"exponent", to_json(g->exponent)}};
  }
  if (const auto* p = std::get_if<PolynomialRadialSymbol>(&sym)) {
    return Json{{"kind", "polynomial"}, {"coefficients", complex_array(p->coefficients())}};
  }
  const auto& e = std::get<EnvelopedSymbol>(sym);
  if (!e.source) throw InvalidInput("enveloped symbol built from a callable has no JSON form");
  return Json::parse(*e.source);
}

EnvelopedSymbol enveloped_function(const std::string& name, const Json& params, double C, double delta) {
  if (!(C > 0.0) || !std::isfinite(C) || !std::isfinite(delta)) {
    throw InvalidInput("envelope needs C > 0 and finite delta");
  }
  EnvelopedSymbol e;
  e.envelope_C = C;
  e.envelope_delta = delta;
  if (name == "cos_r2") {
    e.evaluator = [](double r) { return Complex{std::cos(r * r), 0.0}; };
  } else if (name == "bessel_j0") {
    e.evaluator = [](double r) { return Complex{std::cyl_bessel_j(0.0, r), 0.0}; };
  } else if (name == "indicator") {
    const double radius = param_or(params, "radius", 1.0);
    if (!(radius > 0.0)) throw InvalidInput("indicator radius must be positive");
    e.evaluator = [radius](double r) { return Complex{r <= radius ? 1.0 : 0.0, 0.0}; };
  } else if (name == "chirp") {
    const double omega = param_or(params, "omega", 1.0);
    e.evaluator = [omega](double r) { return std::polar(1.0, omega * r * r); };
  } else {
    throw InvalidInput("unknown enveloped function \"" + name + "\"");
  }
  Json source{{"kind", "enveloped"},
              {"envelope", {{"C", C}, {"delta", delta}}},
              {"function", {{"name", name}, {"params", symbol_params(params)}}}};
  e.source = source.dump();
  return e;
}

RadialSymbol symbol_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("symbol must be a JSON object");
  const Json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) throw InvalidInput("symbol kind must be a string");
  const std::string kind = kind_j.get<std::string>();

  if (kind == "gaussian") {
    return GaussianRadialSymbol{complex_from_json(field(j, "amplitude")), complex_from_json(field(j, "exponent"))};
  }
  if (kind == "gamma") return gamma_symbol(complex_from_json(field(j, "k")));
  if (kind == "polynomial") return PolynomialRadialSymbol(complex_array_from_json(field(j, "coefficients")));
  if (kind == "enveloped") {
    const Json& env = field(j, "envelope");
    const double C = number_field(env, "C");
    const double delta = number_field(env, "delta");
    if (j.contains("function")) {
      const Json& fn = j.at("function");
      const Json& name = field(fn, "name");
      if (!name.is_string()) throw InvalidInput("function name must be a string");
      return enveloped_function(name.get<std::string>(), fn.contains("params") ? fn.at("params") : Json(nullptr), C,
                                delta);
    }
    if (j.contains("inner")) {
      RadialSymbol inner = symbol_from_json(j.at("inner"));
      if (std::holds_alternative<EnvelopedSymbol>(inner)) throw InvalidInput("enveloped symbols do not nest");
      if (!(C > 0.0)) throw InvalidInput("envelope needs C > 0");
      EnvelopedSymbol e;
      e.evaluator = [inner](double r) { return eval_symbol(inner, r); };
      e.envelope_C = C;
      e.envelope_delta = delta;
      e.source = j.dump();
      return e;
    }
    throw InvalidInput("enveloped symbol needs \"function\" or \"inner\"");
  }
  throw InvalidInput("unknown symbol kind \"" + kind + "\"");
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

RadialSymbol parse_symbol_spec(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty symbol specification");
  if (text.front() == '{') {
    try {
      return symbol_from_json(Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("symbol JSON: ") + e.what());
    }
  }
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (head == "unimodular" && colon == std::string_view::npos) return unimodular_outside_p_symbol();
  if (colon != std::string_view::npos) {
    if (head == "gamma") return gamma_symbol(parse_complex(rest));
    if (head == "mb") {
      const Complex beta = parse_complex(rest);
      if (beta.imag() != 0.0) throw InvalidInput("mb: beta must be real");
      return maxwell_boltzmann_symbol(beta.real());
    }
    if (head == "gaussian") {
      const auto args = parse_complex_list(rest);
      if (args.size() != 2) throw InvalidInput("gaussian:<c>,<sigma> takes two values");
      return GaussianRadialSymbol{args[0], args[1]};
    }
    if (head == "poly") return PolynomialRadialSymbol(parse_complex_list(rest));
  }

  std::ifstream in{std::string(text)};
  if (!in) throw InvalidInput("\"" + std::string(text) + "\" is neither a symbol shorthand nor a readable file");
  try {
    return symbol_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string(text) + ": " + e.what());
  }
}

Json to_json(const EigenSequence& seq) {
  Json j{{"method", std::string(to_string(seq.method))}, {"values", complex_array(seq.values)}};
  j["tail"] = seq.tail ? Json{{"ratio", to_json(seq.tail->ratio)}} : Json(nullptr);
  return j;
}

EigenSequence eigen_sequence_from_json(const Json& j) {
  EigenSequence seq;
  const Json& method = field(j, "method");
  if (method == "closed_form") {
    seq.method = EigenMethod::closed_form;
  } else if (method == "quadrature") {
    seq.method = EigenMethod::quadrature;
  } else {
    throw InvalidInput("unknown eigen method");
  }
  seq.values = complex_array_from_json(field(j, "values"));
  if (j.contains("tail") && !j.at("tail").is_null()) seq.tail = GeometricTail{complex_from_json(field(j.at("tail"), "ratio"))};
  return seq;
}

Json to_json(const FockPolynomial& poly) { return complex_array(poly.u_coeffs()); }
FockPolynomial fock_polynomial_from_json(const Json& j) { return FockPolynomial(complex_array_from_json(j)); }
Json to_json(const L2Sequence& seq) { return complex_array(seq.entries); }
L2Sequence l2_sequence_from_json(const Json& j) { return L2Sequence{complex_array_from_json(j), std::nullopt}; }

Json to_json(const ClassificationReport& report) {
  Json moments = Json::array();
  for (const auto& m : report.moments) {
    moments.push_back(Json{{"m", m.m}, {"value", optional_double(m.value)}, {"closed_form", m.closed_form}});
  }
  return Json{{"in_L1_inf", std::string(to_string(report.in_L1_inf))},
              {"largest_verified_moment",
               report.largest_verified_moment ? Json(*report.largest_verified_moment) : Json(nullptr)},
              {"in_P", std::string(to_string(report.in_P))},
              {"in_folland", std::string(to_string(report.in_folland))},
              {"in_coburn", std::string(to_string(report.in_coburn))},
              {"moments", moments},
              {"reasons", report.reasons}};
}

Json to_json(const EquivalenceReport& report) {
  return Json{{"symbol_in_P", std::string(to_string(report.symbol_in_P))},
              {"max_tested_n", report.max_tested_n},
              {"per_n_residual", report.per_n_residual},
              {"tolerance", report.tolerance},
              {"verdict", std::string(to_string(report.verdict))},
              {"reason", report.reason},
              {"extension_defined", report.extension_defined}};
}

Json to_json(const CompositionVerdict& verdict) {
  Json j{{"status", std::string(to_string(verdict.status))}, {"reason", verdict.reason}};
  j["symbol"] = verdict.recognized_symbol ? to_json(RadialSymbol{*verdict.recognized_symbol}) : Json(nullptr);
  j["sequence"] = to_json(verdict.product_sequence);
  return j;
}

std::string to_csv(const EigenSequence& seq) { return csv_rows(seq.values); }
std::string to_csv(const L2Sequence& seq) { return csv_rows(seq.entries); }

}  // namespace bt
