#include "bt/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bt/errors.hpp"

namespace bt::cli {

namespace {

QuadratureSpec quadrature(const RunConfig& config) {
  QuadratureSpec spec;
  spec.node_count = config.nodes;
  return spec;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json symbol_json(const std::string& spec) { return to_json(parse_symbol_spec(spec)); }

Json decisions(const ClassificationReport& r) {
  return Json{{"in_L1_inf", std::string(to_string(r.in_L1_inf))},
              {"in_P", std::string(to_string(r.in_P))},
              {"in_folland", std::string(to_string(r.in_folland))},
              {"in_coburn", std::string(to_string(r.in_coburn))}};
}

Json check(const std::string& name, bool pass, const std::string& detail) {
  return Json{{"name", name}, {"pass", pass}, {"detail", detail}};
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// ---- commands -------------------------------------------------------------

Json run_classify(const RunConfig& config) {
  const RadialSymbol sym = parse_symbol_spec(config.symbol);
  return Json{{"symbol", to_json(sym)}, {"classification", to_json(classify(sym, config.m_max))}};
}

EigenSequence spectrum_of(const RunConfig& config) {
  const RadialSymbol sym = parse_symbol_spec(config.symbol);
  if (config.method == "quadrature") return quadrature_sequence(sym, config.n_max, quadrature(config));
  return eigen_sequence(sym, config.n_max, quadrature(config));
}

Json run_spectrum(const RunConfig& config) {
  return Json{{"symbol", symbol_json(config.symbol)}, {"eigen_sequence", to_json(spectrum_of(config))}};
}

FockPolynomial apply_result(const RunConfig& config, std::optional<std::string>& warning) {
  const RadialSymbol sym = parse_symbol_spec(config.symbol);
  const FockPolynomial poly(parse_complex_list(config.poly));
  if (config.method == "extension") {
    const int len = std::max(poly.degree(), 0);
    const DiagonalOperator op{eigen_sequence(sym, len, quadrature(config))};
    const DiagonalResult res = diagonal_apply(op, to_sequence(poly));
    warning = res.domain_warning;
    return from_sequence(res.sequence);
  }
  return toeplitz_apply(sym, poly, quadrature(config));
}

Json run_apply(const RunConfig& config) {
  std::optional<std::string> warning;
  const FockPolynomial image = apply_result(config, warning);
  const RadialSymbol sym = parse_symbol_spec(config.symbol);
  const FockPolynomial poly(parse_complex_list(config.poly));
  Json j{{"symbol", to_json(sym)},
         {"input", to_json(poly)},
         {"natural_domain", std::string(to_string(in_natural_domain(sym, poly)))},
         {"result", to_json(image)}};
  j["domain_warning"] = warning ? Json(*warning) : Json(nullptr);
  return j;
}

Json run_verify(const RunConfig& config) {
  const RadialSymbol sym = parse_symbol_spec(config.symbol);
  return Json{{"symbol", to_json(sym)},
              {"equivalence", to_json(equivalence_report(sym, config.n_max, config.tol, quadrature(config)))}};
}

Json run_compose(const RunConfig& config) {
  const RadialSymbol a = parse_symbol_spec(config.symbol);
  const RadialSymbol b = parse_symbol_spec(config.symbol_b);
  return Json{{"a", to_json(a)},
              {"b", to_json(b)},
              {"composition", to_json(compose_symbols(a, b, config.n_max, quadrature(config)))}};
}

Json gamma_sweep_entry(Complex k, const RunConfig& config, Json& checks) {
  const GaussianRadialSymbol g = gamma_symbol(k);
  const ClassificationReport cls = classify(g, 0);
  Json entry{{"k", to_json(k)}, {"abs_k", std::abs(k)}, {"classification", decisions(cls)}};

  if (cls.in_L1_inf == Decision::yes) {
    const EigenSequence eig = eigen_sequence(g, config.n_max);
    double worst = 0.0;
    for (int n = 0; n <= config.n_max; ++n) {
      worst = std::max(worst, std::abs(eig.values[n] - std::pow(k, -n)) / std::abs(std::pow(k, -n)));
    }
    entry["spectrum"] = to_json(eig);
    entry["spectrum_bounded"] = std::abs(k) >= 1.0;
    checks.push_back(check("gamma(" + format_complex(k) + ") spectrum is k^-n", worst < 1e-13,
                           "max relative deviation " + sci(worst)));
  } else {
    entry["spectrum"] = nullptr;
    entry["spectrum_bounded"] = nullptr;
  }
  const bool expect_p = k.real() > 0.5;
  checks.push_back(check("gamma(" + format_complex(k) + ") in P iff Re k > 1/2",
                         (cls.in_P == Decision::yes) == expect_p, "in_P = " + std::string(to_string(cls.in_P))));
  const EquivalenceReport eq = equivalence_report(g, config.n_max, config.tol, quadrature(config));
  entry["equivalence"] = {{"verdict", std::string(to_string(eq.verdict))}, {"reason", eq.reason}};
  return entry;
}

Json run_demo(const RunConfig& config) {
  Json checks = Json::array();
  Json sections = Json::object();

  Json sweep = Json::array();
  for (Complex k : {Complex{2.0}, Complex{std::numbers::e}, Complex{0.6, -0.8}, Complex{0.8, -0.9},
                    Complex{0.7, 0.2}, Complex{0.3, 1.2}, Complex{0.4, 0.0}, Complex{-0.5, 0.0}}) {
    sweep.push_back(gamma_sweep_entry(k, config, checks));
  }
  sections["gamma_sweep"] = sweep;

  {
    const GaussianRadialSymbol g = unimodular_outside_p_symbol();
    const EigenSequence eig = eigen_sequence(g, 30);
    double dev = 0.0;
    for (const Complex& v : eig.values) dev = std::max(dev, std::abs(std::abs(v) - 1.0));
    const ClassificationReport cls = classify(g, 0);
    const EquivalenceReport eq = equivalence_report(g, config.n_max, config.tol, quadrature(config));
    sections["unimodular_outside_P"] = {{"symbol", to_json(RadialSymbol{g})},
                                        {"max_modulus_deviation", dev},
                                        {"classification", decisions(cls)},
                                        {"equivalence", to_json(eq)}};
    checks.push_back(check("unimodular symbol has |phi_n| = 1 for n <= 30", dev < 1e-10, sci(dev)));
    checks.push_back(check("unimodular symbol is in L1_inf but not in P",
                           cls.in_L1_inf == Decision::yes && cls.in_P == Decision::no, ""));
    checks.push_back(check("unimodular symbol is not equivalent, u_0 cited",
                           eq.verdict == Verdict::not_equivalent && eq.reason.rfind("u_0 ", 0) == 0, eq.reason));
  }

  {
    const double beta = 1.0;
    const GaussianRadialSymbol g = maxwell_boltzmann_symbol(beta);
    const EigenSequence closed = eigen_sequence(g, 20);
    const EigenSequence quad = quadrature_sequence(g, 20, quadrature(config));
    double worst_closed = 0.0;
    double worst_quad = 0.0;
    for (int n = 0; n <= 20; ++n) {
      const double expected = std::exp(-beta / 2 - beta * n);
      worst_closed = std::max(worst_closed, std::abs(closed.values[n] - expected) / expected);
      worst_quad = std::max(worst_quad, std::abs(quad.values[n] - expected) / expected);
    }
    sections["maxwell_boltzmann"] = {{"beta", beta},
                                     {"symbol", to_json(RadialSymbol{g})},
                                     {"spectrum", to_json(closed)},
                                     {"max_relative_error_closed_form", worst_closed},
                                     {"max_relative_error_quadrature", worst_quad}};
    checks.push_back(check("Maxwell-Boltzmann spectrum e^{-1/2} e^{-n}, n <= 20",
                           worst_closed < 1e-10 && worst_quad < 1e-10,
                           "closed form " + sci(worst_closed) + ", quadrature " + sci(worst_quad)));
  }

  {
    const Complex a{0.6, -0.8};
    const CompositionVerdict same = compose_gaussian(gamma_symbol(a), gamma_symbol(a), config.n_max);
    const CompositionVerdict conj = compose_gaussian(gamma_symbol(a), gamma_symbol(std::conj(a)), config.n_max);
    sections["coburn_counterexample"] = {{"a", to_json(a)},
                                         {"a_times_a", to_json(same)},
                                         {"a_times_conj_a", to_json(conj)}};
    checks.push_back(check("gamma_a gamma_a is not Toeplitz with symbol in P",
                           same.status == CompositionStatus::not_toeplitz_in_P, same.reason));
    bool ones = true;
    for (const Complex& v : conj.product_sequence.values) ones = ones && std::abs(v - 1.0) < 1e-13;
    checks.push_back(check("gamma_a gamma_conj(a) is the identity",
                           conj.status == CompositionStatus::closed_in_P && conj.recognized_symbol &&
                               is_gamma_form(*conj.recognized_symbol) &&
                               std::abs(conj.recognized_symbol->amplitude - 1.0) < 1e-13 && ones,
                           conj.reason));
  }

  {
    const GaussianRadialSymbol ga = gamma_symbol(2.0);
    const GaussianRadialSymbol gb = gamma_symbol(3.0);
    const GaussianRadialSymbol prod = moyal_gaussian(ga, gb);
    const Complex w{0.5, 0.0};
    const Complex partial = moyal_partial_sum(ga, gb, 40, w);
    const Complex exact = eval_symbol(prod, std::abs(w));
    const double err = std::abs(partial - exact);
    sections["moyal"] = {{"a", 2.0},
                         {"b", 3.0},
                         {"product_symbol", to_json(RadialSymbol{prod})},
                         {"partial_sum_K40_at_r_0_5", to_json(partial)},
                         {"closed_form_at_r_0_5", to_json(exact)},
                         {"error", err}};
    checks.push_back(check("gamma_2 <> gamma_3 = gamma_6", prod == gamma_symbol(6.0) && err < 1e-10, sci(err)));
  }

  {
    Json pairs = Json::array();
    bool all_closed = true;
    for (const auto& [k1, k2] : {std::pair{1.0, 1.0}, std::pair{1.5, 2.0}, std::pair{3.0, 4.25}}) {
      const CompositionVerdict v = compose_gaussian(gamma_symbol(k1), gamma_symbol(k2), config.n_max);
      all_closed = all_closed && v.status == CompositionStatus::closed_in_P &&
                   v.recognized_symbol->amplitude == Complex{k1 * k2};
      pairs.push_back({{"k1", k1}, {"k2", k2}, {"status", std::string(to_string(v.status))}});
    }
    sections["class_L"] = pairs;
    checks.push_back(check("class L closed under composition", all_closed, ""));
  }

  const bool all = std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c.at("pass").get<bool>(); });
  return Json{{"sections", sections}, {"checks", checks}, {"all_checks_pass", all}};
}

Json run_command(const RunConfig& config) {
  switch (config.command) {
    case Command::classify: return run_classify(config);
    case Command::spectrum: return run_spectrum(config);
    case Command::apply: return run_apply(config);
    case Command::verify: return run_verify(config);
    case Command::compose: return run_compose(config);
    case Command::demo: return run_demo(config);
  }
  throw InvalidInput("unknown command");
}

// ---- rendering ------------------------------------------------------------

std::string complex_text(const Json& z) {
  return format_complex({z.at("re").get<double>(), z.at("im").get<double>()});
}

void text_sequence(std::ostream& os, const Json& values, const char* label) {
  for (std::size_t n = 0; n < values.size(); ++n) os << "  " << label << "_" << n << " = " << complex_text(values[n]) << '\n';
}

std::string render_text(const RunConfig& config, const Json& result) {
  std::ostringstream os;
  switch (config.command) {
    case Command::classify: {
      const Json& c = result.at("classification");
      os << "symbol: " << result.at("symbol").dump() << '\n';
      for (const char* key : {"in_L1_inf", "in_P", "in_folland", "in_coburn"}) {
        os << key << ": " << c.at(key).get<std::string>() << '\n';
      }
      for (const auto& r : c.at("reasons")) os << "  - " << r.get<std::string>() << '\n';
      break;
    }
    case Command::spectrum: {
      const Json& e = result.at("eigen_sequence");
      os << "method: " << e.at("method").get<std::string>() << '\n';
      text_sequence(os, e.at("values"), "phi");
      if (!e.at("tail").is_null()) os << "tail ratio: " << complex_text(e.at("tail").at("ratio")) << '\n';
      break;
    }
    case Command::apply:
      os << "natural domain: " << result.at("natural_domain").get<std::string>() << '\n';
      text_sequence(os, result.at("result"), "c");
      if (!result.at("domain_warning").is_null()) os << "warning: " << result.at("domain_warning").get<std::string>() << '\n';
      break;
    case Command::verify: {
      const Json& e = result.at("equivalence");
      os << "verdict: " << e.at("verdict").get<std::string>() << '\n';
      os << "symbol in P: " << e.at("symbol_in_P").get<std::string>() << '\n';
      os << "reason: " << e.at("reason").get<std::string>() << '\n';
      const auto& res = e.at("per_n_residual");
      for (std::size_t n = 0; n < res.size(); ++n) os << "  residual[" << n << "] = " << sci(res[n].get<double>()) << '\n';
      break;
    }
    case Command::compose: {
      const Json& c = result.at("composition");
      os << "status: " << c.at("status").get<std::string>() << '\n';
      os << "reason: " << c.at("reason").get<std::string>() << '\n';
      if (!c.at("symbol").is_null()) os << "symbol: " << c.at("symbol").dump() << '\n';
      text_sequence(os, c.at("sequence").at("values"), "phi");
      break;
    }
    case Command::demo:
      for (const auto& c : result.at("checks")) {
        os << (c.at("pass").get<bool>() ? "PASS  " : "FAIL  ") << c.at("name").get<std::string>();
        const std::string detail = c.at("detail").get<std::string>();
        if (!detail.empty()) os << "  (" << detail << ")";
        os << '\n';
      }
      os << (result.at("all_checks_pass").get<bool>() ? "all checks pass" : "some checks failed") << '\n';
      break;
  }
  return os.str();
}

std::string render_csv(const RunConfig& config, const Json& result) {
  switch (config.command) {
    case Command::spectrum: return to_csv(eigen_sequence_from_json(result.at("eigen_sequence")));
    case Command::apply: return to_csv(l2_sequence_from_json(result.at("result")));
    case Command::compose: return to_csv(eigen_sequence_from_json(result.at("composition").at("sequence")));
    default:
      throw InvalidInput("csv output is available for spectrum, apply and compose only");
  }
}

int exit_code(const Error& e) {
  if (dynamic_cast<const InvalidInput*>(&e) || dynamic_cast<const EnvelopeViolation*>(&e)) return 1;
  if (dynamic_cast<const DivergentMoment*>(&e) || dynamic_cast<const DomainViolation*>(&e)) return 2;
  return 3;
}

int report_error(std::ostream& err, const char* kind, const std::string& message, int code) {
  Json j{{"schema_version", kSchemaVersion}, {"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  err << j.dump() << '\n';
  return code;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::classify: return "classify";
    case Command::spectrum: return "spectrum";
    case Command::apply: return "apply";
    case Command::verify: return "verify";
    case Command::compose: return "compose";
    case Command::demo: return "demo";
  }
  return "demo";
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "json";
}

Command command_from_string(std::string_view s) {
  for (Command c : {Command::classify, Command::spectrum, Command::apply, Command::verify, Command::compose,
                    Command::demo}) {
    if (to_string(c) == s) return c;
  }
  throw InvalidInput("unknown command \"" + std::string(s) + "\"");
}

OutputFormat format_from_string(std::string_view s) {
  for (OutputFormat f : {OutputFormat::json, OutputFormat::csv, OutputFormat::text}) {
    if (to_string(f) == s) return f;
  }
  throw InvalidInput("unknown format \"" + std::string(s) + "\"");
}

int default_nodes() {
  const char* env = std::getenv("BT_DEFAULT_NODES");
  if (env == nullptr || *env == '\0') return 200;
  int value = 0;
  const std::string_view text(env);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || value < 1) {
    throw InvalidInput("BT_DEFAULT_NODES must be a positive integer, got \"" + std::string(text) + "\"");
  }
  return value;
}

void validate(const RunConfig& config) {
  if (!(config.tol > 0.0) || !std::isfinite(config.tol)) throw InvalidInput("tol must be positive");
  if (config.nodes < 1) throw InvalidInput("nodes must be >= 1");
  if (config.n_max < 0) throw InvalidInput("n must be >= 0");
  if (config.m_max < 0) throw InvalidInput("m-max must be >= 0");
  const bool needs_symbol = config.command != Command::demo;
  if (needs_symbol && config.symbol.empty()) throw InvalidInput("a symbol is required");
  if (config.command == Command::compose && config.symbol_b.empty()) throw InvalidInput("compose needs two symbols");
  if (config.command == Command::apply && config.poly.empty()) throw InvalidInput("apply needs --poly");
  if (config.command == Command::apply && !config.method.empty() && config.method != "toeplitz" &&
      config.method != "extension") {
    throw InvalidInput("apply --via must be toeplitz or extension");
  }
  if (config.command == Command::spectrum && !config.method.empty() && config.method != "auto" &&
      config.method != "quadrature") {
    throw InvalidInput("spectrum --method must be auto or quadrature");
  }
}

Json config_to_json(const RunConfig& config) {
  Json j{{"command", std::string(to_string(config.command))}};
  j["symbol"] = config.symbol.empty() ? Json(nullptr) : symbol_json(config.symbol);
  j["symbol_b"] = config.symbol_b.empty() ? Json(nullptr) : symbol_json(config.symbol_b);
  j["poly"] = config.poly.empty() ? Json(nullptr) : to_json(FockPolynomial(parse_complex_list(config.poly)));
  j["method"] = config.method.empty() ? Json(nullptr) : Json(config.method);
  j["n_max"] = config.n_max;
  j["nodes"] = config.nodes;
  j["tol"] = config.tol;
  j["m_max"] = config.m_max;
  j["format"] = std::string(to_string(config.format));
  return j;
}

RunConfig config_from_json(const Json& j) {
  if (j.is_object() && j.contains("config")) return config_from_json(j.at("config"));
  if (!j.is_object()) throw InvalidInput("config must be a JSON object");
  RunConfig c;
  try {
    c.command = command_from_string(j.at("command").get<std::string>());
    auto symbol_text = [&](const char* key) -> std::string {
      return j.contains(key) && !j.at(key).is_null() ? j.at(key).dump() : std::string{};
    };
    c.symbol = symbol_text("symbol");
    c.symbol_b = symbol_text("symbol_b");
    if (j.contains("poly") && !j.at("poly").is_null()) {
      const FockPolynomial poly = fock_polynomial_from_json(j.at("poly"));
      std::string list;
      for (const Complex& z : poly.u_coeffs()) {
        if (!list.empty()) list += ',';
        list += format_complex(z);
      }
      c.poly = list;
    }
    if (j.contains("method") && !j.at("method").is_null()) c.method = j.at("method").get<std::string>();
    c.n_max = j.value("n_max", c.n_max);
    c.nodes = j.value("nodes", c.nodes);
    c.tol = j.value("tol", c.tol);
    c.m_max = j.value("m_max", c.m_max);
    if (j.contains("format")) c.format = format_from_string(j.at("format").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const Json result = run_command(config);

    std::string body;
    if (config.format == OutputFormat::json) {
      Json report{{"schema_version", kSchemaVersion}};
      if (config.timestamp) report["generated_at"] = utc_timestamp();
      report["command"] = std::string(to_string(config.command));
      report["config"] = config_to_json(config);
      report["result"] = result;
      body = report.dump(2) + '\n';
    } else if (config.format == OutputFormat::csv) {
      body = render_csv(config, result);
    } else {
      body = render_text(config, result);
    }

    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary);
      if (!file) throw InvalidInput("cannot write " + *config.output);
      file << body;
    } else {
      out << body;
    }
    return 0;
  } catch (const Error& e) {
    return report_error(err, e.kind(), e.what(), exit_code(e));
  } catch (const nlohmann::json::exception& e) {
    return report_error(err, "InvalidInput", e.what(), 1);
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial Toeplitz operators on the Segal-Bargmann space", "bt"};
  app.require_subcommand(0, 1);

  RunConfig config;
  std::string format;
  std::string output;
  std::string config_path;
  bool no_timestamp = false;
  std::optional<int> nodes;

  app.add_option("--config", config_path, "Re-run the config embedded in a report (or a bare config file)");
  app.add_option("--output", output, "With --config: write the report to this file");
  app.add_flag("--no-timestamp", no_timestamp, "With --config: omit generated_at");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--nodes", nodes, "Radial Gauss-Laguerre nodes (default 200 or BT_DEFAULT_NODES)");
    sub->add_option("--tol", config.tol, "Residual tolerance")->capture_default_str();
    sub->add_option("--format", format, "json, csv or text (spectrum defaults to csv, others to json)");
    sub->add_option("--output", output, "Write the report to this file instead of stdout");
    sub->add_flag("--no-timestamp", no_timestamp, "Omit generated_at from JSON reports");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Decide L1_inf, P, Folland and Coburn membership");
  classify_cmd->add_option("--symbol", config.symbol, "Symbol: gamma:<k>, gaussian:<c>,<sigma>, poly:..., mb:<beta>, "
                                                      "unimodular, inline JSON or a JSON file")->required();
  classify_cmd->add_option("--m-max", config.m_max, "Largest moment reported as evidence")->capture_default_str();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalue sequence phi_0..phi_n");
  spectrum_cmd->add_option("--symbol", config.symbol, "Symbol")->required();
  spectrum_cmd->add_option("--n", config.n_max, "Largest index")->capture_default_str();
  spectrum_cmd->add_option("--method", config.method, "auto (closed form when available) or quadrature");

  auto* apply_cmd = app.add_subcommand("apply", "Apply T_phi (or its diagonal extension) to a polynomial");
  apply_cmd->add_option("--symbol", config.symbol, "Symbol")->required();
  apply_cmd->add_option("--poly", config.poly, "Comma-separated u-basis coefficients")->required();
  apply_cmd->add_option("--via", config.method, "toeplitz (Bargmann projection) or extension (U^-1 D U)");

  auto* verify_cmd = app.add_subcommand("verify", "Check T_phi against the diagonal operator on u_0..u_n");
  verify_cmd->add_option("--symbol", config.symbol, "Symbol")->required();
  verify_cmd->add_option("--n", config.n_max, "Largest basis index tested")->capture_default_str();

  auto* compose_cmd = app.add_subcommand("compose", "Compose two radial Toeplitz operators");
  compose_cmd->add_option("--a", config.symbol, "First symbol")->required();
  compose_cmd->add_option("--b", config.symbol_b, "Second symbol")->required();
  compose_cmd->add_option("--n", config.n_max, "Length of the reported product sequence")->capture_default_str();

  auto* demo_cmd = app.add_subcommand("demo", "Replay the gamma_k sweep, composition counterexamples and checks");
  demo_cmd->add_option("--n", config.n_max, "Largest basis index used in equivalence checks")->capture_default_str();

  for (auto* sub : {classify_cmd, spectrum_cmd, apply_cmd, verify_cmd, compose_cmd, demo_cmd}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "InvalidInput", e.what(), 1);
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw InvalidInput("cannot read " + config_path);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(config_path + ": " + e.what());
      }
      RunConfig loaded = config_from_json(j);
      loaded.timestamp = !no_timestamp;
      if (!output.empty()) loaded.output = output;
      return run(loaded, out, err);
    }
    if (app.get_subcommands().empty()) throw InvalidInput("a command is required (try --help)");

    config.command = command_from_string(app.get_subcommands().front()->get_name());
    if (format.empty()) format = config.command == Command::spectrum ? "csv" : "json";
    config.format = format_from_string(format);
    config.nodes = nodes ? *nodes : default_nodes();
    config.timestamp = !no_timestamp;
    if (!output.empty()) config.output = output;
  } catch (const Error& e) {
    return report_error(err, e.kind(), e.what(), exit_code(e));
  }
  return run(config, out, err);
}

}  // namespace bt::cli
