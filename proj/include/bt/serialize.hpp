#pragma once

// JSON and CSV forms of the library types. Schemas are documented in
// docs/schema.md; complex numbers are always {"re": x, "im": y}.

#include <string>
#include <string_view>

#include <json.hpp>

#include "bt/composition.hpp"
#include "bt/operators.hpp"
#include "bt/spaces.hpp"
#include "bt/spectra.hpp"
#include "bt/symbols.hpp"

namespace bt {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"kind": "gaussian"|"polynomial"|"enveloped", ...}. Enveloped symbols
/// serialize only when they carry a source descriptor.
Json to_json(const RadialSymbol& sym);
RadialSymbol symbol_from_json(const Json& j);

/// Enveloped symbol backed by a named built-in function:
///   cos_r2     cos(r^2)
///   bessel_j0  J_0(r)
///   indicator  1 on r <= radius (param "radius", default 1), else 0
///   chirp      exp(i omega r^2) (param "omega", default 1)
/// `params` may be null.
EnvelopedSymbol enveloped_function(const std::string& name, const Json& params, double C, double delta);

/// Parses the command-line symbol form: `gamma:<k>`, `gaussian:<c>,<sigma>`,
/// `poly:<p0>,<p1>,...`, `mb:<beta>`, `unimodular`, inline JSON starting
/// with '{', or a path to a JSON file.
RadialSymbol parse_symbol_spec(std::string_view text);

/// Comma-separated complex literals, e.g. "1,0.5-0.2i,0".
std::vector<Complex> parse_complex_list(std::string_view text);

Json to_json(const EigenSequence& seq);
EigenSequence eigen_sequence_from_json(const Json& j);

/// Arrays of {re, im}. L2Sequence tail metadata is not serialized.
Json to_json(const FockPolynomial& poly);
FockPolynomial fock_polynomial_from_json(const Json& j);
Json to_json(const L2Sequence& seq);
L2Sequence l2_sequence_from_json(const Json& j);

Json to_json(const ClassificationReport& report);
Json to_json(const EquivalenceReport& report);
Json to_json(const CompositionVerdict& verdict);

/// CSV with header `n,re,im,modulus`, one row per entry.
std::string to_csv(const EigenSequence& seq);
std::string to_csv(const L2Sequence& seq);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace bt
