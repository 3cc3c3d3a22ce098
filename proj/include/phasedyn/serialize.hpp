#pragma once

#include <string>

#include <json.hpp>

#include "phasedyn/deform.hpp"
#include "phasedyn/operator.hpp"
#include "phasedyn/report.hpp"

namespace phasedyn {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// {"dim": d, "label": s, "re": [[...]], "im": [[...]]}, row-major.
Json to_json(const Operator& o);
/// Inverse of to_json(Operator). Throws Error("format") on malformed input.
Operator operator_from_json(const Json& j);

/// {"Jp": op, "Jm": op, "J0": op, "provenance": {"map", "params", "hermitian_pair"}}.
Json to_json(const DeformedTriple& t);

/// [{"name", "residual", "tol", "pass", "detail"}, ...].
Json to_json(const CheckReport& r);

/// Serialises with floating-point numbers printed as %.17g, so identical
/// inputs give byte-identical text.
std::string dump_json(const Json& j, int indent = 2);

/// %.17g.
std::string format_double(double x);

} // namespace phasedyn
