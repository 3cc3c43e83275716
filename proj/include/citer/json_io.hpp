#pragma once

// JSON encodings shared by the CLI and the report writer. Complex numbers
// are always [re, im]; a bare number is accepted on input as a real.

#include <json.hpp>

#include "citer/check.hpp"
#include "citer/paths.hpp"
#include "citer/series.hpp"

namespace citer::io {

using nlohmann::json;

/// Doubles are written with 17 significant digits, so re-parsing gives the
/// bit-identical pair. Non-finite parts become null.
json to_json(Complex z);

/// Throws InvalidArgument on anything but a number or a two-number array.
Complex complex_from_json(const json& j, const char* what = "complex number");

/// {"type":"rational","num":[...],"den":[...]} and the other built-ins:
/// character, character-prime, ideal-count, katz, moebius,
/// prime-indicator, coeffs.
SeriesModel series_from_json(const json& j);

/// {"segments":[{"line":[a,b]} | {"arc":{"center":c,"radius":r,"from":t0,"to":t1}}]}
Path path_from_json(const json& j);

json to_json(const QuadratureConfig& cfg);

/// runtime_ms is emitted only when timings is set, keeping reports
/// bit-identical across runs by default.
json to_json(const CheckResult& r, bool timings);

/// Parses text, mapping syntax errors onto InvalidArgument.
json parse(const std::string& text, const char* what);

}  // namespace citer::io
