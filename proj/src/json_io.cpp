#include "citer/json_io.hpp"

#include <cmath>

#include "citer/error.hpp"

namespace citer::io {

namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

const json& field(const json& j, const char* key, const char* type) {
  if (!j.contains(key)) fail(ErrorCode::InvalidArgument, std::string(type) + " spec needs \"" + key + "\"");
  return j.at(key);
}

double real_field(const json& j, const char* key, const char* type) {
  const json& v = field(j, key, type);
  if (!v.is_number()) fail(ErrorCode::InvalidArgument, std::string(type) + "." + key + " must be a number");
  return v.get<double>();
}

int int_field(const json& j, const char* key, const char* type) {
  const json& v = field(j, key, type);
  if (!v.is_number_integer()) fail(ErrorCode::InvalidArgument, std::string(type) + "." + key + " must be an integer");
  return v.get<int>();
}

std::vector<Complex> complex_list(const json& j, const char* key, const char* type) {
  const json& v = field(j, key, type);
  if (!v.is_array() || v.empty())
    fail(ErrorCode::InvalidArgument, std::string(type) + "." + key + " must be a non-empty array");
  std::vector<Complex> out;
  for (const auto& e : v) out.push_back(complex_from_json(e, key));
  return out;
}

}  // namespace

json to_json(Complex z) { return json::array({number(z.real()), number(z.imag())}); }

Complex complex_from_json(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  fail(ErrorCode::InvalidArgument, std::string(what) + " must be a number or [re, im]");
}

SeriesModel series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    fail(ErrorCode::InvalidArgument, "series spec must be an object with a string \"type\"");
  const std::string type = j["type"];
  const char* t = type.c_str();
  if (type == "rational") {
    std::string label = j.value("label", std::string("rational"));
    return from_rational(complex_list(j, "num", t), complex_list(j, "den", t), label);
  }
  if (type == "character") {
    CharacterTable table;
    table.modulus = int_field(j, "modulus", t);
    table.values = complex_list(j, "values", t);
    if (static_cast<int>(table.values.size()) != table.modulus)
      fail(ErrorCode::InvalidArgument, "character.values must list chi(1) .. chi(modulus)");
    return from_character(table);
  }
  if (type == "character-prime")
    return from_character(character_from_prime_modulus(int_field(j, "modulus", t), j.value("order", 2)));
  if (type == "ideal-count") return ideal_count_series(int_field(j, "discriminant", t));
  if (type == "katz") return katz_psi(int_field(j, "a", t));
  if (type == "moebius") return moebius_series(j.value("cap", 1'000'000L));
  if (type == "prime-indicator") return prime_indicator_series(j.value("cap", 1'000'000L));
  if (type == "coeffs") return from_coefficient_list(complex_list(j, "values", t), real_field(j, "bieberbach_k", t));
  fail(ErrorCode::InvalidArgument, "unknown series type \"" + type + "\"");
}

Path path_from_json(const json& j) {
  if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array() || j["segments"].empty())
    fail(ErrorCode::InvalidArgument, "path spec must be {\"segments\":[...]} with at least one segment");
  Path p;
  for (const auto& s : j["segments"]) {
    PathSegment seg;
    if (s.contains("line")) {
      const json& l = s["line"];
      if (!l.is_array() || l.size() != 2) fail(ErrorCode::InvalidArgument, "line needs [start, end]");
      seg = PathSegment::line(complex_from_json(l[0], "line start"), complex_from_json(l[1], "line end"));
    } else if (s.contains("arc")) {
      const json& a = s["arc"];
      const double r = real_field(a, "radius", "arc");
      if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "arc.radius must be positive");
      seg = PathSegment::arc(complex_from_json(field(a, "center", "arc"), "arc center"), r,
                             real_field(a, "from", "arc"), real_field(a, "to", "arc"));
    } else {
      fail(ErrorCode::InvalidArgument, "segment must be {\"line\":...} or {\"arc\":...}");
    }
    if (p.segments.empty()) {
      p.segments.push_back(seg);
    } else {
      p = concat(p, Path{{seg}});
    }
  }
  return p;
}

json to_json(const QuadratureConfig& cfg) {
  return {{"rel_tol", cfg.rel_tol},           {"max_level", cfg.max_level},
          {"tail_cutoff", cfg.tail_cutoff},   {"circle_radius", cfg.circle_radius},
          {"circle_points", cfg.circle_points}, {"parallel", cfg.parallel}};
}

json to_json(const CheckResult& r, bool timings) {
  json j = {{"name", r.name},
            {"computed", to_json(r.computed)},
            {"expected", to_json(r.expected)},
            {"abs_error", number(r.abs_error)},
            {"tolerance", number(r.tolerance)},
            {"status", status_name(r.status)},
            {"provenance", r.provenance}};
  if (!r.note.empty()) j["note"] = r.note;
  if (timings) j["runtime_ms"] = r.runtime_ms;
  return j;
}

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::InvalidArgument, std::string(what) + " is not valid JSON: " + e.what());
  }
}

}  // namespace citer::io
