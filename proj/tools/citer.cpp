// citer: command-line front end for the complex iterated integral library.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 numeric or precondition error, 4 internal error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "citer/continuation.hpp"
#include "citer/engine.hpp"
#include "citer/error.hpp"
#include "citer/json_io.hpp"
#include "citer/monodromy.hpp"
#include "citer/verify.hpp"
#include "citer/zeta.hpp"

using namespace citer;
using io::json;

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kInput = 2, kNumeric = 3, kInternal = 4 };

struct Globals {
  std::optional<double> tol;
  std::optional<int> max_level;
  std::string config_path;
  std::string json_path;
  bool quiet = false;
  bool timings = false;
};

/// "2", "-1.5", "2.5+1i", "3-2i", "1i", or a JSON pair "[2.5,1]".
Complex parse_complex(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (!t.empty() && t.front() == '[') return io::complex_from_json(io::parse(t, "complex number"));
  static const std::regex re(R"(^([+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?)?(?:([+-]?[0-9.]*(?:[eE][+-]?[0-9]+)?)i)?$)");
  std::smatch m;
  if (t.empty() || !std::regex_match(t, m, re))
    fail(ErrorCode::InvalidArgument, "cannot read \"" + text + "\" as a complex number");
  auto num = [&](const std::string& s, double fallback) {
    if (s.empty() || s == "+") return fallback;
    if (s == "-") return -fallback;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) fail(ErrorCode::InvalidArgument, "cannot read \"" + text + "\" as a complex number");
    return v;
  };
  const bool has_imag = t.back() == 'i';
  return {num(m[1].str(), 0.0), has_imag ? num(m[2].str(), 1.0) : 0.0};
}

/// Comma-separated complex list; pairs in brackets stay whole.
std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_complex(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(parse_complex(cur));
  return out;
}

/// key = value lines; '#' starts a comment.
void apply_config_file(const std::string& path, QuadratureConfig& cfg) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r\"");
      const auto b = s.find_last_not_of(" \t\r\"");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos)
      fail(ErrorCode::InvalidArgument, path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    try {
      if (key == "rel_tol") cfg.rel_tol = std::stod(value);
      else if (key == "max_level") cfg.max_level = std::stoi(value);
      else if (key == "tail_cutoff") cfg.tail_cutoff = std::stod(value);
      else if (key == "circle_radius") cfg.circle_radius = std::stod(value);
      else if (key == "circle_points") cfg.circle_points = std::stoi(value);
      else if (key == "parallel") cfg.parallel = value == "true" || value == "1";
      else fail(ErrorCode::InvalidArgument, path + ":" + std::to_string(lineno) + ": unknown key " + key);
    } catch (const std::logic_error&) {
      fail(ErrorCode::InvalidArgument, path + ":" + std::to_string(lineno) + ": bad value for " + key);
    }
  }
}

QuadratureConfig resolve_config(const Globals& g) {
  QuadratureConfig cfg;
  std::string path = g.config_path;
  if (path.empty())
    if (const char* env = std::getenv("CITER_CONFIG")) path = env;
  if (!path.empty()) apply_config_file(path, cfg);
  if (g.tol) cfg.rel_tol = *g.tol;
  if (g.max_level) cfg.max_level = *g.max_level;
  cfg.validate();
  return cfg;
}

void emit(const json& doc, const Globals& g) {
  const std::string text = doc.dump();
  if (!g.quiet) std::cout << text << '\n';
  if (!g.json_path.empty()) {
    std::ofstream out(g.json_path);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + g.json_path);
    out << doc.dump(2) << '\n';
  }
}

json error_estimate(std::optional<double> e) { return e ? json(*e) : json(nullptr); }

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

FormSpec parse_form(const std::string& text) {
  if (text == "log") return FormSpec::log();
  if (text == "one-minus") return FormSpec::one_minus();
  return FormSpec::weighted(io::series_from_json(io::parse(text, "--form")));
}

int fail_exit(int code, std::string_view name, const std::string& message) {
  std::cerr << json{{"error", name}, {"message", message}, {"exit_code", code}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex iterated integrals: evaluation, continuation and verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_option("--tol", g.tol, "Quadrature relative tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-level", g.max_level, "Deepest tanh-sinh refinement level");
  app.add_option("--config", g.config_path, "key = value config file (falls back on $CITER_CONFIG)");
  app.add_option("--json", g.json_path, "Also write the JSON result to this path");
  app.add_flag("--quiet", g.quiet, "Print nothing on standard output");
  app.add_flag("--timings", g.timings, "Include per-check runtimes in verification reports");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one operation");
  std::string kind, s_text, w_text, series_text, path_text, form_text = "one-minus";
  std::string z_text = "1";
  double lower = 0.0;
  int discriminant = -4;
  eval->add_option("kind", kind,
                   "zeta | zeta-dual | completed-z | polylog | mzv | hurwitz | dirichlet | dedekind | power | chen")
      ->required();
  eval->add_option("--s", s_text, "Exponent, or comma-separated exponents for mzv and hurwitz");
  eval->add_option("--w", w_text, "Polylogarithm argument");
  eval->add_option("--z", z_text, "Hurwitz shift");
  eval->add_option("--series", series_text, "Series spec JSON (dirichlet: a character spec)");
  eval->add_option("--path", path_text, "Path spec JSON");
  eval->add_option("--form", form_text, "Form for chen: log | one-minus | series spec JSON");
  eval->add_option("--lower", lower, "Lower endpoint of [lower, 1] for power");
  eval->add_option("--discriminant", discriminant, "Fundamental discriminant for dedekind");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite, "all | core | comult | continuation | monodromy | zeta");

  // continue
  auto* cont = app.add_subcommand("continue", "Analytic continuation of L(F)");
  std::optional<int> k;
  std::string cs_text, route = "auto";
  ContourSpec contour;
  cont->add_option("--series", series_text, "Series spec JSON")->required();
  auto* k_opt = cont->add_option("--k", k, "Evaluate at s = -k");
  cont->add_option("--s", cs_text, "Evaluate at a complex s")->excludes(k_opt);
  cont->add_option("--route", route, "auto | contour | laurent | derivative");
  cont->add_option("--delta", contour.delta, "Contour radius (0 picks one)");
  cont->add_option("--x-max", contour.x_max, "Contour ray cut-off");

  // transform
  auto* transform = app.add_subcommand("transform", "s-gap series sum a_n z^{n^s}");
  std::string ts_text;
  double tz = 0.5;
  transform->add_option("--series", series_text, "Series spec JSON")->required();
  transform->add_option("--s", ts_text, "Gap exponent")->required();
  transform->add_option("--z", tz, "Real z in (0, 1)")->required();

  // monodromy
  auto* mono = app.add_subcommand("monodromy", "Li_s(w) continued around z = 1");
  std::string ms_text = "2", mw_text = "0.5";
  std::optional<double> eta;
  MonodromyScenario sc;
  mono->add_option("--s", ms_text, "Order s with Re(s) > 1");
  mono->add_option("--w", mw_text, "Argument w with 0 < |w| < 1");
  mono->add_option("--eta", eta, "Base point on (0, 1); default picks an admissible one");
  mono->add_option("--epsilon", sc.epsilon, "Loop radius about 1");
  mono->add_option("--loops", sc.loops, "Number of turns about 1");
  mono->add_option("--n-terms", sc.n_terms, "Comultiplication truncation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail_exit(kInput, "UsageError", e.what());
  }

  try {
    const QuadratureConfig cfg = resolve_config(g);
    const Timer timer;

    if (*eval) {
      auto need = [](const std::string& v, const char* flag) -> const std::string& {
        if (v.empty()) fail(ErrorCode::InvalidArgument, std::string("eval needs ") + flag);
        return v;
      };
      Complex value;
      std::optional<double> err;
      if (kind == "zeta") {
        const QuadResult r = power_iterated_integral_q(riemann_weight(), parse_complex(need(s_text, "--s")), 0.0, cfg);
        value = r.value;
        err = r.error;
      } else if (kind == "zeta-dual") {
        value = zeta_dual(parse_complex(need(s_text, "--s")), cfg);
      } else if (kind == "completed-z") {
        value = completed_Z(parse_complex(need(s_text, "--s")), cfg);
      } else if (kind == "polylog") {
        const Complex s = parse_complex(need(s_text, "--s")), w = parse_complex(need(w_text, "--w"));
        value = path_text.empty() ? polylog(s, w, cfg)
                                  : polylog_integral(s, w, io::path_from_json(io::parse(path_text, "--path")), cfg);
      } else if (kind == "mzv") {
        value = mzv(parse_complex_list(need(s_text, "--s")), cfg);
      } else if (kind == "hurwitz") {
        value = hurwitz_mzv(parse_complex_list(need(s_text, "--s")), parse_complex(z_text), cfg);
      } else if (kind == "dirichlet") {
        const json spec = io::parse(need(series_text, "--series"), "--series");
        CharacterTable chi;
        if (spec.value("type", "") == "character-prime") {
          chi = character_from_prime_modulus(spec.at("modulus").get<int>(), spec.value("order", 2));
        } else {
          if (spec.value("type", "") != "character")
            fail(ErrorCode::InvalidArgument, "dirichlet needs a character or character-prime spec");
          chi.modulus = spec.at("modulus").get<int>();
          for (const auto& v : spec.at("values")) chi.values.push_back(io::complex_from_json(v));
        }
        value = dirichlet_L(parse_complex(need(s_text, "--s")), chi, cfg);
      } else if (kind == "dedekind") {
        value = dedekind_zeta_transform(discriminant, parse_complex(need(s_text, "--s")), cfg);
      } else if (kind == "power") {
        const SeriesModel F = io::series_from_json(io::parse(need(series_text, "--series"), "--series"));
        const QuadResult r = power_iterated_integral_q(F, parse_complex(need(s_text, "--s")), lower, cfg);
        value = r.value;
        err = r.error;
      } else if (kind == "chen") {
        const Path p = io::path_from_json(io::parse(need(path_text, "--path"), "--path"));
        const QuadResult r = chen_power_integral(p, parse_form(form_text), parse_complex(need(s_text, "--s")), cfg);
        value = r.value;
        err = r.error;
      } else {
        fail(ErrorCode::InvalidArgument, "unknown eval kind \"" + kind + "\"");
      }
      emit({{"value", io::to_json(value)}, {"error_estimate", error_estimate(err)}, {"runtime_ms", timer.ms()}}, g);
      return kOk;
    }

    if (*verify) {
      const VerificationReport report = run_suite(suite, cfg);
      const json doc = to_json(report, g.timings);
      if (!g.json_path.empty()) {
        std::ofstream out(g.json_path);
        if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + g.json_path);
        out << doc.dump(2) << '\n';
      }
      if (!g.quiet) {
        for (const auto& r : report.results) {
          std::cout << status_name(r.status) << "  " << r.name << "  |err| = " << r.abs_error
                    << "  tol = " << r.tolerance;
          if (!r.note.empty()) std::cout << "  (" << r.note << ")";
          std::cout << '\n';
        }
        std::cout << report.count(CheckStatus::Pass) << " pass, " << report.count(CheckStatus::Fail) << " fail, "
                  << report.count(CheckStatus::Skipped) << " skipped of " << report.results.size() << '\n';
      }
      return report.all_passed() ? kOk : kChecksFailed;
    }

    if (*cont) {
      const SeriesModel F = io::series_from_json(io::parse(series_text, "--series"));
      ContinuationResult r;
      if (k) {
        if (route == "auto" || route == "laurent") r = value_at_negative_integer(F, *k, contour, cfg);
        else if (route == "derivative") r = derivative_at_negative_integer(F, *k);
        else if (route == "contour") r = continue_L(F, -static_cast<double>(*k), contour, cfg);
        else fail(ErrorCode::InvalidArgument, "unknown route \"" + route + "\"");
      } else {
        if (cs_text.empty()) fail(ErrorCode::InvalidArgument, "continue needs --k or --s");
        if (route != "auto" && route != "contour")
          fail(ErrorCode::InvalidArgument, "--s evaluates on the contour route only");
        r = continue_L(F, parse_complex(cs_text), contour, cfg);
      }
      emit({{"value", io::to_json(r.value)},
            {"route", route_name(r.route)},
            {"error_estimate", r.error_estimate},
            {"runtime_ms", timer.ms()}},
           g);
      return kOk;
    }

    if (*transform) {
      const SeriesModel F = io::series_from_json(io::parse(series_text, "--series"));
      const Complex v = s_gap_eval(F, parse_complex(ts_text), tz, cfg);
      emit({{"value", io::to_json(v)}, {"error_estimate", nullptr}, {"runtime_ms", timer.ms()}}, g);
      return kOk;
    }

    if (*mono) {
      sc.s = parse_complex(ms_text);
      sc.w = parse_complex(mw_text);
      sc.eta = eta ? *eta : admissible_eta(sc.w, sc.epsilon);
      const MonodromyDefect d = monodromy_defect(sc, cfg);
      emit({{"defect", io::to_json(d.defect)},
            {"predicted", io::to_json(d.predicted)},
            {"matched_branch", d.matched_branch},
            {"error_budget", d.error_budget},
            {"direct", io::to_json(direct_polylog(sc, cfg))},
            {"eta", sc.eta},
            {"runtime_ms", timer.ms()}},
           g);
      return kOk;
    }
  } catch (const Error& e) {
    return fail_exit(is_input_error(e.code()) ? kInput : kNumeric, e.name(), e.what());
  } catch (const json::exception& e) {
    return fail_exit(kInput, "SchemaError", e.what());
  } catch (const std::exception& e) {
    return fail_exit(kInternal, "InternalError", e.what());
  }
  return kInternal;
}
