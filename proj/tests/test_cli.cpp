#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "citer/engine.hpp"
#include "citer/zeta.hpp"
#include "doctest.h"
#include "oracles.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

/// Runs the CLI with the given (already quoted) arguments.
Run cli(const std::string& args, const std::string& env = "") {
  const std::string err_file = std::string(CITER_TEST_TMP) + "/stderr.txt";
  const std::string cmd = env + " " + CITER_CLI + " " + args + " 2>" + err_file;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  return r;
}

std::complex<double> value_of(const Run& r) {
  const json j = json::parse(r.out);
  return {j["value"][0].get<double>(), j["value"][1].get<double>()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kFQ = R"({"type":"rational","num":[0,1],"den":[1,-1]})";

}  // namespace

TEST_CASE("eval examples") {
  const Run z = cli("eval zeta --s 2");
  REQUIRE(z.code == 0);
  CHECK(std::abs(value_of(z) - oracle::pi * oracle::pi / 6.0) < 1e-8);
  const json j = json::parse(z.out);
  CHECK(j.contains("error_estimate"));
  CHECK(j.contains("runtime_ms"));

  const Run li = cli("eval polylog --s 2 --w 0.5");
  REQUIRE(li.code == 0);
  CHECK(std::abs(value_of(li) - 0.5822405264650125) < 1e-9);

  const Run m = cli("eval mzv --s 2,1");
  REQUIRE(m.code == 0);
  CHECK(std::abs(value_of(m) - oracle::apery) < 1e-4);

  const Run c = cli("eval zeta --s 2.5+1i");
  REQUIRE(c.code == 0);
  CHECK(std::abs(value_of(c) - oracle::zeta(std::complex<double>(2.5, 1))) < 1e-8);

  const Run path = cli("eval chen --form one-minus --s 1.5 --path " +
                       quote(R"({"segments":[{"line":[[0.4,0],[0.8,0]]}]})"));
  REQUIRE(path.code == 0);
  const citer::Complex direct =
      citer::chen_power_integral(citer::Path::line(0.4, 0.8), citer::FormSpec::one_minus(), 1.5).value;
  CHECK(value_of(path) == direct);

  const Run d = cli("eval dirichlet --s 2 --series " + quote(R"({"type":"character","modulus":4,"values":[1,0,-1,0]})"));
  REQUIRE(d.code == 0);
  CHECK(std::abs(value_of(d) - oracle::catalan) < 1e-8);
}

TEST_CASE("continue examples") {
  const Run q = cli("continue --series " + quote(kFQ) + " --k 1");
  REQUIRE(q.code == 0);
  CHECK(std::abs(value_of(q) + 1.0 / 12.0) < 1e-10);
  CHECK(json::parse(q.out)["route"] == "laurent");

  const Run k = cli("continue --series " + quote(R"({"type":"katz","a":2})") + " --k 1");
  REQUIRE(k.code == 0);
  CHECK(std::abs(value_of(k) - 0.25) < 1e-10);

  const Run chi = cli("continue --series " + quote(R"({"type":"character","modulus":4,"values":[1,0,-1,0]})") +
                      " --s 1");
  REQUIRE(chi.code == 0);
  CHECK(std::abs(value_of(chi) - oracle::pi / 4.0) < 1e-8);

  const Run pole = cli("continue --series " + quote(kFQ) + " --s 1");
  CHECK(pole.code == 3);
  CHECK(json::parse(pole.err)["error"] == "PositiveIntegerPole");
}

TEST_CASE("transform and monodromy") {
  const Run t = cli("transform --series " + quote(kFQ) + " --s 2 --z 0.5");
  REQUIRE(t.code == 0);
  double gap = 0;
  for (int n = 1; n < 10; ++n) gap += std::pow(0.5, n * n);
  CHECK(std::abs(value_of(t) - gap) < 1e-14);

  const Run m = cli("monodromy --s 2 --w 0.5");
  REQUIRE(m.code == 0);
  const json j = json::parse(m.out);
  const std::complex<double> defect{j["defect"][0].get<double>(), j["defect"][1].get<double>()};
  CHECK(std::abs(defect - std::complex<double>(0, -2 * oracle::pi * std::log(0.5))) < 1e-8);
  CHECK(cli("monodromy --s 2 --w 0.5 --eta 0.3").code == 3);
}

TEST_CASE("printed values re-parse to the identical pair") {
  const Run z = cli("eval zeta --s 2.5+1i");
  REQUIRE(z.code == 0);
  CHECK(value_of(z) == citer::zeta(std::complex<double>(2.5, 1)));
  const Run li = cli("eval polylog --s 2.2 --w [0.3,0.4]");
  REQUIRE(li.code == 0);
  CHECK(value_of(li) == citer::polylog(2.2, std::complex<double>(0.3, 0.4)));
  // the whole JSON document also survives a dump/parse cycle
  const json doc = json::parse(li.out);
  CHECK(json::parse(doc.dump()) == doc);
}

TEST_CASE("exit codes") {
  // input errors
  for (const std::string& args : std::vector<std::string>
       {"eval zeta", "eval zeta --s 2+", "eval nonsense --s 2", "continue --series " + quote("{not json") + " --k 1",
        "continue --series " + quote(R"({"type":"spline"})") + " --k 1",
        "continue --series " + quote(R"({"type":"rational","num":[0,1]})") + " --k 1",
        "continue --series " + quote(R"({"type":"katz","a":"two"})") + " --k 1",
        "eval chen --s 1 --path " + quote(R"({"segments":[{"line":[[0.1,0],[0.2,0]]},{"line":[[0.3,0],[0.4,0]]}]})"),
        "eval mzv --s 4,3,2", "verify nosuch", "--bogus eval zeta --s 2", "--config /nonexistent eval zeta --s 2",
        "--tol -1 eval zeta --s 2"}) {
    const Run r = cli(args);
    CHECK_MESSAGE(r.code == 2, args);
    CHECK_MESSAGE(json::parse(r.err).contains("error"), args);
  }
  // numeric or precondition errors
  for (const std::string& args : std::vector<std::string>{"eval zeta --s 1", "eval mzv --s 1,2", "eval polylog --s 2 --w 1.5",
                                  "continue --series " + quote(R"({"type":"ideal-count","discriminant":-4})") + " --k 1",
                                  "--max-level 2 --tol 1e-14 eval zeta --s 2.5"}) {
    const Run r = cli(args);
    CHECK_MESSAGE(r.code == 3, args);
    CHECK_MESSAGE(json::parse(r.err).contains("message"), args);
  }
}

TEST_CASE("config precedence: flags over file over defaults") {
  const std::string path = std::string(CITER_TEST_TMP) + "/citer.conf";
  {
    std::ofstream out(path);
    out << "# loose\nrel_tol = 1e-4\nmax_level = 8\n";
  }
  const Run defaults = cli("verify core --quiet --json " + std::string(CITER_TEST_TMP) + "/d.json");
  const Run file = cli("--config " + path + " verify core --quiet --json " + std::string(CITER_TEST_TMP) + "/f.json");
  const Run env = cli("verify core --quiet --json " + std::string(CITER_TEST_TMP) + "/e.json", "CITER_CONFIG=" + path);
  const Run flag = cli("--config " + path + " --tol 1e-9 verify core --quiet --json " + std::string(CITER_TEST_TMP) +
                       "/g.json");
  REQUIRE(defaults.code == 0);
  auto cfg = [](const std::string& f) { return json::parse(slurp(std::string(CITER_TEST_TMP) + "/" + f))["config"]; };
  CHECK(cfg("d.json")["rel_tol"] == 1e-10);
  CHECK(cfg("f.json")["rel_tol"] == 1e-4);
  CHECK(cfg("f.json")["max_level"] == 8);
  CHECK(cfg("e.json")["rel_tol"] == 1e-4);
  CHECK(cfg("g.json")["rel_tol"] == 1e-9);
  CHECK(cfg("g.json")["max_level"] == 8);
  {
    std::ofstream out(path);
    out << "rel_tol = fast\n";
  }
  CHECK(cli("--config " + path + " eval zeta --s 2").code == 2);
}

TEST_CASE("verify all: size, skipped exhibit, determinism") {
  const std::string a = std::string(CITER_TEST_TMP) + "/all_a.json", b = std::string(CITER_TEST_TMP) + "/all_b.json";
  const Run first = cli("--tol 1e-6 verify all --quiet --json " + a);
  const Run second = cli("--tol 1e-6 verify all --quiet --json " + b);
  CHECK(first.code == 0);
  CHECK(first.out.empty());
  const json report = json::parse(slurp(a));
  CHECK(report["results"].size() >= 40);
  CHECK(report["summary"]["fail"] == 0);
  int skipped = 0;
  for (const auto& r : report["results"])
    if (r["status"] == "skipped") {
      ++skipped;
      CHECK(r.contains("note"));
    }
  CHECK(skipped == 1);
  CHECK(slurp(a) == slurp(b));
  // timings are opt-in since they break bit-identity
  CHECK_FALSE(report["results"][0].contains("runtime_ms"));
  const Run timed = cli("--timings verify core --quiet --json " + a);
  CHECK(json::parse(slurp(a))["results"][0].contains("runtime_ms"));
  CHECK(timed.code == 0);
}
