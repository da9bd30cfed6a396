#include "doctest.h"

#include "cusp/cli.hpp"
#include "cusp/errors.hpp"
#include "cusp/selftest.hpp"

using namespace cusp;

namespace {

JobConfig job(const std::string& cmd, const std::string& ring) {
  JobConfig c;
  c.command = cmd;
  c.ring = ring;
  c.ring_given = true;
  return c;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("zeta command") {
  CommandResult res = run_command(job("zeta", "poly q=2"));
  CHECK(res.exit_code == 0);
  CHECK(contains(render(res.data, "table"), "(1-q^r)*zeta_A(1-r) = 1\n"));
  CHECK(res.data["Z_A"]["coefficients"].size() == 10);
  JobConfig e = job("zeta", "elliptic q=2 a=[0,0,1,0,0]");
  Json ej = run_command(e).data;
  CHECK(ej["classes"][0]["function"] == "(1-2*S+2*S^2)/(1-2*S)");
  CHECK(run_command(job("zeta", "shifted q=2 g=T^2+T+1")).data["Z_A"]["function"] == "(1+S)/(1-2*S)");
  JobConfig c = job("zeta", "poly q=2");
  c.x = "1/T";
  Json cj = run_command(c).data;
  CHECK(cj["coset"]["polar"]["-1"] == "1");
  CHECK(cj["coset"]["from"] == -1);
}

TEST_CASE("orders command") {
  JobConfig c = job("orders", "elliptic q=2 a=[0,0,1,0,0]");
  c.level = "P(0,0)";
  Json j = run_command(c).data;
  REQUIRE(j["cusps"].size() == 3);
  CHECK(j["cusps"][0]["order"] == "6");
  CHECK(j["cusps"][1]["order"] == "1");
  CHECK(j["cusps"][2]["order"] == "2");
  JobConfig p = job("orders", "poly q=2");
  CHECK(run_command(p).data["cusps"][0]["order"] == "1");
  p.mode = "division";
  CHECK_THROWS_AS(run_command(p), ParameterError);
  p.u1 = "1/T";
  CHECK(run_command(p).data["report"]["order"] == "1");
  p.mode = "aggregation";
  CommandResult a = run_command(p);
  CHECK(a.exit_code == 0);
  CHECK(a.data["sum_over_u"] == "2");
  p.mode = "bogus";
  CHECK_THROWS_AS(run_command(p), ParameterError);
}

TEST_CASE("matrix command") {
  Json p = run_command(job("matrix", "poly q=2")).data;
  CHECK(p["M"] == Json::array({Json::array({"1"})}));
  CHECK(p["det"] == "1");
  Json e = run_command(job("matrix", "elliptic q=2 a=[0,0,1,0,0]")).data;
  CHECK(e["M"].size() == 3);
  CHECK(e["det"] != "0");
  CHECK(e["frobenius"]["match"] == true);
  JobConfig m = job("matrix", "shifted q=2 g=T^2+T+1");
  m.mode = "mmatrix";
  m.prec = 4;
  CommandResult mr = run_command(m);
  CHECK(mr.exit_code == 0);
  CHECK(contains(render(mr.data, "table"), "strictly upper triangular mod π_∞: PASS"));
}

TEST_CASE("expand command") {
  JobConfig c = job("expand", "poly q=2");
  c.prec = 8;
  Json j = run_command(c).data;
  CHECK(j["verdict"] == "EQUAL");
  CHECK(j["first_difference"].is_null());
  CHECK(j["valuation"] == 1);
  CHECK(run_command(job("expand", "poly q=3")).data["verdict"] == "EQUAL");
  CHECK_THROWS_AS(run_command(job("expand", "elliptic q=2 a=[0,0,1,0,0]")), ParameterError);
  JobConfig r3 = job("expand", "poly q=2");
  r3.r = 3;
  CHECK_THROWS_AS(run_command(r3), ParameterError);
}

TEST_CASE("output is deterministic and JSON round-trips") {
  std::vector<JobConfig> jobs = {job("zeta", "elliptic q=3 a=[0,0,0,2,1]"), job("orders", "shifted q=3 g=T^2+1"),
                                 job("matrix", "elliptic q=2 a=[1,0,0,0,1]"), job("expand", "poly q=2")};
  JobConfig st;
  st.command = "selftest";
  st.suites = {"counting", "worked-examples"};
  jobs.push_back(st);
  for (auto& c : jobs) {
    CAPTURE(c.command);
    Json a = run_command(c).data, b = run_command(c).data;
    for (auto fmt : {"table", "json", "csv"}) CHECK(render(a, fmt) == render(b, fmt));
    CHECK(Json::parse(render(a, "json")) == a);
    CHECK(a["schema_version"] == kSchemaVersion);
  }
}

TEST_CASE("errors map to exit codes") {
  auto code = [](const JobConfig& c) {
    try {
      run_command(c);
    } catch (const std::exception& e) {
      return exit_code_for(e);
    }
    return 0;
  };
  CHECK(code(job("zeta", "poly q=6")) == 2);
  CHECK(code(job("nope", "poly q=2")) == 2);
  JobConfig f = job("zeta", "poly q=2");
  f.format = "xml";
  CHECK(code(f) == 2);
  CHECK(exit_code_for(ConsistencyError("x")) == 3);
  CHECK(exit_code_for(PrecisionError("x")) == 4);
}

TEST_CASE("summand counts") {
  auto P2 = Ring::polynomial(2), P3 = Ring::polynomial(3);
  Ideal T = P2->parse_ideal("T");
  CHECK(c_r1_formula(*P2, T, 2) == 3);
  CHECK(c_r1_brute(*P2, T, 2) == 3);
  Ideal T2 = P3->divisor(P3->parse_elem("T^2"));
  CHECK(c_r1_formula(*P3, T2, 2) == 36);
  CHECK(c_r1_brute(*P3, T2, 2) == 36);
  CHECK(primitive_count_mobius(*P3, T2, 2) == 72);
  CHECK_THROWS_AS(c_r1_brute(*Ring::parse("elliptic q=2 a=[0,0,1,0,0]"), Ideal{}, 2), ParameterError);
}

TEST_CASE("selftest selection") {
  SelftestReport r = run_selftest(kDefaultSeed, {"counting"});
  REQUIRE(r.suites.size() == 1);
  CHECK(r.ok());
  CHECK(r.passed() > 0);
  CHECK_THROWS_AS(run_selftest(kDefaultSeed, {"missing"}), ParameterError);
}
