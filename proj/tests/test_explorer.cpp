#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "hcrit/dynmap/operations.hpp"
#include "hcrit/explorer/runner.hpp"
#include "oracles.hpp"

using namespace hcrit;

namespace {

JobSpec job_of(std::initializer_list<std::pair<const char*, const char*>> kv) {
  JobSpec j;
  for (const auto& [k, v] : kv) j.set(k, v);
  return j;
}

std::string body_of(const std::string& jsonl) { return jsonl.substr(jsonl.find('\n') + 1); }

RatMap quadratic(long c) {
  return make_map({Rational(c), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
}

}  // namespace

TEST_CASE("grid enumeration matches a brute-force count") {
  for (int P = 0; P <= 4; ++P)
    for (int Q = 1; Q <= 3; ++Q) {
      std::set<std::pair<long, long>> vals;  // reduced (p, q)
      for (long q = 1; q <= Q; ++q)
        for (long p = -P; p <= P; ++p) {
          long g = oracle::gcd(p, q);
          if (g == 1) vals.insert({p, q});
        }
      std::size_t count = 0;
      for (auto [a, b] : vals)
        for (auto [c, d] : vals) count += !(a * c == b * d);
      CHECK(quad_grid(P, Q).size() == count);
      CHECK(quad_grid_count(P, Q) == count);
      CHECK(farey_values(P, Q).size() == vals.size());
    }
  // the acceptance grid: 11 values, pairs with product 1 are (1,1), (-1,-1), (2,1/2), (1/2,2), ...
  CHECK(quad_grid_count(3, 2) == 121 - 6);
}

TEST_CASE("job validation messages") {
  JobSpec j;
  j.set("task", "crit-height");
  CHECK_THROWS_WITH_AS(j.validate(), "crit-height needs a map (family, num/den or map-file)", std::invalid_argument);
  CHECK_THROWS_AS(j.set("task", "fly"), std::invalid_argument);
  CHECK_THROWS_AS(j.set("tol", "abc"), std::invalid_argument);
  CHECK_THROWS_AS(j.set("colour", "red"), std::invalid_argument);
  JobSpec big = job_of({{"task", "sweep-quad"}, {"grid-num-cap", "1000"}});
  CHECK_THROWS_AS(big.validate(), std::invalid_argument);
  JobSpec both = job_of({{"task", "crit-height"}, {"family", "pm"}, {"param.a", "1"}, {"num", "0,0,1"}, {"den", "1,0,0"}});
  CHECK_THROWS_AS(both.validate(), std::invalid_argument);
  JobSpec k8 = job_of({{"task", "per1-slice"}, {"lambda", "13"}, {"k", "8"}});
  CHECK_THROWS_AS(k8.validate(), std::invalid_argument);
  JobSpec degenerate = job_of({{"task", "crit-height"}, {"family", "milnor2"}, {"param.lambda0", "2"}, {"param.lambda_inf", "1/2"}});
  CHECK_THROWS_AS(degenerate.validate(), std::invalid_argument);
}

TEST_CASE("config files and flag precedence") {
  auto kv = parse_config("# sweep\ntask = sweep-quad\ngrid_num_cap = 3\nparam.lambda_inf = \"1/2\"\n\ntol=1e-4 # comment\n");
  REQUIRE(kv.size() == 4);
  CHECK(kv[1].first == "grid-num-cap");
  CHECK(kv[2].first == "param.lambda_inf");
  CHECK(kv[2].second == "1/2");
  JobSpec j;
  for (const auto& [k, v] : kv) j.set(k, v);
  j.set("tol", "1e-3");  // a flag applied after the file wins
  CHECK(j.tol == 1e-3);
  CHECK(j.grid_num_cap == 3);
  CHECK_THROWS_AS(parse_config("novalue\n"), std::invalid_argument);
}

TEST_CASE("map sources") {
  CHECK(map_from_json(Json::parse(R"({"family":"milnor2","params":{"lambda0":"2","lambda_inf":"3"}})")) ==
        RatMap::milnor(Rational(2), Rational(3)));
  CHECK(map_from_json(Json::parse(R"({"num":["0","2","1"],"den":["1","3","0"]})")) ==
        RatMap::milnor(Rational(2), Rational(3)));
  CHECK(family_map("quadratic", {{"c", "-1"}}) == quadratic(-1));
  CHECK(family_map("pm", {{"a", "1/2"}}) == RatMap::plus_minus(Rational(1, 2)));
  CHECK_THROWS_AS(family_map("cubic", {}), std::invalid_argument);
  CHECK_THROWS_AS(family_map("milnor2", {{"lambda0", "1"}}), std::invalid_argument);
}

TEST_CASE("digest depends on results-affecting fields only") {
  JobSpec a = job_of({{"task", "sweep-quad"}});
  JobSpec b = a;
  b.jobs = 4;
  b.out = "x.jsonl";
  CHECK(a.digest() == b.digest());
  b.tol = 1e-4;
  CHECK(a.digest() != b.digest());
  CHECK(a.digest().size() == 16);
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("exact PCF test") {
  CHECK(pcf_test_exact(quadratic(0), 16).status == PcfStatus::Pcf);
  CHECK(pcf_test_exact(quadratic(-1), 16).status == PcfStatus::Pcf);
  CHECK(pcf_test_exact(quadratic(-2), 16).status == PcfStatus::Pcf);
  PcfResult r = pcf_test_exact(quadratic(2), 16);
  CHECK(r.status == PcfStatus::NotPcf);
  CHECK(r.reason == "orbit-height");
  // budgets never flip a decided answer
  for (long c : {-2L, -1L, 0L, 1L, 2L}) {
    std::set<PcfStatus> seen;
    for (int budget : {1, 2, 4, 16}) seen.insert(pcf_test_exact(quadratic(c), budget).status);
    CHECK_FALSE((seen.count(PcfStatus::Pcf) && seen.count(PcfStatus::NotPcf)));
  }
}

TEST_CASE("height task") {
  TaskOutput out = execute(job_of({{"task", "height"}, {"point", "[3:6]"}}));
  REQUIRE(out.records.size() == 1);
  RBound h = rbound_from_json(out.records[0]["result"]["value"]);
  CHECK(h.mid_d() == doctest::Approx(std::log(2.0)));
  CHECK(out.exit_code() == 0);
}

TEST_CASE("spectrum task") {
  TaskOutput out = execute(job_of({{"task", "spectrum"}, {"num", "0,0,1"}, {"den", "1,0,0"}}));
  const Json& r = out.records[0]["result"];
  CHECK(r["polynomial"] == "L^3 - 2*L^2");
  CHECK(rbound_from_json(r["height_sum"]["interval"]).mid_d() == doctest::Approx(std::log(2.0)));
  TaskOutput two = execute(job_of({{"task", "spectrum"}, {"family", "milnor2"}, {"param.lambda0", "2"},
                                   {"param.lambda_inf", "3"}, {"n", "2"}}));
  CHECK(two.records[0]["result"]["degree"] == 5);
}

TEST_CASE("sweep records, summary and determinism") {
  JobSpec j = job_of({{"task", "sweep-quad"}, {"grid-num-cap", "1"}, {"tol", "1e-3"}});
  std::ostringstream a, b;
  CHECK(run(j, a) == 0);
  j.jobs = 2;
  CHECK(run(j, b) == 0);
  CHECK(body_of(a.str()) == body_of(b.str()));
  TaskOutput out = execute(j);
  CHECK(out.records.size() == quad_grid_count(1, 1));
  CHECK(out.violation == 0);
  CHECK(out.inconclusive == 0);
  bool has_sq = false;
  for (const auto& hit : out.summary["pcf_hits"]) has_sq |= hit["lambda0"] == "0" && hit["lambda_inf"] == "0";
  CHECK(has_sq);
  CHECK_FALSE(out.summary["min_positive_hcrit"].is_null());
}

TEST_CASE("per-point failures stay local") {
  std::vector<Json> r = parallel_map(4, 2, [](std::size_t i) -> Json {
    if (i == 2) throw std::runtime_error("boom");
    return Json{{"i", i}};
  });
  CHECK(r[2]["error"] == "boom");
  CHECK(r[3]["i"] == 3);
}

TEST_CASE("per1 slice modes") {
  TaskOutput ratio = execute(job_of({{"task", "per1-slice"}, {"lambda", "13"}, {"grid-num-cap", "1"}, {"tol", "1e-3"}}));
  CHECK(ratio.summary["mode"] == "ratio");
  CHECK(ratio.summary["grid_min_respects_floor"] == true);
  CHECK(ratio.violation == 0);
  TaskOutput abs = execute(job_of({{"task", "per1-slice"}, {"lambda", "1"}, {"grid-num-cap", "1"}, {"tol", "1e-3"}}));
  CHECK(abs.summary["mode"] == "absolute");
  CHECK_FALSE(abs.records[0]["result"].contains("ratio"));
}

TEST_CASE("verify dispatch") {
  TaskOutput g = execute(job_of({{"task", "verify"}, {"statement", "greens-lower"}, {"num", "0,3,2"},
                                 {"den", "1,5,0"}, {"place", "all"}, {"samples", "2"}, {"seed", "4"}}));
  CHECK(g.records.size() == 10);
  CHECK(g.violation == 0);
  TaskOutput q = execute(job_of({{"task", "verify"}, {"statement", "theorem-quad"}, {"tol", "1e-3"}}));
  CHECK(q.records.size() == quad_grid_count(2, 1));
  CHECK(q.pass == q.records.size());
  CHECK_THROWS_AS(execute(job_of({{"task", "verify"}, {"statement", "nope"}, {"family", "pm"}, {"param.a", "1"}})),
                  std::invalid_argument);
}
