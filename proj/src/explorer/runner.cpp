#include "hcrit/explorer/runner.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "hcrit/certify/global_checks.hpp"
#include "hcrit/certify/local_checks.hpp"
#include "hcrit/exactnum/complex_roots.hpp"
#include "hcrit/version.hpp"

namespace hcrit {

namespace {

std::size_t coprime_count(int P, int q) {
  std::size_t c = 0;
  for (int p = 1; p <= P; ++p) c += std::gcd(p, q) == 1;
  return c;
}

HeightOptions options_of(const JobSpec& job) {
  HeightOptions opt;
  opt.prec = job.prec_bits;
  return opt;
}

Json certs_json(const std::vector<Certificate>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(c.to_json());
  return a;
}

Json enclosure(const RBound& b) {
  return Json{{"interval", rbound_to_json(b)}, {"approx", b.to_string(12)}};
}

Json height_record(const RBound& v, HeightKind kind, Json provenance) {
  return HeightValue{v, kind, std::move(provenance)}.to_json();
}

std::vector<Place> places_of(const std::string& place) {
  if (place == "all")
    return {Place::archimedean(), Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7)};
  return {Place::parse(place)};
}

Rational affine_point(const std::string& text) {
  ProjPoint p = ProjPoint::parse(text);
  if (p.y() == 0) throw std::invalid_argument("point must be finite here");
  return p.affine();
}

const Milnor2Form& milnor_tag(const RatMap& f, NormalFormTag& tag) {
  tag = f.tag();
  auto* m = std::get_if<Milnor2Form>(&tag);
  if (!m) throw std::invalid_argument("statement needs a map in Milnor normal form (family milnor2)");
  return *m;
}

// A record for one grid point; failures are kept local to the point.
Json point_record(Json input, const std::function<Json()>& body) {
  Json r{{"input", std::move(input)}};
  try {
    r["result"] = body();
  } catch (const std::exception& e) {
    r["error"] = e.what();
  }
  return r;
}

void tally(TaskOutput& out, const Json& j) {
  if (j.is_object()) {
    if (j.contains("verdict") && j.contains("statement")) {
      auto v = parse_verdict(j["verdict"].get<std::string>());
      (v == Verdict::Pass ? out.pass : v == Verdict::Violation ? out.violation : out.inconclusive)++;
      return;
    }
    if (j.contains("error") && j["error"].is_string()) ++out.errors;
    for (const auto& [key, value] : j.items())
      if (key != "witness") tally(out, value);
  } else if (j.is_array()) {
    for (const auto& x : j) tally(out, x);
  }
}

Json quad_inputs(const Rational& l0, const Rational& linf) {
  return Json{{"lambda0", to_string(l0)}, {"lambda_inf", to_string(linf)}};
}

TaskOutput finish(std::vector<Json> records, Json summary) {
  TaskOutput out;
  for (std::size_t i = 0; i < records.size(); ++i) tally(out, records[i]);
  out.records = std::move(records);
  out.summary = std::move(summary);
  return out;
}

std::vector<std::pair<Rational, Rational>> grid_or_single(const JobSpec& job) {
  if (!job.has_map()) return quad_grid(job.grid_num_cap, job.grid_den_cap);
  NormalFormTag tag;
  const auto& m = milnor_tag(job.resolve_map(), tag);
  return {{m.lambda0, m.lambda_inf}};
}

TaskOutput run_verify(const JobSpec& job) {
  const auto opt = options_of(job);
  const auto prec = job.prec_bits;
  const std::string& st = job.statement;

  if (st == "theorem-quad" || st == "quad-k") {
    auto grid = grid_or_single(job);
    auto records = parallel_map(grid.size(), job.jobs, [&](std::size_t i) {
      auto [l0, linf] = grid[i];
      return point_record(quad_inputs(l0, linf), [&] {
        if (st == "theorem-quad") return Json{{"certificates", certs_json({check_theorem_quad(l0, linf, job.tol, opt)})}};
        auto q = check_quad_k(l0, linf, job.k, job.tol, opt);
        return Json{{"certificates", certs_json({q.quad, q.quadbound, q.swap})}};
      });
    });
    return finish(std::move(records), Json{{"statement", st}, {"points", grid.size()}});
  }

  if (st == "kbound") {
    Rational lambda = parse_rational(job.lambda.empty() ? "0" : job.lambda);
    RBound hc = job.has_map() ? critical_height(job.resolve_map(), job.tol, opt) : RBound();
    Json input{{"lambda", to_string(lambda)}, {"k", job.k}};
    return finish({point_record(input, [&] { return Json{{"certificates", certs_json({eval_kbound(lambda, job.k, hc, prec)})}}; })},
                  Json{{"statement", st}});
  }

  RatMap f = job.resolve_map();
  Json input{{"map", f.to_string()}};
  std::vector<Json> records;
  auto one = [&](Json in, const std::function<std::vector<Certificate>()>& body) {
    records.push_back(point_record(std::move(in), [&] { return Json{{"certificates", certs_json(body())}}; }));
  };
  auto with_place = [&](const Place& v) {
    Json in = input;
    in["place"] = v.to_string();
    return in;
  };

  if (st == "theorem-geom") {
    one(input, [&] { return std::vector{check_theorem_geom(f, job.tol, opt)}; });
  } else if (st == "fixed-zero-global") {
    one(input, [&] { return std::vector{check_fixedzero_global(f, job.k, job.tol, opt)}; });
  } else if (st == "main-global") {
    one(input, [&] { return std::vector{check_mainglobal(f, job.k, job.tol, opt)}; });
  } else if (st == "crit-iterate") {
    one(input, [&] { return std::vector{crit_height_iterate_identity_check(f, job.n, job.tol, opt)}; });
  } else if (st == "greens-lower") {
    std::vector<Rational> pts;
    if (!job.point.empty()) {
      pts.push_back(affine_point(job.point));
    } else {
      std::mt19937_64 rng(job.seed);
      std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
      for (int i = 0; i < job.samples; ++i) pts.push_back(ratio(Integer(num(rng)), Integer(den(rng))));
    }
    for (const auto& v : places_of(job.place))
      for (const auto& z : pts) {
        Json in = with_place(v);
        in["point"] = to_string(z);
        one(in, [&] { return std::vector{check_greens_lower(f, z, v, job.tol, prec)}; });
      }
  } else if (st == "roots") {
    for (const auto& v : places_of(job.place))
      for (const auto& s : critical_divisor(f)) {
        if (s.at_infinity()) continue;
        Json in = with_place(v);
        in["polynomial"] = s.minpoly().to_string();
        one(in, [&] {
          auto pair = check_root_coeff_bounds(s.minpoly(), v, prec);
          return std::vector{pair.upper, pair.lower};
        });
      }
  } else if (st == "attraction" || st == "sa-branch") {
    for (const auto& v : places_of(job.place))
      one(with_place(v), [&] {
        return std::vector{st == "attraction" ? check_attraction(f, v, job.kmax, prec) : check_sabranch(f, v, job.kmax, prec)};
      });
  } else if (st == "key" || st == "maincase" || st == "sa-est") {
    for (const auto& v : places_of(job.place)) {
      Json in = with_place(v);
      in["k"] = job.k;
      one(in, [&] {
        if (st == "key") return std::vector{check_key(f, job.k, v, job.tol, prec)};
        if (st == "maincase") return std::vector{check_maincase(f, job.k, v, job.tol, prec)};
        return std::vector{check_saest(f, job.k, v, job.tol, prec)};
      });
    }
  } else {
    throw std::invalid_argument(
        "unknown statement '" + st +
        "' (valid: theorem-quad, quad-k, theorem-geom, fixed-zero-global, main-global, crit-iterate, kbound, "
        "greens-lower, roots, attraction, key, maincase, sa-branch, sa-est)");
  }
  return finish(std::move(records), Json{{"statement", st}});
}

TaskOutput run_sweep(const JobSpec& job) {
  const auto opt = options_of(job);
  auto grid = quad_grid(job.grid_num_cap, job.grid_den_cap);
  auto records = parallel_map(grid.size(), job.jobs, [&](std::size_t i) {
    auto [l0, linf] = grid[i];
    return point_record(quad_inputs(l0, linf), [&] {
      Certificate c = check_theorem_quad(l0, linf, job.tol, opt);
      Json r{{"hcrit", enclosure(c.lhs)},
             {"h_P2", enclosure(weil_height({Rational(1), l0, linf}, job.prec_bits))},
             {"certificates", certs_json({c})}};
      if (c.lhs.contains_zero())
        r["pcf"] = pcf_test_exact(RatMap::milnor(l0, linf), job.iters_cap, job.prec_bits).to_json();
      return r;
    });
  });

  Json hits = Json::array();
  Json min_pos = nullptr;
  double best = 0;
  for (const auto& r : records) {
    if (!r.contains("result")) continue;
    const Json& res = r["result"];
    if (res.contains("pcf") && res["pcf"]["status"] == "pcf") hits.push_back(r["input"]);
    RBound h = rbound_from_json(res["hcrit"]["interval"]);
    if (h.certainly_positive() && (min_pos.is_null() || h.lo_d() < best)) {
      best = h.lo_d();
      min_pos = Json{{"input", r["input"]}, {"hcrit", res["hcrit"]}};
    }
  }
  Json summary{{"points", grid.size()},
               {"expected_points", quad_grid_count(job.grid_num_cap, job.grid_den_cap)},
               {"min_positive_hcrit", min_pos},
               {"pcf_hits", hits}};
  return finish(std::move(records), std::move(summary));
}

TaskOutput run_per1(const JobSpec& job) {
  const auto opt = options_of(job);
  const auto prec = job.prec_bits;
  Rational lambda = parse_rational(job.lambda);
  RBound h_lambda = height_of(lambda, prec);
  bool ratio_mode = h_lambda.certainly_positive();

  std::vector<Rational> slice;
  for (const auto& x : farey_values(job.grid_num_cap, job.grid_den_cap))
    if (lambda * x != 1) slice.push_back(x);

  auto records = parallel_map(slice.size(), job.jobs, [&](std::size_t i) {
    return point_record(quad_inputs(lambda, slice[i]), [&] {
      RBound hc = critical_height(RatMap::milnor(lambda, slice[i]), job.tol, opt);
      Json r{{"hcrit", enclosure(hc)}};
      if (ratio_mode) r["ratio"] = enclosure(hc / h_lambda);
      r["certificates"] = certs_json({eval_kbound(lambda, job.k, hc, prec)});
      return r;
    });
  });

  Json summary{{"lambda", to_string(lambda)},
               {"h_lambda", enclosure(h_lambda)},
               {"mode", ratio_mode ? "ratio" : "absolute"},
               {"points", slice.size()}};
  // smallest lower endpoint over the slice, in the reported quantity
  const char* field = ratio_mode ? "ratio" : "hcrit";
  Json min_rec = nullptr;
  RBound min_hc;
  for (const auto& r : records) {
    if (!r.contains("result")) continue;
    RBound v = rbound_from_json(r["result"][field]["interval"]);
    if (min_rec.is_null() || v.lo_d() < rbound_from_json(min_rec[field]["interval"]).lo_d()) {
      min_rec = Json{{"input", r["input"]}, {field, r["result"][field]}};
      min_hc = rbound_from_json(r["result"]["hcrit"]["interval"]);
    }
  }
  summary["grid_min"] = min_rec;
  if (job.k > 8) {
    // hcrit >= (k (h(lambda) - log 12) - k (B(k, 0) - log 12)) / (2^(k+1) (1 + 2/(k-8)))
    RBound log12 = corollary_threshold(prec);
    RBound a = (kbound_height_bound(job.k, RBound(), prec) - log12) * Rational(job.k);
    Rational growth = Rational(Integer(1) << (job.k + 1)) * (Rational(1) + ratio(2, job.k - 8));
    RBound floor = ((h_lambda - log12) * Rational(job.k) - a) / RBound::from_rational(growth, prec);
    summary["hcrit_floor"] = enclosure(floor);
    if (!min_rec.is_null()) summary["grid_min_respects_floor"] = !(min_hc.hi() < floor.lo());
  }
  return finish(std::move(records), std::move(summary));
}

TaskOutput run_pcf(const JobSpec& job) {
  if (job.has_map()) {
    RatMap f = job.resolve_map();
    return finish({point_record(Json{{"map", f.to_string()}},
                                [&] { return Json{{"pcf", pcf_test_exact(f, job.iters_cap, job.prec_bits).to_json()}}; })},
                  Json::object());
  }
  auto grid = quad_grid(job.grid_num_cap, job.grid_den_cap);
  auto records = parallel_map(grid.size(), job.jobs, [&](std::size_t i) {
    auto [l0, linf] = grid[i];
    return point_record(quad_inputs(l0, linf), [&] {
      return Json{{"pcf", pcf_test_exact(RatMap::milnor(l0, linf), job.iters_cap, job.prec_bits).to_json()}};
    });
  });
  Json hits = Json::array();
  std::size_t exhausted = 0;
  for (const auto& r : records) {
    if (!r.contains("result")) continue;
    const auto& s = r["result"]["pcf"]["status"];
    if (s == "pcf") hits.push_back(r["input"]);
    exhausted += s == "budget-exhausted";
  }
  return finish(std::move(records), Json{{"points", grid.size()}, {"pcf_hits", hits}, {"budget_exhausted", exhausted}});
}

TaskOutput run_single(const JobSpec& job) {
  const auto opt = options_of(job);
  const auto prec = job.prec_bits;
  Json input = Json::object();
  std::function<Json()> body;
  switch (job.task) {
    case Task::Height:
      input["point"] = job.point;
      body = [&] {
        ProjPoint p = ProjPoint::parse(job.point);
        return height_record(weil_height(p, prec), HeightKind::Weil, Json{{"point", p.to_string()}});
      };
      break;
    case Task::CanonicalHeight:
      input = Json{{"map", job.resolve_map().to_string()}, {"point", job.point}};
      body = [&] {
        ProjPoint p = ProjPoint::parse(job.point);
        return height_record(canonical_height(job.resolve_map(), p, job.tol, opt), HeightKind::Canonical,
                             Json{{"point", p.to_string()}});
      };
      break;
    case Task::Green:
      input = Json{{"map", job.resolve_map().to_string()}, {"point", job.point}, {"place", job.place}};
      body = [&] {
        RatMap f = job.resolve_map();
        Rational z = affine_point(job.point);
        if (job.place == "all")
          return height_record(green_global_sum(f, IntPoly::linear_root(z).homogenize(1), job.tol, prec),
                               HeightKind::GreenLocal, Json{{"sum_over_places", true}});
        return green_local(f, z, Place::parse(job.place), job.tol, prec).to_json(prec);
      };
      break;
    case Task::CritHeight:
      input["map"] = job.resolve_map().to_string();
      body = [&] {
        return height_record(critical_height(job.resolve_map(), job.tol, opt), HeightKind::Critical, Json::object());
      };
      break;
    case Task::Spectrum:
      input = Json{{"map", job.resolve_map().to_string()}, {"n", job.n}};
      body = [&] {
        RatMap f = job.resolve_map();
        IntPoly poly = multiplier_char_poly(f, job.n, job.iters_cap);
        Integer expected = 1;
        for (int i = 0; i < job.n; ++i) expected *= f.degree();
        return Json{{"polynomial", poly.to_string("L")},
                    {"degree", poly.degree()},
                    {"expected_degree", to_string(Integer(expected + 1))},
                    {"height_sum", enclosure(roots_height_sum(poly, prec))}};
      };
      break;
    default: throw std::logic_error("not a single-record task");
  }
  return finish({point_record(input, body)}, Json::object());
}

void write_tsv(const std::string& path, const TaskOutput& out) {
  std::ofstream tsv(path);
  if (!tsv) throw std::runtime_error("cannot write " + path);
  tsv << "index\tinput\thcrit_lo\thcrit_hi\tverdicts\terror\n";
  for (std::size_t i = 0; i < out.records.size(); ++i) {
    const Json& r = out.records[i];
    std::string input;
    for (const auto& [k, v] : r["input"].items())
      input += (input.empty() ? "" : " ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    std::string lo, hi, verdicts, err;
    if (r.contains("result")) {
      const Json& res = r["result"];
      if (res.contains("hcrit")) {
        RBound h = rbound_from_json(res["hcrit"]["interval"]);
        lo = h.lo().to_string(12), hi = h.hi().to_string(12);
      }
      if (res.contains("certificates"))
        for (const auto& c : res["certificates"])
          verdicts += (verdicts.empty() ? "" : ",") + c["verdict"].get<std::string>();
    }
    if (r.contains("error")) err = r["error"].get<std::string>();
    tsv << i << '\t' << input << '\t' << lo << '\t' << hi << '\t' << verdicts << '\t' << err << '\n';
  }
}

}  // namespace

std::vector<Rational> farey_values(int P, int Q) {
  std::set<Rational> vals;
  for (int q = 1; q <= Q; ++q)
    for (int p = -P; p <= P; ++p)
      if (std::gcd(p, q) == 1) vals.insert(ratio(Integer(p), Integer(q)));
  return {vals.begin(), vals.end()};
}

std::vector<std::pair<Rational, Rational>> quad_grid(int P, int Q) {
  auto vals = farey_values(P, Q);
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& a : vals)
    for (const auto& b : vals)
      if (a * b != 1) out.emplace_back(a, b);
  return out;
}

std::size_t quad_grid_count(int P, int Q) {
  std::size_t values = 1;
  for (int q = 1; q <= Q; ++q) values += 2 * coprime_count(P, q);
  // lambda0 = p/q and lambda_inf = q/p both in the grid: p, q <= min(P, Q), either sign
  int m = std::min(P, Q);
  std::size_t degenerate = 0;
  for (int q = 1; q <= m; ++q) degenerate += 2 * coprime_count(m, q);
  return values * values - degenerate;
}

std::string to_string(PcfStatus s) {
  switch (s) {
    case PcfStatus::Pcf: return "pcf";
    case PcfStatus::NotPcf: return "not-pcf";
    case PcfStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

Json PcfResult::to_json() const {
  return Json{{"status", to_string(status)}, {"reason", reason}, {"orbit_lengths", orbit_lengths}};
}

PcfResult pcf_test_exact(const RatMap& f, int budget, mpfr_prec_t prec) {
  constexpr std::size_t kMaxBits = 1 << 16;
  const int d = f.degree();
  StepSlack slack = one_step_slack(f, prec);
  PcfResult res;
  bool all_cycle = true;
  for (const auto& s : critical_divisor(f)) {
    std::set<std::vector<Integer>> seen;
    IntPoly cur = s.form().normalized();
    int length = -1;
    for (int step = 0; step <= budget; ++step) {
      if (!seen.insert(cur.coeffs()).second) {
        length = step;
        break;
      }
      // h(f^n P) - size c_low / (d - 1) > 0 forces hhat(P) > 0
      RBound lower = log_mahler_coeff_bounds(cur, prec) - slack.c_low * ratio(s.size(), d - 1);
      if (lower.certainly_positive()) {
        res.status = PcfStatus::NotPcf;
        res.reason = "orbit-height";
        res.orbit_lengths.push_back(-1);
        return res;
      }
      if (step == budget || bit_length(max_abs_coeff(cur)) > kMaxBits) break;
      cur = pushforward_form(f, cur).normalized();
    }
    res.orbit_lengths.push_back(length);
    all_cycle = all_cycle && length >= 0;
  }
  if (all_cycle) {
    res.status = PcfStatus::Pcf;
    res.reason = "cycle";
    return res;
  }
  HeightOptions opt;
  opt.prec = prec;
  try {
    if (critical_height(f, 1e-3, opt).certainly_positive()) {
      res.status = PcfStatus::NotPcf;
      res.reason = "crit-height";
      return res;
    }
  } catch (const std::exception&) {
    // too costly at this tolerance; leave undecided
  }
  res.reason = "budget";
  return res;
}

int TaskOutput::exit_code() const {
  if (violation) return 2;
  if (errors) return 1;
  if (inconclusive) return 3;
  return 0;
}

std::vector<Json> parallel_map(std::size_t n, int jobs, const std::function<Json(std::size_t)>& fn) {
  std::vector<Json> out(n);
  auto guarded = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i] = Json{{"error", e.what()}};
    }
  };
  // MPFR caches constants per thread only when built with TLS
  if (jobs <= 1 || n <= 1 || !mpfr_buildopt_tls_p()) {
    for (std::size_t i = 0; i < n; ++i) guarded(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs && static_cast<std::size_t>(t) < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) guarded(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

TaskOutput execute(const JobSpec& job) {
  job.validate();
  switch (job.task) {
    case Task::Verify: return run_verify(job);
    case Task::SweepQuad: return run_sweep(job);
    case Task::Per1Slice: return run_per1(job);
    case Task::PcfSearch: return run_pcf(job);
    default: return run_single(job);
  }
}

int run(const JobSpec& job, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  TaskOutput res = execute(job);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string digest = job.digest();

  out << Json{{"type", "header"}, {"job", digest}, {"version", kVersion}, {"job_spec", job.to_json()},
              {"wall_time_s", wall}, {"jobs", job.jobs}}
             .dump()
      << '\n';
  for (std::size_t i = 0; i < res.records.size(); ++i) {
    Json rec{{"type", "record"}, {"job", digest}, {"version", kVersion}, {"task", to_string(job.task)}, {"index", i}};
    for (const auto& [k, v] : res.records[i].items()) rec[k] = v;
    out << rec.dump() << '\n';
  }
  out << Json{{"type", "summary"},       {"job", digest},
              {"version", kVersion},     {"records", res.records.size()},
              {"pass", res.pass},        {"violation", res.violation},
              {"inconclusive", res.inconclusive}, {"errors", res.errors},
              {"exit_code", res.exit_code()},     {"summary", res.summary}}
             .dump()
      << '\n';
  out.flush();
  if (!job.tsv.empty()) write_tsv(job.tsv, res);
  return res.exit_code();
}

}  // namespace hcrit
