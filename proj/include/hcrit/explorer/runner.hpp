#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hcrit/certify/certificate.hpp"
#include "hcrit/explorer/job.hpp"

namespace hcrit {

/// {p/q : |p| <= P, 1 <= q <= Q, gcd(p, q) = 1}, sorted ascending.
std::vector<Rational> farey_values(int P, int Q);
/// farey_values^2 minus the degenerate pairs with lambda0 lambda_inf = 1,
/// lexicographic in (lambda0, lambda_inf).
std::vector<std::pair<Rational, Rational>> quad_grid(int P, int Q);
/// Size of quad_grid(P, Q) from coprime-pair counts, without enumeration.
std::size_t quad_grid_count(int P, int Q);

enum class PcfStatus { Pcf, NotPcf, BudgetExhausted };
std::string to_string(PcfStatus s);

struct PcfResult {
  PcfStatus status = PcfStatus::BudgetExhausted;
  /// cycle: every critical orbit repeats; orbit-height: some critical orbit
  /// has certified positive canonical height; crit-height: the certified
  /// lower bound on hcrit is positive.
  std::string reason;
  /// Per critical set: preperiod + period when it cycles, -1 otherwise.
  std::vector<int> orbit_lengths;
  Json to_json() const;
};

/// `budget` caps the orbit length followed for each critical set.
PcfResult pcf_test_exact(const RatMap& f, int budget, mpfr_prec_t prec = 128);

struct TaskOutput {
  std::vector<Json> records;
  Json summary = Json::object();
  std::size_t pass = 0, violation = 0, inconclusive = 0, errors = 0;
  /// 0 complete and all pass, 2 any violation, 1 any per-point error,
  /// 3 inconclusive only.
  int exit_code() const;
};

/// Executes the job; per-point failures become error records.
/// Throws std::invalid_argument when the job does not validate.
TaskOutput execute(const JobSpec& job);

/// execute() and write JSONL: one header line (digest, job spec, version,
/// wall time), then the records, then a summary record. Everything after the
/// header depends only on the job and the library version. Writes the TSV
/// table when job.tsv is set.
int run(const JobSpec& job, std::ostream& out);

/// Evaluates fn(0..n-1) on `jobs` threads; results in index order. An
/// exception thrown by fn(i) becomes {"error": what} at position i.
std::vector<Json> parallel_map(std::size_t n, int jobs, const std::function<Json(std::size_t)>& fn);

}  // namespace hcrit
