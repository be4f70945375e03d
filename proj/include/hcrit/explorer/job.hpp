#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hcrit/certify/certificate.hpp"
#include "hcrit/dynmap/rat_map.hpp"

namespace hcrit {

enum class Task { Height, CanonicalHeight, Green, CritHeight, Verify, SweepQuad, Per1Slice, PcfSearch, Spectrum };

std::string to_string(Task t);
/// Throws std::invalid_argument listing the valid task names.
Task parse_task(const std::string& s);

/// Hard limits applied by JobSpec::validate.
struct JobLimits {
  static constexpr int kMaxGridNum = 64;
  static constexpr int kMaxGridDen = 32;
  static constexpr long kMinPrec = 32;
  static constexpr long kMaxPrec = 8192;
  static constexpr int kMaxItersCap = 4096;
  static constexpr int kMaxJobs = 256;
  static constexpr int kMaxK = 64;
};

struct JobSpec {
  Task task = Task::CritHeight;

  // map source: at most one of family, num/den, map_file
  std::string family;                         // milnor2, pm, quadratic
  std::map<std::string, std::string> params;  // family parameters
  std::vector<std::string> num, den;          // coefficients in z, ascending
  std::string map_file;

  std::string point;          // "p/q", "[x:y]" or "inf"
  std::string place = "inf";  // "inf", a prime, or "all" (green only)
  std::string statement;      // verify only
  std::string lambda;         // per1-slice multiplier

  long prec_bits = 128;
  double tol = 1e-6;
  int k = 10;
  int n = 1;
  int kmax = 6;
  int iters_cap = 64;
  int grid_num_cap = 2;
  int grid_den_cap = 1;
  int samples = 5;
  std::uint64_t seed = 0;

  std::string out;  // empty: stdout
  std::string tsv;  // optional summary table
  int jobs = 1;

  /// Applies one key=value setting; keys are the CLI flag names without the
  /// leading dashes (prec-bits, grid-num-cap, ...). Family parameters are
  /// given as param.NAME. Throws std::invalid_argument on unknown keys or
  /// malformed values.
  void set(const std::string& key, const std::string& value);

  /// Throws std::invalid_argument with an actionable message.
  void validate() const;

  bool has_map() const { return !family.empty() || !num.empty() || !map_file.empty(); }
  /// Throws if no map source is given.
  RatMap resolve_map() const;

  /// Every field that affects results; excludes out, tsv and jobs.
  Json to_json() const;
  /// FNV-1a 64 of to_json() and the library version, as 16 hex digits.
  std::string digest() const;
};

/// Flat key=value lines; '#' starts a comment; blank lines ignored.
/// Returns the settings in file order. Throws std::invalid_argument naming
/// the offending line.
std::vector<std::pair<std::string, std::string>> parse_config(const std::string& text);
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// Builds a map from a family name and its parameters.
/// milnor2: lambda0, lambda_inf; pm: a; quadratic: c (z^2 + c).
RatMap family_map(const std::string& family, const std::map<std::string, std::string>& params);

/// {"family": ..., "params": {...}} or {"num": [...], "den": [...]}.
RatMap map_from_json(const Json& j);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace hcrit
