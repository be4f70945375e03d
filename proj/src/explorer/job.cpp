#include "hcrit/explorer/job.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hcrit/dynmap/operations.hpp"
#include "hcrit/dynmap/proj_point.hpp"
#include "hcrit/exactnum/place.hpp"
#include "hcrit/version.hpp"

namespace hcrit {

namespace {

const std::vector<std::pair<Task, std::string>>& task_names() {
  static const std::vector<std::pair<Task, std::string>> names = {
      {Task::Height, "height"},         {Task::CanonicalHeight, "canonical-height"},
      {Task::Green, "green"},           {Task::CritHeight, "crit-height"},
      {Task::Verify, "verify"},         {Task::SweepQuad, "sweep-quad"},
      {Task::Per1Slice, "per1-slice"},  {Task::PcfSearch, "pcf-search"},
      {Task::Spectrum, "spectrum"}};
  return names;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  auto v = trim(value);
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw std::invalid_argument(key + ": expected a number, got '" + value + "'");
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  auto v = trim(value);
  try {
    std::size_t used = 0;
    double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument(key + ": expected a number, got '" + value + "'");
  }
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string v = trim(value);
  if (!v.empty() && v.front() == '[' && v.back() == ']') v = v.substr(1, v.size() - 2);
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.size() >= 2 && item.front() == '"' && item.back() == '"') item = item.substr(1, item.size() - 2);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Rational param(const std::map<std::string, std::string>& params, const std::string& family, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw std::invalid_argument("family " + family + " needs parameter " + name);
  return parse_rational(it->second);
}

std::vector<Rational> parse_coeffs(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

void check_range(const std::string& key, long v, long lo, long hi) {
  if (v < lo || v > hi)
    throw std::invalid_argument(key + " = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
}

}  // namespace

std::string to_string(Task t) {
  for (const auto& [task, name] : task_names())
    if (task == t) return name;
  return "?";
}

Task parse_task(const std::string& s) {
  std::string valid;
  for (const auto& [task, name] : task_names()) {
    if (name == s) return task;
    valid += (valid.empty() ? "" : ", ") + name;
  }
  throw std::invalid_argument("unknown task '" + s + "' (valid: " + valid + ")");
}

void JobSpec::set(const std::string& key, const std::string& value) {
  if (key == "task") task = parse_task(trim(value));
  else if (key == "family") family = trim(value);
  else if (key.rfind("param.", 0) == 0) params[key.substr(6)] = trim(value);
  else if (key == "num") num = split_list(value);
  else if (key == "den") den = split_list(value);
  else if (key == "map-file") map_file = trim(value);
  else if (key == "point") point = trim(value);
  else if (key == "place") place = trim(value);
  else if (key == "statement") statement = trim(value);
  else if (key == "lambda") lambda = trim(value);
  else if (key == "prec-bits") prec_bits = parse_number<long>(key, value);
  else if (key == "tol") tol = parse_double(key, value);
  else if (key == "k") k = parse_number<int>(key, value);
  else if (key == "n") n = parse_number<int>(key, value);
  else if (key == "kmax") kmax = parse_number<int>(key, value);
  else if (key == "iters-cap") iters_cap = parse_number<int>(key, value);
  else if (key == "grid-num-cap") grid_num_cap = parse_number<int>(key, value);
  else if (key == "grid-den-cap") grid_den_cap = parse_number<int>(key, value);
  else if (key == "samples") samples = parse_number<int>(key, value);
  else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
  else if (key == "out") out = trim(value);
  else if (key == "tsv") tsv = trim(value);
  else if (key == "jobs") jobs = parse_number<int>(key, value);
  else throw std::invalid_argument("unknown setting '" + key + "'");
}

void JobSpec::validate() const {
  check_range("prec-bits", prec_bits, JobLimits::kMinPrec, JobLimits::kMaxPrec);
  if (!(tol > 0 && tol < 1)) throw std::invalid_argument("tol must lie in (0, 1)");
  check_range("k", k, 1, JobLimits::kMaxK);
  check_range("n", n, 1, 16);
  check_range("kmax", kmax, 1, JobLimits::kMaxK);
  check_range("iters-cap", iters_cap, 1, JobLimits::kMaxItersCap);
  check_range("grid-num-cap", grid_num_cap, 0, JobLimits::kMaxGridNum);
  check_range("grid-den-cap", grid_den_cap, 1, JobLimits::kMaxGridDen);
  check_range("samples", samples, 1, 10000);
  check_range("jobs", jobs, 1, JobLimits::kMaxJobs);

  int sources = !family.empty() + (!num.empty() || !den.empty()) + !map_file.empty();
  if (sources > 1) throw std::invalid_argument("give only one of family, num/den, map-file");
  if (!num.empty() && num.size() != den.size())
    throw std::invalid_argument("num and den need the same length (d + 1 coefficients each)");

  auto need_map = [&](const char* what) {
    if (!has_map()) throw std::invalid_argument(std::string(what) + " needs a map (family, num/den or map-file)");
  };
  auto need_point = [&](const char* what) {
    if (point.empty()) throw std::invalid_argument(std::string(what) + " needs --point");
    ProjPoint::parse(point);
  };
  switch (task) {
    case Task::Height: need_point("height"); break;
    case Task::CanonicalHeight:
      need_map("canonical-height");
      need_point("canonical-height");
      break;
    case Task::Green:
      need_map("green");
      need_point("green");
      if (place != "all") Place::parse(place);
      break;
    case Task::CritHeight: need_map("crit-height"); break;
    case Task::Verify:
      if (statement.empty()) throw std::invalid_argument("verify needs --statement");
      break;
    case Task::SweepQuad: break;
    case Task::Per1Slice:
      if (lambda.empty()) throw std::invalid_argument("per1-slice needs --lambda");
      parse_rational(lambda);
      if (k == 8) throw std::invalid_argument("per1-slice: k = 8 is a pole of the k-bound");
      break;
    case Task::PcfSearch: break;
    case Task::Spectrum: need_map("spectrum"); break;
  }
  if (has_map()) resolve_map();
}

RatMap family_map(const std::string& family, const std::map<std::string, std::string>& params) {
  if (family == "milnor2") return RatMap::milnor(param(params, family, "lambda0"), param(params, family, "lambda_inf"));
  if (family == "pm") return RatMap::plus_minus(param(params, family, "a"));
  if (family == "quadratic") {
    Rational c = param(params, family, "c");
    return make_map({c, Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
  }
  throw std::invalid_argument("unknown family '" + family + "' (valid: milnor2, pm, quadratic)");
}

RatMap map_from_json(const Json& j) {
  auto strings = [](const Json& arr) {
    std::vector<std::string> out;
    for (const auto& x : arr) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    return out;
  };
  if (j.contains("family")) {
    std::map<std::string, std::string> params;
    if (j.contains("params"))
      for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
        params[it.key()] = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    return family_map(j["family"].get<std::string>(), params);
  }
  if (j.contains("num") && j.contains("den"))
    return make_map(parse_coeffs(strings(j["num"])), parse_coeffs(strings(j["den"])));
  throw std::invalid_argument("map JSON needs either family/params or num/den");
}

RatMap JobSpec::resolve_map() const {
  if (!family.empty()) return family_map(family, params);
  if (!num.empty()) return make_map(parse_coeffs(num), parse_coeffs(den));
  if (!map_file.empty()) {
    std::ifstream in(map_file);
    if (!in) throw std::invalid_argument("cannot open map file " + map_file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument("map file " + map_file + ": " + e.what());
    }
    return map_from_json(j);
  }
  throw std::invalid_argument("no map given (family, num/den or map-file)");
}

Json JobSpec::to_json() const {
  Json j;
  j["task"] = to_string(task);
  if (!family.empty()) {
    j["family"] = family;
    Json p = Json::object();
    for (const auto& [key, v] : params) p[key] = v;
    j["params"] = p;
  }
  if (!num.empty()) j["num"] = num, j["den"] = den;
  if (!map_file.empty()) j["map_file"] = map_file;
  if (!point.empty()) j["point"] = point;
  j["place"] = place;
  if (!statement.empty()) j["statement"] = statement;
  if (!lambda.empty()) j["lambda"] = lambda;
  j["prec_bits"] = prec_bits;
  char buf[32];
  for (int digits = 1; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, tol);
    if (std::strtod(buf, nullptr) == tol) break;
  }
  j["tol"] = buf;
  j["k"] = k;
  j["n"] = n;
  j["kmax"] = kmax;
  j["iters_cap"] = iters_cap;
  j["grid_num_cap"] = grid_num_cap;
  j["grid_den_cap"] = grid_den_cap;
  j["samples"] = samples;
  j["seed"] = seed;
  return j;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string JobSpec::digest() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(to_json().dump() + "|" + kVersion)));
  return buf;
}

std::vector<std::pair<std::string, std::string>> parse_config(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.rfind("param.", 0) != 0) std::replace(key.begin(), key.end(), '_', '-');
    out.emplace_back(key, value);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace hcrit
