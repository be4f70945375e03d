#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "hcrit/explorer/runner.hpp"
#include "hcrit/version.hpp"

namespace {

const char* const kTasks[][2] = {
    {"height", "Weil height of a point"},
    {"canonical-height", "canonical height of a point under a map"},
    {"green", "local Green's function of a map at a point"},
    {"crit-height", "critical height of a map"},
    {"verify", "certify one inequality (--statement)"},
    {"sweep-quad", "critical heights and certificates over the Milnor grid"},
    {"per1-slice", "critical height over a fixed-multiplier slice"},
    {"pcf-search", "exact post-critically finite test over a grid or one map"},
    {"spectrum", "multiplier characteristic polynomial of f^n"},
};

// flag name, help; every flag is also a config key
const char* const kSettings[][2] = {
    {"family", "map family: milnor2, pm, quadratic"},
    {"num", "numerator coefficients in z, ascending, comma separated"},
    {"den", "denominator coefficients in z, ascending, comma separated"},
    {"map-file", "JSON map file"},
    {"point", "point p/q, [x:y] or inf"},
    {"place", "inf, a prime, or all"},
    {"statement", "statement for verify"},
    {"lambda", "fixed multiplier for per1-slice and kbound"},
    {"prec-bits", "working precision in bits (default 128)"},
    {"tol", "target enclosure width (default 1e-6)"},
    {"k", "k parameter (default 10)"},
    {"n", "iterate count (default 1)"},
    {"kmax", "largest k in attraction checks (default 6)"},
    {"iters-cap", "orbit budget and iterate degree cap (default 64)"},
    {"grid-num-cap", "numerator cap P of the grid (default 2)"},
    {"grid-den-cap", "denominator cap Q of the grid (default 1)"},
    {"samples", "sampled points when --point is absent (default 5)"},
    {"seed", "seed for sampled points"},
    {"out", "JSONL output path (default stdout)"},
    {"tsv", "optional TSV summary path"},
    {"jobs", "worker threads (default 1)"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heights and critical heights of rational maps over Q"};
  app.set_version_flag("--version", hcrit::kVersion);
  app.require_subcommand(1);

  std::string config;
  std::vector<std::string> params;
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, CLI::Option*>> options;
  app.add_option("--config", config, "key=value config file; flags override it");
  app.add_option("--param", params, "family parameter NAME=VALUE (repeatable)");
  for (const auto& s : kSettings) options.emplace_back(s[0], app.add_option(std::string("--") + s[0], values[s[0]], s[1]));
  for (const auto& t : kTasks) app.add_subcommand(t[0], t[1])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    hcrit::JobSpec job;
    if (!config.empty())
      for (const auto& [k, v] : hcrit::read_config_file(config)) job.set(k, v);
    job.set("task", app.get_subcommands().front()->get_name());
    for (const auto& [key, opt] : options)
      if (opt->count() > 0) job.set(key, values[key]);
    for (const auto& p : params) {
      auto eq = p.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--param expects NAME=VALUE, got '" + p + "'");
      job.set("param." + p.substr(0, eq), p.substr(eq + 1));
    }
    job.validate();
    if (job.out.empty()) return hcrit::run(job, std::cout);
    std::ofstream out(job.out);
    if (!out) throw std::runtime_error("cannot write " + job.out);
    return hcrit::run(job, out);
  } catch (const std::exception& e) {
    std::cerr << "hcrit: " << e.what() << '\n';
    return 1;
  }
}
