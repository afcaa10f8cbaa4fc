// Command-line front end: samples clouds and the limit law, derives the
// per-quadrant constants, validates region configs, and emits plot-ready
// CSV/JSON artifacts. Exit codes: 0 ok, 1 validation failure, 2 bad input,
// 3 I/O failure.

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "maxdist/experiment.hpp"
#include "maxdist/experiment_io.hpp"
#include "maxdist/limit_law.hpp"
#include "maxdist/region.hpp"
#include "maxdist/sampling.hpp"
#include "maxdist/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;

struct RegionOptions {
  std::optional<double> a;
  std::optional<double> b;
  std::vector<double> b4;
};

struct RunOptions {
  RegionOptions region;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> reps;
  std::optional<int> m;
  std::optional<std::string> regime;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::string config_path;
  std::string out;
  bool couple = false;
};

maxdist::Regime parse_regime(const std::string& name) {
  if (name == "fixed-n") return maxdist::Regime::FixedN;
  if (name == "poissonized") return maxdist::Regime::Poissonized;
  throw std::domain_error("regime must be 'fixed-n' or 'poissonized'");
}

maxdist::RegionSpec region_from_json(const nlohmann::json& j) {
  if (!j.contains("kind")) throw std::invalid_argument("region.kind missing");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ellipse") {
    return maxdist::RegionSpec::ellipse(j.at("a").get<double>(),
                                        j.at("b").get<double>());
  }
  if (kind == "quarter-ellipse") {
    const auto b = j.at("b").get<std::vector<double>>();
    if (b.size() != 4)
      throw std::invalid_argument("quarter-ellipse needs 4 semi-minor axes");
    return maxdist::RegionSpec::quarter_ellipse(j.at("a").get<double>(),
                                                {b[0], b[1], b[2], b[3]});
  }
  throw std::invalid_argument("unknown region kind '" + kind + "'");
}

// Effective config = JSON config file (when given) overridden by flags.
maxdist::ExperimentConfig build_config(const RunOptions& opt) {
  maxdist::ExperimentConfig config;
  bool have_region = false;

  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw std::runtime_error("cannot read config file");
    nlohmann::json j = nlohmann::json::parse(in);  // may throw parse_error
    if (j.contains("region")) {
      config.region = region_from_json(j.at("region"));
      have_region = true;
    }
    if (j.contains("n")) config.n = j.at("n").get<std::uint64_t>();
    if (j.contains("reps")) config.reps = j.at("reps").get<std::uint64_t>();
    if (j.contains("m")) config.m = j.at("m").get<int>();
    if (j.contains("regime"))
      config.regime = parse_regime(j.at("regime").get<std::string>());
    if (j.contains("seed")) config.master_seed = j.at("seed").get<std::uint64_t>();
  }

  if (opt.region.a || opt.region.b || !opt.region.b4.empty()) {
    if (!opt.region.a)
      throw std::invalid_argument("--a is required with --b/--b4");
    if (!opt.region.b4.empty()) {
      if (opt.region.b4.size() != 4)
        throw std::invalid_argument("--b4 needs exactly 4 values");
      config.region = maxdist::RegionSpec::quarter_ellipse(
          *opt.region.a, {opt.region.b4[0], opt.region.b4[1],
                          opt.region.b4[2], opt.region.b4[3]});
    } else if (opt.region.b) {
      config.region = maxdist::RegionSpec::ellipse(*opt.region.a, *opt.region.b);
    } else {
      throw std::invalid_argument("--b or --b4 is required with --a");
    }
    have_region = true;
  }
  if (!have_region)
    throw std::invalid_argument("no region given (flags or config file)");

  if (opt.n) config.n = *opt.n;
  if (opt.reps) config.reps = *opt.reps;
  if (opt.m) config.m = *opt.m;
  if (opt.regime) config.regime = parse_regime(*opt.regime);
  if (opt.seed) config.master_seed = *opt.seed;
  if (opt.threads) config.threads = *opt.threads;

  if (config.n < 2) throw std::invalid_argument("--n must be >= 2");
  if (config.reps < 1) throw std::invalid_argument("--reps must be >= 1");
  if (config.m < 1) throw std::invalid_argument("--m must be >= 1");
  return config;
}

int cmd_constants(const RegionOptions& region, std::optional<double> raw_q,
                  std::optional<double> raw_p) {
  std::array<maxdist::QuadrantConstants, 4> k;
  std::array<double, 4> q{}, p{};
  if (raw_q || raw_p) {
    if (!raw_q || !raw_p || !region.a)
      throw std::invalid_argument("raw mode needs --q, --p and --a");
    q.fill(*raw_q);
    p.fill(*raw_p);
    k.fill(maxdist::constants(*raw_q, *raw_p, *region.a));
  } else {
    if (!region.a || !region.b)
      throw std::invalid_argument("give --a and --b, or --q --p --a");
    const auto spec = maxdist::RegionSpec::ellipse(*region.a, *region.b);
    for (int quad = 1; quad <= 4; ++quad) {
      q[quad - 1] = spec.q(quad);
      p[quad - 1] = spec.p(quad);
      k[quad - 1] = spec.quadrant_constants(quad);
    }
  }
  // 15 significant digits, hand-emitted to pin the format
  auto f = [](double v) { return maxdist::format_double(v, 15); };
  std::cout << "{\n";
  for (int i = 0; i < 4; ++i) {
    std::cout << "  \"" << (i + 1) << "\": {\"q\": " << f(q[i])
              << ", \"p\": " << f(p[i]) << ", \"c\": " << f(k[i].c)
              << ", \"sigma\": " << f(k[i].sigma)
              << ", \"tau\": " << f(k[i].tau) << "}" << (i < 3 ? "," : "")
              << "\n";
  }
  std::cout << "}\n";
  return kExitOk;
}

int cmd_simulate(const RunOptions& opt) {
  const maxdist::ExperimentConfig config = build_config(opt);
  const maxdist::ExperimentResult result = maxdist::run_experiment(config);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(opt.out, ec);
  auto write_file = [&](const std::string& name, auto&& writer) {
    std::ofstream out(fs::path(opt.out) / name, std::ios::binary);
    writer(out);
    if (!out) throw std::ios_base::failure("cannot write " + name);
  };
  write_file("samples.csv",
             [&](std::ostream& o) { maxdist::write_samples_csv(o, result); });
  write_file("ecdf.csv",
             [&](std::ostream& o) { maxdist::write_ecdf_csv(o, result); });
  write_file("summary.json", [&](std::ostream& o) {
    maxdist::write_summary_json(o, config, result);
  });
  std::cerr << "simulate: " << result.empirical.size() << " empirical + "
            << result.limit.size() << " limit replications, KS = " << result.ks
            << ", dropped = " << result.dropped << "\n";
  return kExitOk;
}

int cmd_limit(const RunOptions& opt) {
  const maxdist::ExperimentConfig config = build_config(opt);
  std::vector<double> values(config.reps);
  const auto reps = static_cast<std::int64_t>(config.reps);
#ifdef _OPENMP
  const int nthreads =
      config.threads > 0 ? config.threads : omp_get_num_procs();
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
#endif
  for (std::int64_t r = 0; r < reps; ++r) {
    std::uint64_t seed = maxdist::child_seed({config.master_seed,
                                              static_cast<std::uint64_t>(r)});
    if (!opt.couple)
      seed = maxdist::splitmix64_mix(
          seed ^ (maxdist::kGoldenGamma * static_cast<std::uint64_t>(config.m)));
    values[r] = maxdist::sample_limit(config.region, config.m, seed).value;
  }
  if (opt.out.empty()) {
    maxdist::write_limit_csv(std::cout, values);
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    maxdist::write_limit_csv(out, values);
    if (!out) throw std::ios_base::failure("cannot write " + opt.out);
  }
  return kExitOk;
}

// Reads either samples.csv (rep_index,kind,value; filtered by --kind) or a
// two-column rep_index,value file and returns the value column.
std::vector<double> read_values(const std::string& path,
                                const std::string& kind) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + " is empty");
  const bool has_kind = line.find(",kind,") != std::string::npos;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    if (c1 == std::string::npos) continue;
    std::string rest = line.substr(c1 + 1);
    if (has_kind) {
      const auto c2 = rest.find(',');
      if (c2 == std::string::npos) continue;
      const std::string row_kind = rest.substr(0, c2);
      if (!kind.empty() && row_kind != kind) continue;
      rest = rest.substr(c2 + 1);
    }
    values.push_back(std::stod(rest));
  }
  if (values.empty()) throw std::runtime_error("no samples in " + path);
  return values;
}

int cmd_compare(const std::string& left, const std::string& right,
                const std::string& kind_left, const std::string& kind_right) {
  const maxdist::EmpiricalCDF e1(read_values(left, kind_left));
  const maxdist::EmpiricalCDF e2(read_values(right, kind_right));
  const double ks = maxdist::ks_distance(e1, e2);
  std::cout << "{\"ks\": " << maxdist::format_double(ks, 15)
            << ", \"n_left\": " << e1.count()
            << ", \"n_right\": " << e2.count() << "}\n";
  return kExitOk;
}

int cmd_validate(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot read config file '" << config_path << "'\n";
    return kExitBadInput;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitBadInput;
  }
  maxdist::RegionSpec region = maxdist::RegionSpec::ellipse(1.0, 0.5);
  try {
    if (!j.contains("region")) throw std::invalid_argument("region missing");
    region = region_from_json(j.at("region"));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad config: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad config: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    // Construction already rejects regions violating the assumptions.
    std::cout << "FAIL A2: " << e.what() << "\n";
    return kExitValidation;
  }

  const maxdist::ValidationReport report = maxdist::validate(region);
  for (const auto& check : report.checks) {
    std::cout << (check.passed ? "PASS " : "FAIL ")
              << (check.advisory ? "(advisory) " : "") << check.name;
    if (!check.detail.empty()) std::cout << " [" << check.detail << "]";
    std::cout << "\n";
  }
  std::cout << (report.ok() ? "OK" : "INVALID") << "\n";
  return report.ok() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diameter statistics of random point clouds in ellipse-like "
               "regions and their norm-angle limit law"};
  app.require_subcommand(1);

  RunOptions sim, lim;
  RegionOptions const_region;
  std::optional<double> const_q, const_p;
  std::string validate_config, cmp_left, cmp_right, cmp_kind_left,
      cmp_kind_right;

  auto add_region_flags = [](CLI::App* cmd, RegionOptions& region) {
    cmd->add_option("--a", region.a, "half major axis");
    cmd->add_option("--b", region.b, "ellipse semi-minor axis");
    cmd->add_option("--b4", region.b4,
                    "quarter-ellipse semi-minor axes (4 values)")
        ->expected(4);
  };

  CLI::App* constants = app.add_subcommand(
      "constants", "per-quadrant limit-law constants (c, sigma, tau)");
  add_region_flags(constants, const_region);
  constants->add_option("--q", const_q, "raw shape constant in (0,2)");
  constants->add_option("--p", const_p, "raw pole density > 0");

  auto add_run_flags = [&](CLI::App* cmd, RunOptions& opt) {
    add_region_flags(cmd, opt.region);
    cmd->add_option("--n", opt.n, "nominal cloud intensity");
    cmd->add_option("--reps", opt.reps, "replication count");
    cmd->add_option("--m", opt.m, "limit-law truncation order");
    cmd->add_option("--seed", opt.seed, "master seed");
    cmd->add_option("--threads", opt.threads,
                    "replication threads (0 = all cores)");
    cmd->add_option("--config", opt.config_path, "JSON config file");
  };

  CLI::App* simulate = app.add_subcommand(
      "simulate", "clouds vs truncated limit law; writes samples.csv, "
                  "ecdf.csv, summary.json");
  add_run_flags(simulate, sim);
  simulate->add_option("--regime", sim.regime, "fixed-n | poissonized");
  simulate->add_option("--out", sim.out, "output directory")->required();

  CLI::App* limit = app.add_subcommand(
      "limit", "truncated limit-law draws only (CSV rep_index,value)");
  add_run_flags(limit, lim);
  limit->add_option("--out", lim.out, "output CSV path (default stdout)");
  limit->add_flag("--couple", lim.couple,
                  "reuse the same substreams across different --m");

  CLI::App* compare =
      app.add_subcommand("compare", "two-sample KS distance of two CSVs");
  compare->add_option("--left", cmp_left, "first CSV")->required();
  compare->add_option("--right", cmp_right, "second CSV")->required();
  compare->add_option("--kind-left", cmp_kind_left,
                      "row filter for samples.csv (empirical | limit)");
  compare->add_option("--kind-right", cmp_kind_right,
                      "row filter for samples.csv (empirical | limit)");

  CLI::App* validate =
      app.add_subcommand("validate", "check a region config against the "
                                     "region assumptions");
  validate->add_option("--config", validate_config, "JSON config file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (constants->parsed())
      return cmd_constants(const_region, const_q, const_p);
    if (simulate->parsed()) return cmd_simulate(sim);
    if (limit->parsed()) return cmd_limit(lim);
    if (compare->parsed())
      return cmd_compare(cmp_left, cmp_right, cmp_kind_left, cmp_kind_right);
    if (validate->parsed()) return cmd_validate(validate_config);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
