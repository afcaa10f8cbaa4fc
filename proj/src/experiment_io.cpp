#include "maxdist/experiment_io.hpp"

#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace maxdist {
namespace {

const char* regime_name(Regime regime) {
  return regime == Regime::FixedN ? "fixed-n" : "poissonized";
}

nlohmann::ordered_json region_json(const RegionSpec& region) {
  nlohmann::ordered_json j;
  switch (region.kind()) {
    case RegionKind::Ellipse:
      j["kind"] = "ellipse";
      j["a"] = region.a();
      j["b"] = region.semi_minor(1);
      break;
    case RegionKind::QuarterEllipse:
      j["kind"] = "quarter-ellipse";
      j["a"] = region.a();
      j["b"] = {region.semi_minor(1), region.semi_minor(2),
                region.semi_minor(3), region.semi_minor(4)};
      break;
    case RegionKind::Custom:
      j["kind"] = "custom";
      j["a"] = region.a();
      break;
  }
  return j;
}

}  // namespace

std::string format_double(double v, int significant_digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general,
                                 significant_digits);
  if (res.ec != std::errc())
    throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

void write_samples_csv(std::ostream& out, const ExperimentResult& result) {
  out << "rep_index,kind,value\n";
  for (std::size_t i = 0; i < result.empirical.size(); ++i)
    out << result.empirical_rep[i] << ",empirical,"
        << format_double(result.empirical[i], 17) << "\n";
  for (std::size_t r = 0; r < result.limit.size(); ++r)
    out << r << ",limit," << format_double(result.limit[r], 17) << "\n";
}

void write_limit_csv(std::ostream& out, std::span<const double> values) {
  out << "rep_index,value\n";
  for (std::size_t r = 0; r < values.size(); ++r)
    out << r << "," << format_double(values[r], 17) << "\n";
}

void write_ecdf_csv(std::ostream& out, const ExperimentResult& result) {
  out << "t,F_empirical,F_limit\n";
  for (std::size_t i = 0; i < result.grid.size(); ++i)
    out << format_double(result.grid[i], 6) << ","
        << format_double(result.grid_empirical[i], 6) << ","
        << format_double(result.grid_limit[i], 6) << "\n";
}

void write_summary_json(std::ostream& out, const ExperimentConfig& config,
                        const ExperimentResult& result) {
  const EmpiricalCDF emp(result.empirical);
  const EmpiricalCDF lim(result.limit);
  nlohmann::ordered_json j;
  j["config"] = {{"region", region_json(config.region)},
                 {"n", config.n},
                 {"reps", config.reps},
                 {"m", config.m},
                 {"regime", regime_name(config.regime)},
                 {"seed", config.master_seed}};
  j["ks"] = result.ks;
  j["quantiles"] = {
      {"empirical",
       {{"q10", emp.quantile(0.1)},
        {"q50", emp.quantile(0.5)},
        {"q90", emp.quantile(0.9)}}},
      {"limit",
       {{"q10", lim.quantile(0.1)},
        {"q50", lim.quantile(0.5)},
        {"q90", lim.quantile(0.9)}}}};
  j["dropped"] = result.dropped;
  out << j.dump(2) << "\n";
}

}  // namespace maxdist
