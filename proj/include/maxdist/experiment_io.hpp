#pragma once

#include <ostream>
#include <span>
#include <string>

#include "maxdist/experiment.hpp"

namespace maxdist {

// Locale-independent shortest-faithful formatting with a significant-digit
// cap; '.' decimal point always.
std::string format_double(double v, int significant_digits);

// samples.csv: header "rep_index,kind,value"; empirical rows first in
// replication order, then limit rows; 17 significant digits.
void write_samples_csv(std::ostream& out, const ExperimentResult& result);

// Limit-only CSV: header exactly "rep_index,value".
void write_limit_csv(std::ostream& out, std::span<const double> values);

// ecdf.csv: header "t,F_empirical,F_limit"; 6 significant digits.
void write_ecdf_csv(std::ostream& out, const ExperimentResult& result);

// summary.json: KS distance, 0.1/0.5/0.9 quantiles of both samples, dropped
// count, and an echo of the statistical config (execution-only knobs such
// as thread count are not echoed so outputs stay byte-identical).
void write_summary_json(std::ostream& out, const ExperimentConfig& config,
                        const ExperimentResult& result);

}  // namespace maxdist
