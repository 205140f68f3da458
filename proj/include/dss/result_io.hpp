// Copyright 2026 The dirsubsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSS_RESULT_IO_HPP
#define DSS_RESULT_IO_HPP

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "dss/harness.hpp"

namespace dss {

/// Shortest-exact text form of a double ("inf" for infinity).
std::string format_real(double v);

/// runs.csv: run_id, pf_hat, levels, n_evals, status[, pi_hat_1..pi_hat_J for dSS].
void write_runs_csv(std::ostream& out, std::span<const RunResult> results, Algorithm algorithm);

/// levels.csv for one run: level, seeds, finished_mass, upper_bound,
/// gamma_1..gamma_J, count_1..count_J.
void write_levels_csv(std::ostream& out, const RunResult& result);

struct HistogramBin {
  double lower = 0.0;  // log10 edges
  double upper = 0.0;
  std::size_t count = 0;
};

/// Fixed-width histogram of log10(pf_hat) over the runs summarize() uses.
/// Bin k covers [k w, (k + 1) w); the range spans the occupied bins only.
std::vector<HistogramBin> log10_histogram(std::span<const RunResult> results,
                                          double width = 0.1);
void write_hist_csv(std::ostream& out, std::span<const HistogramBin> bins);

/// summary.json contents: the resolved config plus all summary statistics.
nlohmann::json summary_to_json(const ReplicationSummary& summary, const ExperimentConfig& cfg);

/// Writes `text` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace dss

#endif  // DSS_RESULT_IO_HPP
