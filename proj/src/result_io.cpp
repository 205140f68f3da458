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

#include "dss/result_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "dss/config.hpp"

namespace dss {

std::string format_real(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  if (std::isnan(v)) {
    return "nan";
  }
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_runs_csv(std::ostream& out, std::span<const RunResult> results, Algorithm algorithm) {
  std::size_t bins = 0;
  if (algorithm == Algorithm::dss) {
    for (const auto& r : results) {
      bins = std::max(bins, r.bins.size());
    }
  }
  out << "run_id,pf_hat,levels,n_evals,status";
  for (std::size_t j = 1; j <= bins; ++j) {
    out << ",pi_hat_" << j;
  }
  out << '\n';
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out << i << ',' << format_real(r.pf_hat) << ',' << r.levels << ',' << r.n_evals << ','
        << to_string(r.status);
    for (std::size_t j = 0; j < bins; ++j) {
      out << ',' << (j < r.bins.size() ? format_real(r.bins[j].pi_hat) : "0");
    }
    out << '\n';
  }
}

void write_levels_csv(std::ostream& out, const RunResult& result) {
  const std::size_t bins = result.records.empty() ? 0 : result.records.front().counts.size();
  out << "level,seeds,finished_mass,upper_bound";
  for (std::size_t j = 1; j <= bins; ++j) {
    out << ",gamma_" << j;
  }
  for (std::size_t j = 1; j <= bins; ++j) {
    out << ",count_" << j;
  }
  out << '\n';
  for (const auto& rec : result.records) {
    out << rec.level << ',' << rec.seeds << ',' << format_real(rec.finished_mass) << ','
        << format_real(rec.upper_bound);
    for (double g : rec.thresholds) {
      out << ',' << format_real(g);
    }
    for (std::size_t c : rec.counts) {
      out << ',' << c;
    }
    out << '\n';
  }
}

std::vector<HistogramBin> log10_histogram(std::span<const RunResult> results, double width) {
  std::map<long long, std::size_t> counts;
  for (const auto& r : results) {
    if (r.status == RunStatus::failed || !(r.pf_hat > 0.0)) {
      continue;
    }
    ++counts[static_cast<long long>(std::floor(std::log10(r.pf_hat) / width))];
  }
  std::vector<HistogramBin> out;
  if (counts.empty()) {
    return out;
  }
  const long long lo = counts.begin()->first;
  const long long hi = counts.rbegin()->first;
  for (long long k = lo; k <= hi; ++k) {
    const auto it = counts.find(k);
    out.push_back({static_cast<double>(k) * width, static_cast<double>(k + 1) * width,
                   it == counts.end() ? 0 : it->second});
  }
  return out;
}

void write_hist_csv(std::ostream& out, std::span<const HistogramBin> bins) {
  out << "log10_lower,log10_upper,count\n";
  for (const auto& b : bins) {
    out << format_real(b.lower) << ',' << format_real(b.upper) << ',' << b.count << '\n';
  }
}

nlohmann::json summary_to_json(const ReplicationSummary& s, const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["config"] = config_to_json(cfg);
  j["mean_pf"] = s.mean_pf;
  j["cov"] = s.cov;
  j["r_metric"] = s.r_metric ? nlohmann::json(*s.r_metric) : nlohmann::json(nullptr);
  j["pf_ref"] = s.pf_ref ? nlohmann::json(*s.pf_ref) : nlohmann::json(nullptr);
  j["mean_evals"] = s.mean_evals;
  j["runs_used"] = s.runs_used;
  j["failed_runs"] = s.failed_runs;
  j["zero_runs"] = s.zero_runs;
  j["mean_pi_hat"] = s.mean_pi_hat;
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out{path, std::ios::binary};
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
}

}  // namespace dss
