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

#include "dss/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "dss/errors.hpp"

namespace dss {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string{s.substr(first, last - first + 1)};
}

// Recursive-descent evaluator for + - * / over numbers and `pi`.
class AngleParser {
 public:
  explicit AngleParser(std::string_view text) : text_{text} {}

  double parse() {
    const double v = sum();
    skip_space();
    if (pos_ != text_.size()) {
      fail();
    }
    return v;
  }

 private:
  double sum() {
    double v = product();
    for (;;) {
      skip_space();
      if (accept('+')) {
        v += product();
      } else if (accept('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  double product() {
    double v = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    skip_space();
    if (accept('-')) {
      return -unary();
    }
    if (accept('+')) {
      return unary();
    }
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc{} || ptr == begin) {
      fail();
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail() const {
    throw ConfigError("invalid angle expression: '" + std::string{text_} + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double parse_real(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
  }
  return out;
}

std::uint64_t parse_count(const std::string& key, const std::string& v) {
  std::uint64_t exact = 0;
  if (const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), exact);
      ec == std::errc{} && ptr == v.data() + v.size()) {
    return exact;
  }
  // Also accepts integral values written in scientific notation, e.g. 1e4.
  const double d = parse_real(key, v);
  if (!(d >= 0.0) || d != std::floor(d) || d > 9.007199254740992e15) {
    throw ConfigError("key '" + key + "': expected a non-negative integer, got '" + v + "'");
  }
  return static_cast<std::uint64_t>(d);
}

std::vector<double> parse_cuts(const std::string& v) {
  std::vector<double> cuts;
  std::stringstream ss{v};
  std::string item;
  while (std::getline(ss, item, ',')) {
    cuts.push_back(parse_angle(trim(item)));
  }
  return cuts;
}

void apply(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "problem") {
    cfg.problem = value;
  } else if (key == "algorithm") {
    cfg.algorithm = algorithm_from_string(value);
  } else if (key == "N" || key == "n") {
    cfg.n = parse_count(key, value);
  } else if (key == "level_prob" || key == "rho") {
    cfg.rho = parse_real(key, value);
  } else if (key == "mcmc_corr") {
    cfg.mcmc_corr = parse_real(key, value);
  } else if (key == "partition") {
    cfg.partition.kind = partition_kind_from_string(value);
  } else if (key == "cuts") {
    cfg.partition.cuts = parse_cuts(value);
  } else if (key == "axis") {
    cfg.partition.axis = parse_count(key, value);
  } else if (key == "dimension") {
    cfg.partition.dimension = parse_count(key, value);
  } else if (key == "eps_tol") {
    cfg.eps_tol = parse_real(key, value);
  } else if (key == "max_levels") {
    cfg.max_levels = parse_count(key, value);
  } else if (key == "runs") {
    cfg.runs = parse_count(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_count(key, value);
  } else if (key == "pf_ref") {
    cfg.pf_ref = parse_real(key, value);
  } else {
    throw ConfigError("unknown config key: '" + key + "'");
  }
}

std::string json_scalar(const std::string& key, const nlohmann::json& v) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_number_integer() || v.is_number_unsigned()) {
    return v.dump();
  }
  if (v.is_number_float()) {
    // dump() emits round-trip precision.
    return v.dump();
  }
  throw ConfigError("key '" + key + "': unsupported JSON value " + v.dump());
}

ExperimentConfig parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string{"invalid JSON config: "} + e.what());
  }
  if (doc.contains("config")) {
    doc = doc.at("config");
  }
  if (!doc.is_object()) {
    throw ConfigError("JSON config must be an object");
  }
  ExperimentConfig cfg;
  for (const auto& [key, v] : doc.items()) {
    if (v.is_null()) {
      continue;
    }
    if (key == "cuts" && v.is_array()) {
      cfg.partition.cuts.clear();
      for (const auto& c : v) {
        cfg.partition.cuts.push_back(c.is_string() ? parse_angle(c.get<std::string>())
                                                   : c.get<double>());
      }
      continue;
    }
    apply(cfg, key, json_scalar(key, v));
  }
  return cfg;
}

}  // namespace

double parse_angle(std::string_view expr) { return AngleParser{expr}.parse(); }

ExperimentConfig parse_config(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_json(text);
  }
  ExperimentConfig cfg;
  std::stringstream ss{std::string{text}};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto body = trim(line);
    if (body.empty()) {
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    apply(cfg, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in{path};
  if (!in) {
    throw ConfigError("cannot open config file: " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["problem"] = cfg.problem;
  j["algorithm"] = to_string(cfg.algorithm);
  j["N"] = cfg.n;
  j["level_prob"] = cfg.rho;
  j["mcmc_corr"] = cfg.mcmc_corr;
  j["partition"] = to_string(cfg.partition.kind);
  j["cuts"] = cfg.partition.cuts;
  j["axis"] = cfg.partition.axis;
  j["dimension"] = cfg.partition.dimension;
  j["eps_tol"] = cfg.eps_tol;
  j["max_levels"] = cfg.max_levels;
  j["runs"] = cfg.runs;
  j["seed"] = cfg.seed;
  j["pf_ref"] = cfg.pf_ref ? nlohmann::json(*cfg.pf_ref) : nlohmann::json(nullptr);
  return j;
}

}  // namespace dss
