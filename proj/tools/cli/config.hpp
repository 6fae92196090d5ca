// Copyright 2026 The qudit-eet Authors
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

#pragma once

#include "handles.hpp"

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeet::cli {

/// Malformed or invalid configuration. `line` is 0 when the problem is not
/// tied to a single line (e.g. a cross-key invariant).
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::size_t line, std::string key, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& key() const { return key_; }

private:
  std::size_t line_;
  std::string key_;
};

struct ModelSection {
  // Four-level source values; `truncation` is applied on top of them.
  std::vector<double> level_ratios{0.0, 1.0, 1.04, 2.0};
  std::vector<double> dipole_ratios{1.0, 0.94, 1.0};
  std::vector<double> coupling_ratios{1.0, 0.50, -0.67, 0.72, 0.90, 0.81, 0.81, 0.76};
  std::string truncation = "four-level";
  double coupling_sign = -1.0;
};

struct GridSection {
  std::size_t samples = 200000;      // trace and compare-truncations
  double gamma_min = 0.0;
  double gamma_max = 4.0;
  std::size_t gamma_count = 201;     // sweep-gamma
  std::size_t sweep_samples = 20001; // per-gamma grid inside sweep-gamma
  std::size_t surface_gamma_count = 81;
  std::size_t surface_samples = 2001;
  unsigned threads = 0;
};

struct PulseSection {
  double energy_j = 5e-9;
  double duration_s = 10e-15;
  double cross_section_m2 = 2500.0 * 3.14159265358979323846 * 1e-12;
  double dipole_debye = 5.0;
  double reference_gamma = 0.41;
};

struct OutputSection {
  std::string directory = "out";
  bool csv = true;
  bool svg = false;
};

struct RunConfig {
  ModelSection model;
  qeet_params params{};
  GridSection grid;
  qeet_estimation_inputs estimation{};
  PulseSection pulse;
  OutputSection output;
  /// "section.key" entries that were absent and took their default.
  std::vector<std::string> defaults_applied;
};

/// All defaults, every key marked as defaulted.
RunConfig default_config();

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::filesystem::path& path);

/// Complete config text; every double written with 17 significant digits.
std::string serialize_config(const RunConfig& config);

/// Model handle for the configured truncation. Throws ConfigError.
ModelHandle make_model(const RunConfig& config);

/// Every key the parser accepts, as "section.key".
std::vector<std::string> known_keys();

} // namespace qeet::cli
