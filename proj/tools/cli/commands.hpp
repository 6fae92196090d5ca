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

#include "config.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qeet::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,
  kExitInvariant = 3,
  kExitIo = 4,
  kExitLibrary = 5,
};

/// A numerical invariant failed on emitted data.
class InvariantViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Output directory missing or unwritable.
class OutputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::optional<std::filesystem::path> out_dir; // overrides output.directory
  bool svg = false;                             // adds to output.formats
  std::optional<unsigned> threads;              // overrides grid.threads
  std::string config_path;                      // for the manifest; empty = defaults
};

struct RunResult {
  std::filesystem::path directory;
  std::vector<std::filesystem::path> files; // manifest last
  std::string summary;
};

const std::vector<std::string>& subcommand_names();

/// Runs one subcommand and writes its outputs. Throws InvariantViolation,
/// OutputError, LibraryError or std::invalid_argument (unknown name).
RunResult run_subcommand(std::string_view name, const RunConfig& config,
                         const RunOptions& options);

/// Parses the config, runs, and maps every failure to an exit code with a
/// message on `err`. The summary goes to `out`.
int run_cli(std::string_view name, const RunOptions& options, std::ostream& out,
            std::ostream& err);

} // namespace qeet::cli
