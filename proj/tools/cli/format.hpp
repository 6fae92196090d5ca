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

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qeet::cli {

/// 17 significant digits: round-trips every double exactly.
std::string format_number(double value);

/// Comma-separated table with a fixed header.
class CsvTable {
public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(const std::vector<double>& values);
  void add_row(std::string_view label, const std::vector<double>& values);

  const std::vector<std::string>& header() const { return header_; }
  std::string str() const;

private:
  std::vector<std::string> header_;
  std::string body_;
};

/// Writes `content` to `path`; throws std::runtime_error naming the path on
/// failure.
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace qeet::cli
