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

#include "format.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qeet::cli {

std::string format_number(double value) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(const std::vector<double>& values) {
  if (values.size() != header_.size()) {
    throw std::logic_error("CsvTable: row width does not match header");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      body_ += ',';
    }
    body_ += format_number(values[i]);
  }
  body_ += '\n';
}

void CsvTable::add_row(std::string_view label, const std::vector<double>& values) {
  if (values.size() + 1 != header_.size()) {
    throw std::logic_error("CsvTable: row width does not match header");
  }
  body_ += label;
  for (double v : values) {
    body_ += ',';
    body_ += format_number(v);
  }
  body_ += '\n';
}

std::string CsvTable::str() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += header_[i];
  }
  out += '\n';
  return out + body_;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) {
    throw std::runtime_error("failed writing '" + path.string() + "'");
  }
}

} // namespace qeet::cli
