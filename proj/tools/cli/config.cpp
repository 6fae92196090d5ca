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

#include "config.hpp"

#include "format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace qeet::cli {

ConfigError::ConfigError(std::size_t line, std::string key, const std::string& message)
    : std::runtime_error(message), line_(line), key_(std::move(key)) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Context {
  std::size_t line;
  std::string key;

  [[noreturn]] void error(const std::string& message) const {
    throw ConfigError(line, key, message);
  }
};

double parse_double(std::string_view text, const Context& ctx) {
  text = trim(text);
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') {
    ++begin;
  }
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    ctx.error("expected a finite number, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view text, const Context& ctx) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_double(text.substr(0, comma), ctx));
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<double> parse_list(std::string_view text, std::size_t expected, const Context& ctx) {
  auto values = parse_list(text, ctx);
  if (values.size() != expected) {
    ctx.error("expected " + std::to_string(expected) + " values, got " +
              std::to_string(values.size()));
  }
  return values;
}

std::size_t parse_count(std::string_view text, const Context& ctx) {
  text = trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    ctx.error("expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::size_t parse_positive_count(std::string_view text, const Context& ctx) {
  const auto value = parse_count(text, ctx);
  if (value == 0) {
    ctx.error("must be >= 1");
  }
  return value;
}

double parse_non_negative(std::string_view text, const Context& ctx) {
  const double value = parse_double(text, ctx);
  if (value < 0.0) {
    ctx.error("must be >= 0, got " + format_number(value));
  }
  return value;
}

double parse_positive(std::string_view text, const Context& ctx) {
  const double value = parse_double(text, ctx);
  if (!(value > 0.0)) {
    ctx.error("must be > 0, got " + format_number(value));
  }
  return value;
}

std::string join(const double* values, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += format_number(values[i]);
  }
  return out;
}

std::string join(const std::vector<double>& values) { return join(values.data(), values.size()); }

template <std::size_t N>
void assign(double (&dst)[N], const std::vector<double>& src) {
  std::copy(src.begin(), src.end(), dst);
}

struct Field {
  std::string_view section;
  std::string_view key;
  std::function<void(RunConfig&, std::string_view, const Context&)> read;
  std::function<std::string(const RunConfig&)> write;
};

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    // [model]
    f.push_back({"model", "level_ratios",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.model.level_ratios = parse_list(v, 4, ctx);
                 },
                 [](const RunConfig& c) { return join(c.model.level_ratios); }});
    f.push_back({"model", "dipole_ratios",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.model.dipole_ratios = parse_list(v, 3, ctx);
                 },
                 [](const RunConfig& c) { return join(c.model.dipole_ratios); }});
    f.push_back({"model", "coupling_ratios",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.model.coupling_ratios = parse_list(v, 8, ctx);
                 },
                 [](const RunConfig& c) { return join(c.model.coupling_ratios); }});
    f.push_back({"model", "truncation",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   const std::string name(trim(v));
                   for (int m = QEET_FOUR_LEVEL; m <= QEET_SINGLE_EXCITON; ++m) {
                     if (name == qeet_truncation_name(static_cast<qeet_truncation>(m))) {
                       c.model.truncation = name;
                       return;
                     }
                   }
                   ctx.error("unknown truncation '" + name +
                             "' (four-level, three-level, two-level, single-exciton)");
                 },
                 [](const RunConfig& c) { return c.model.truncation; }});
    f.push_back({"model", "coupling_sign",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   const double s = parse_double(v, ctx);
                   if (s != 1.0 && s != -1.0) {
                     ctx.error("must be 1 or -1");
                   }
                   c.model.coupling_sign = s;
                 },
                 [](const RunConfig& c) { return format_number(c.model.coupling_sign); }});
    // [params]
    f.push_back({"params", "gamma",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.params.gamma = parse_non_negative(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.params.gamma); }});
    f.push_back({"params", "delta",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.params.delta = parse_double(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.params.delta); }});
    f.push_back({"params", "drive_ratio",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.params.drive_ratio = parse_double(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.params.drive_ratio); }});
    f.push_back({"params", "r",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.params.r = parse_non_negative(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.params.r); }});
    // [grid]
    f.push_back({"grid", "gamma2_max",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.params.gamma2_max = parse_non_negative(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.params.gamma2_max); }});
    f.push_back({"grid", "samples",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.grid.samples = parse_positive_count(v, ctx);
                 },
                 [](const RunConfig& c) { return std::to_string(c.grid.samples); }});
    f.push_back({"grid", "gamma_min",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.grid.gamma_min = parse_non_negative(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.grid.gamma_min); }});
    f.push_back({"grid", "gamma_max",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.grid.gamma_max = parse_non_negative(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.grid.gamma_max); }});
    f.push_back({"grid", "gamma_count",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.grid.gamma_count = parse_positive_count(v, ctx);
                 },
                 [](const RunConfig& c) { return std::to_string(c.grid.gamma_count); }});
    f.push_back({"grid", "sweep_samples",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.grid.sweep_samples = parse_positive_count(v, ctx);
                 },
                 [](const RunConfig& c) { return std::to_string(c.grid.sweep_samples); }});
    f.push_back({"grid", "surface_gamma_count",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.grid.surface_gamma_count = parse_positive_count(v, ctx);
                 },
                 [](const RunConfig& c) { return std::to_string(c.grid.surface_gamma_count); }});
    f.push_back({"grid", "surface_samples",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.grid.surface_samples = parse_positive_count(v, ctx);
                 },
                 [](const RunConfig& c) { return std::to_string(c.grid.surface_samples); }});
    f.push_back({"grid", "threads",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.grid.threads = static_cast<unsigned>(parse_count(v, ctx));
                 },
                 [](const RunConfig& c) { return std::to_string(c.grid.threads); }});
    // [estimation]
    f.push_back({"estimation", "block_a",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   assign(c.estimation.block_a, parse_list(v, 3, ctx));
                 },
                 [](const RunConfig& c) { return join(c.estimation.block_a, 3); }});
    f.push_back({"estimation", "block_b",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   assign(c.estimation.block_b, parse_list(v, 3, ctx));
                 },
                 [](const RunConfig& c) { return join(c.estimation.block_b, 3); }});
    f.push_back({"estimation", "site_coupling",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   assign(c.estimation.site_coupling, parse_list(v, 16, ctx));
                 },
                 [](const RunConfig& c) { return join(c.estimation.site_coupling, 16); }});
    static constexpr std::array<std::string_view, 4> dipole_keys{"dipole_a1", "dipole_a2",
                                                                 "dipole_b1", "dipole_b2"};
    for (std::size_t i = 0; i < dipole_keys.size(); ++i) {
      f.push_back({"estimation", dipole_keys[i],
                   [i](RunConfig& c, std::string_view v, const Context& ctx) {
                     assign(c.estimation.site_dipoles[i], parse_list(v, 3, ctx));
                   },
                   [i](const RunConfig& c) { return join(c.estimation.site_dipoles[i], 3); }});
    }
    f.push_back({"estimation", "level3_ratio",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.estimation.level3_ratio = parse_double(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.estimation.level3_ratio); }});
    f.push_back({"estimation", "dipole31_ratio",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.estimation.dipole31_ratio = parse_non_negative(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.estimation.dipole31_ratio); }});
    f.push_back({"estimation", "assigned_couplings",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   assign(c.estimation.assigned_couplings, parse_list(v, 4, ctx));
                 },
                 [](const RunConfig& c) { return join(c.estimation.assigned_couplings, 4); }});
    // [pulse]
    f.push_back({"pulse", "energy_j",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.pulse.energy_j = parse_non_negative(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.pulse.energy_j); }});
    f.push_back({"pulse", "duration_s",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.pulse.duration_s = parse_positive(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.pulse.duration_s); }});
    f.push_back({"pulse", "cross_section_m2",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.pulse.cross_section_m2 = parse_positive(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.pulse.cross_section_m2); }});
    f.push_back({"pulse", "dipole_debye",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.pulse.dipole_debye = parse_positive(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.pulse.dipole_debye); }});
    f.push_back({"pulse", "reference_gamma",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.pulse.reference_gamma = parse_non_negative(v, ctx);
                 },
                 [](const RunConfig& c) { return format_number(c.pulse.reference_gamma); }});
    // [output]
    f.push_back({"output", "directory",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   const auto dir = trim(v);
                   if (dir.empty()) {
                     ctx.error("must not be empty");
                   }
                   c.output.directory = std::string(dir);
                 },
                 [](const RunConfig& c) { return c.output.directory; }});
    f.push_back({"output", "formats",
                 [](RunConfig& c, std::string_view v, const Context& ctx) {
                   c.output.csv = false;
                   c.output.svg = false;
                   std::string_view rest = v;
                   while (true) {
                     const auto comma = rest.find(',');
                     const auto item = trim(rest.substr(0, comma));
                     if (item == "csv") {
                       c.output.csv = true;
                     } else if (item == "svg") {
                       c.output.svg = true;
                     } else {
                       ctx.error("unknown format '" + std::string(item) + "' (csv, svg)");
                     }
                     if (comma == std::string_view::npos) {
                       break;
                     }
                     rest.remove_prefix(comma + 1);
                   }
                   if (!c.output.csv) {
                     ctx.error("csv output is always written and must be listed");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(c.output.svg ? "csv, svg" : "csv");
                 }});
    return f;
  }();
  return table;
}

const Field* find_field(std::string_view section, std::string_view key) {
  for (const auto& f : fields()) {
    if (f.section == section && f.key == key) {
      return &f;
    }
  }
  return nullptr;
}

bool known_section(std::string_view section) {
  return std::any_of(fields().begin(), fields().end(),
                     [&](const Field& f) { return f.section == section; });
}

RunConfig builtin_defaults() {
  RunConfig c;
  check(qeet_params_default(&c.params), "qeet_params_default");
  check(qeet_estimation_inputs_default(&c.estimation), "qeet_estimation_inputs_default");
  return c;
}

qeet_truncation truncation_from_name(const std::string& name) {
  for (int m = QEET_FOUR_LEVEL; m <= QEET_SINGLE_EXCITON; ++m) {
    if (name == qeet_truncation_name(static_cast<qeet_truncation>(m))) {
      return static_cast<qeet_truncation>(m);
    }
  }
  throw ConfigError(0, "model.truncation", "unknown truncation '" + name + "'");
}

} // namespace

std::vector<std::string> known_keys() {
  std::vector<std::string> out;
  for (const auto& f : fields()) {
    out.push_back(std::string(f.section) + "." + std::string(f.key));
  }
  return out;
}

RunConfig default_config() {
  RunConfig c = builtin_defaults();
  c.defaults_applied = known_keys();
  return c;
}

RunConfig parse_config(std::istream& in) {
  RunConfig config = builtin_defaults();
  std::map<std::string, std::size_t> seen;
  std::string section;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string_view::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(line_no, "", "unterminated section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!known_section(section)) {
        throw ConfigError(line_no, section, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "", "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (section.empty()) {
      throw ConfigError(line_no, key, "key '" + key + "' appears before any [section]");
    }
    const std::string full = section + "." + key;
    const Field* field = find_field(section, key);
    if (field == nullptr) {
      throw ConfigError(line_no, full, "unknown key '" + full + "'");
    }
    if (const auto it = seen.find(full); it != seen.end()) {
      throw ConfigError(line_no, full,
                        "duplicate key '" + full + "' (first set on line " +
                            std::to_string(it->second) + ")");
    }
    seen.emplace(full, line_no);
    field->read(config, value, Context{line_no, full});
  }

  for (const auto& f : fields()) {
    const std::string full = std::string(f.section) + "." + std::string(f.key);
    if (seen.find(full) == seen.end()) {
      config.defaults_applied.push_back(full);
    }
  }

  if (config.grid.gamma_max < config.grid.gamma_min) {
    const auto it = seen.find("grid.gamma_max");
    throw ConfigError(it == seen.end() ? 0 : it->second, "grid.gamma_max",
                      "gamma_max must be >= gamma_min");
  }
  if (qeet_params_validate(&config.params) != QEET_OK) {
    throw ConfigError(0, "params", qeet_last_error());
  }
  make_model(config); // model invariants
  return config;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(0, "", "cannot open config file '" + path.string() + "'");
  }
  return parse_config(in);
}

std::string serialize_config(const RunConfig& config) {
  std::ostringstream out;
  std::string_view section;
  for (const auto& f : fields()) {
    if (f.section != section) {
      if (!section.empty()) {
        out << '\n';
      }
      section = f.section;
      out << '[' << section << "]\n";
    }
    out << f.key << " = " << f.write(config) << '\n';
  }
  return out.str();
}

ModelHandle make_model(const RunConfig& config) {
  const auto& m = config.model;
  qeet_model* four = nullptr;
  if (qeet_model_create(m.level_ratios.data(), m.level_ratios.size(), m.dipole_ratios.data(),
                        m.dipole_ratios.size(), m.coupling_ratios.data(),
                        m.coupling_ratios.size(), m.coupling_sign, QEET_FOUR_LEVEL,
                        &four) != QEET_OK) {
    throw ConfigError(0, "model", qeet_last_error());
  }
  ModelHandle source(four);
  const qeet_truncation mode = truncation_from_name(m.truncation);
  qeet_model* truncated = nullptr;
  check(qeet_model_truncate(source.get(), mode, &truncated), "qeet_model_truncate");
  return ModelHandle(truncated);
}

} // namespace qeet::cli
