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

#include "commands.hpp"

#include "format.hpp"
#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <system_error>

namespace qeet::cli {

namespace {

constexpr double kPopulationTolerance = 1e-9;
constexpr double kEntropySlack = 1e-12;
constexpr double kEnergyTolerance = 1e-8;
constexpr double kNormTolerance = 1e-10;

struct Job {
  const RunConfig& config;
  std::filesystem::path dir;
  bool svg;
  unsigned threads;
  RunResult result;

  std::filesystem::path emit(const std::string& name, std::string_view content) {
    auto path = dir / name;
    try {
      write_file(path, content);
    } catch (const std::runtime_error& e) {
      throw OutputError(e.what());
    }
    result.files.push_back(path);
    return path;
  }
};

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count, lo);
  for (std::size_t i = 1; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  if (count > 1) {
    out.back() = hi;
  }
  return out;
}

std::size_t dimension(const qeet_model* model) {
  std::size_t d = 0;
  check(qeet_model_dimension(model, &d), "qeet_model_dimension");
  return d;
}

void check_entropy(double entropy, std::size_t d, std::string_view where) {
  const double bound = std::log2(static_cast<double>(d));
  if (!(entropy >= -kEntropySlack && entropy <= bound + kEntropySlack)) {
    throw InvariantViolation("entropy bound 0 <= E <= log2(d) violated in " + std::string(where) +
                             ": E = " + format_number(entropy));
  }
}

void check_populations(const std::vector<double>& p, std::string_view where) {
  double sum = 0.0;
  for (double x : p) {
    if (x < 0.0) {
      throw InvariantViolation("negative population in " + std::string(where));
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kPopulationTolerance) {
    throw InvariantViolation("population sum = 1 violated in " + std::string(where) +
                             ": sum = " + format_number(sum));
  }
}

std::array<double, 4> padded_populations(const qeet_model* model, const qeet_params& params) {
  std::array<double, 4> pops{};
  std::size_t n = 0;
  check(qeet_initial_populations(model, &params, pops.data(), pops.size(), &n),
        "qeet_initial_populations");
  check_populations(std::vector<double>(pops.begin(), pops.begin() + static_cast<long>(n)),
                    "initial state");
  return pops;
}

struct TraceData {
  double gamma = 0.0;
  std::vector<double> gamma2;
  std::vector<double> entropy;
};

TraceData read_trace(const qeet_trace* trace) {
  TraceData out;
  out.gamma = qeet_trace_gamma(trace);
  const std::size_t n = qeet_trace_size(trace);
  out.gamma2.resize(n);
  out.entropy.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    check(qeet_trace_sample(trace, i, &out.gamma2[i], &out.entropy[i]), "qeet_trace_sample");
  }
  return out;
}

std::string trace_csv(const TraceData& t) {
  CsvTable table({"gamma", "gamma2", "entropy"});
  for (std::size_t i = 0; i < t.gamma2.size(); ++i) {
    table.add_row({t.gamma, t.gamma2[i], t.entropy[i]});
  }
  return table.str();
}

std::string describe(const qeet_max_entanglement& m) {
  std::ostringstream out;
  out << "e_max = " << format_number(m.e_max) << " at gamma2 = " << format_number(m.gamma2);
  if (!m.converged) {
    out << " (refinement did not converge; grid maximum " << format_number(m.coarse_e_max)
        << " at " << format_number(m.coarse_gamma2) << ")";
  }
  if (m.densifications > 0) {
    out << " [grid densified " << m.densifications << "x to " << m.grid_samples << " samples]";
  }
  if (!m.grid_resolved) {
    out << " [grid step changes entropy by " << format_number(m.max_neighbour_step) << "]";
  }
  return out.str();
}

void run_excite(Job& job) {
  const auto model = make_model(job.config);
  const auto& p = job.config.params;
  std::array<double, 4> re{};
  std::array<double, 4> im{};
  std::size_t n = 0;
  check(qeet_prepare_initial_state(model.get(), &p, re.data(), im.data(), re.size(), &n),
        "qeet_prepare_initial_state");
  const auto pops = padded_populations(model.get(), p);

  CsvTable table({"gamma", "p0", "p1", "p2", "p3"});
  table.add_row({p.gamma, pops[0], pops[1], pops[2], pops[3]});
  job.emit("excite.csv", table.str());

  CsvTable state({"level", "re", "im", "population"});
  for (std::size_t i = 0; i < n; ++i) {
    state.add_row({static_cast<double>(i), re[i], im[i], pops[i]});
  }
  job.emit("excite_state.csv", state.str());

  std::ostringstream s;
  s << "gamma = " << format_number(p.gamma) << ": p0 = " << format_number(pops[0])
    << ", p1 = " << format_number(pops[1]) << ", p2 = " << format_number(pops[2])
    << ", p3 = " << format_number(pops[3]) << '\n';
  job.result.summary = s.str();
}

void run_trace(Job& job) {
  const auto model = make_model(job.config);
  const auto& p = job.config.params;
  const std::size_t samples = job.config.grid.samples;
  qeet_trace* raw = nullptr;
  check(qeet_trace_compute(model.get(), &p, samples, job.threads, &raw), "qeet_trace_compute");
  const TraceHandle trace(raw);
  const auto data = read_trace(trace.get());
  const std::size_t d = dimension(model.get());
  for (double e : data.entropy) {
    check_entropy(e, d, "trace");
  }

  double energy_drift = 0.0;
  double norm_drift = 0.0;
  check(qeet_conservation_check(model.get(), &p, samples, &energy_drift, &norm_drift),
        "qeet_conservation_check");
  if (energy_drift > kEnergyTolerance) {
    throw InvariantViolation("energy conservation violated: relative drift " +
                             format_number(energy_drift));
  }
  if (norm_drift > kNormTolerance) {
    throw InvariantViolation("norm conservation violated: drift " + format_number(norm_drift));
  }

  qeet_max_entanglement best{};
  check(qeet_max_entanglement_compute(model.get(), &p, samples, job.threads, &best),
        "qeet_max_entanglement_compute");

  job.emit("trace.csv", trace_csv(data));
  if (job.svg) {
    job.emit("trace.svg",
             svg::render(svg::LinePlot{"Entropy of entanglement, gamma = " + format_number(p.gamma),
                                       "gamma2",
                                       "E (bits)",
                                       {{job.config.model.truncation, data.gamma2, data.entropy}}}));
  }
  std::ostringstream s;
  s << "trace: " << data.gamma2.size() << " samples, " << describe(best) << '\n'
    << "conservation: energy drift " << format_number(energy_drift) << ", norm drift "
    << format_number(norm_drift) << '\n';
  job.result.summary = s.str();
}

void run_sweep_gamma(Job& job) {
  const auto model = make_model(job.config);
  const auto& g = job.config.grid;
  const auto gammas = linspace(g.gamma_min, g.gamma_max, g.gamma_count);
  qeet_sweep* raw = nullptr;
  check(qeet_sweep_gamma(model.get(), &job.config.params, gammas.data(), gammas.size(),
                         g.sweep_samples, job.threads, &raw),
        "qeet_sweep_gamma");
  const SweepHandle sweep(raw);
  const std::size_t d = dimension(model.get());

  CsvTable table({"gamma", "p0", "p1", "p2", "p3", "e_max", "e_max_gamma2"});
  std::vector<svg::Series> series{{"p0", {}, {}}, {"p1", {}, {}}, {"p2", {}, {}},
                                  {"p3", {}, {}}, {"E_max", {}, {}}};
  std::size_t unconverged = 0;
  for (std::size_t i = 0; i < qeet_sweep_size(sweep.get()); ++i) {
    qeet_sweep_row row{};
    check(qeet_sweep_get(sweep.get(), i, &row), "qeet_sweep_get");
    check_populations(std::vector<double>(row.populations, row.populations + 4), "sweep-gamma");
    check_entropy(row.e_max, d, "sweep-gamma");
    table.add_row({row.gamma, row.populations[0], row.populations[1], row.populations[2],
                   row.populations[3], row.e_max, row.e_max_gamma2});
    for (std::size_t k = 0; k < 4; ++k) {
      series[k].x.push_back(row.gamma);
      series[k].y.push_back(row.populations[k]);
    }
    series[4].x.push_back(row.gamma);
    series[4].y.push_back(row.e_max);
    unconverged += row.detail.converged ? 0 : 1;
  }
  job.emit("sweep_gamma.csv", table.str());
  if (job.svg) {
    job.emit("sweep_gamma.svg",
             svg::render(svg::LinePlot{"Populations and maximum entanglement", "gamma",
                                       "p_n, E_max", series}));
  }
  double drop = 0.0;
  std::size_t at = 0;
  check(qeet_sweep_largest_drop(sweep.get(), &drop, &at), "qeet_sweep_largest_drop");
  std::ostringstream s;
  s << "sweep-gamma: " << gammas.size() << " rows over gamma in [" << format_number(g.gamma_min)
    << ", " << format_number(g.gamma_max) << "], largest e_max drop " << format_number(drop);
  if (drop > 0.0) {
    s << " before gamma = " << format_number(gammas[at]);
  }
  s << ", unconverged refinements " << unconverged << '\n';
  job.result.summary = s.str();
}

void run_sweep_surface(Job& job) {
  const auto model = make_model(job.config);
  const auto& g = job.config.grid;
  const auto gammas = linspace(g.gamma_min, g.gamma_max, g.surface_gamma_count);
  qeet_surface* raw = nullptr;
  check(qeet_surface_compute(model.get(), &job.config.params, gammas.data(), gammas.size(),
                             g.surface_samples, job.threads, &raw),
        "qeet_surface_compute");
  const SurfaceHandle surface(raw);
  const std::size_t d = dimension(model.get());

  CsvTable table({"gamma", "gamma2", "entropy"});
  svg::Heatmap map{"Entropy of entanglement over (gamma, gamma2)", "gamma2", "gamma", {}, gammas,
                   {}};
  double peak = 0.0;
  for (std::size_t i = 0; i < qeet_surface_size(surface.get()); ++i) {
    qeet_surface_cell cell{};
    check(qeet_surface_get(surface.get(), i, &cell), "qeet_surface_get");
    check_entropy(cell.entropy, d, "sweep-surface");
    table.add_row({cell.gamma, cell.gamma2, cell.entropy});
    if (i < g.surface_samples) {
      map.x.push_back(cell.gamma2);
    }
    map.values.push_back(cell.entropy);
    peak = std::max(peak, cell.entropy);
  }
  job.emit("surface.csv", table.str());
  if (job.svg) {
    job.emit("surface.svg", svg::render(map));
  }
  std::ostringstream s;
  s << "sweep-surface: " << gammas.size() << " x " << g.surface_samples
    << " cells, largest entropy " << format_number(peak) << '\n';
  job.result.summary = s.str();
}

void run_compare(Job& job) {
  // Truncations are applied here, so the base is always the four-level source.
  RunConfig base = job.config;
  base.model.truncation = "four-level";
  const auto model = make_model(base);
  qeet_comparison* raw = nullptr;
  check(qeet_compare_truncations(model.get(), &job.config.params, job.config.grid.samples,
                                 job.threads, &raw),
        "qeet_compare_truncations");
  const ComparisonHandle cmp(raw);

  CsvTable summary({"truncation", "e_max", "e_max_gamma2", "ratio_to_four_level"});
  svg::LinePlot plot{"Entropy of entanglement by truncation, gamma = " +
                         format_number(job.config.params.gamma),
                     "gamma2", "E (bits)", {}};
  std::ostringstream s;
  double four_level_max = 0.0;
  for (int m = QEET_FOUR_LEVEL; m <= QEET_SINGLE_EXCITON; ++m) {
    const auto mode = static_cast<qeet_truncation>(m);
    const std::string name = qeet_truncation_name(mode);
    const qeet_trace* trace = nullptr;
    check(qeet_comparison_trace(cmp.get(), mode, &trace), "qeet_comparison_trace");
    qeet_max_entanglement best{};
    check(qeet_comparison_maximum(cmp.get(), mode, &best), "qeet_comparison_maximum");
    const auto data = read_trace(trace);
    for (double e : data.entropy) {
      check_entropy(e, qeet_truncation_dimension(mode), "compare-truncations");
    }
    if (mode == QEET_FOUR_LEVEL) {
      four_level_max = best.e_max;
    }
    const double ratio = four_level_max > 0.0 ? best.e_max / four_level_max : 0.0;
    summary.add_row(name, {best.e_max, best.gamma2, ratio});
    job.emit("compare_" + name + ".csv", trace_csv(data));
    plot.series.push_back({name, data.gamma2, data.entropy});
    s << name << ": " << describe(best) << ", ratio to four-level " << format_number(ratio)
      << '\n';
  }
  double deviation = 0.0;
  check(qeet_comparison_max_deviation(cmp.get(), &deviation), "qeet_comparison_max_deviation");
  s << "max pairwise deviation " << format_number(deviation) << '\n';
  job.emit("compare_summary.csv", summary.str());
  if (job.svg) {
    job.emit("compare_truncations.svg", svg::render(plot));
  }
  job.result.summary = s.str();
}

std::string model_block(const qeet_model* model) {
  std::array<double, 8> buf{};
  std::size_t n = 0;
  std::ostringstream out;
  auto list = [&](qeet_status (*get)(const qeet_model*, double*, size_t, size_t*),
                  const char* name) {
    check(get(model, buf.data(), buf.size(), &n), name);
    std::string joined;
    for (std::size_t i = 0; i < n; ++i) {
      joined += (i > 0 ? ", " : "") + format_number(buf[i]);
    }
    return joined;
  };
  double sign = 0.0;
  check(qeet_model_coupling_sign(model, &sign), "qeet_model_coupling_sign");
  out << "[model]\n"
      << "level_ratios = " << list(qeet_model_level_ratios, "qeet_model_level_ratios") << '\n'
      << "dipole_ratios = " << list(qeet_model_dipole_ratios, "qeet_model_dipole_ratios") << '\n'
      << "coupling_ratios = " << list(qeet_model_coupling_ratios, "qeet_model_coupling_ratios")
      << '\n'
      << "truncation = four-level\n"
      << "coupling_sign = " << format_number(sign) << '\n';
  return out.str();
}

void run_estimate(Job& job) {
  qeet_estimation* raw = nullptr;
  check(qeet_estimate(&job.config.estimation, &raw), "qeet_estimate");
  const EstimationHandle est(raw);

  std::vector<std::pair<std::string, double>> entries;
  for (std::size_t i = 0; i < qeet_estimation_entry_count(est.get()); ++i) {
    const char* key = nullptr;
    double value = 0.0;
    check(qeet_estimation_entry(est.get(), i, &key, &value), "qeet_estimation_entry");
    entries.emplace_back(key, value);
  }

  std::string kv;
  for (const auto& [key, value] : entries) {
    kv += key + "=" + format_number(value) + "\n";
  }

  // Text report grouped by the key prefix; assigned values are flagged.
  const std::map<std::string, std::string> titles{
      {"constants", "Physical constants"},
      {"qudit_a", "Qudit A exciton basis (cm^-1, rows = |1>, |2> over sites A1, A2)"},
      {"qudit_b", "Qudit B exciton basis (cm^-1, rows = |1>, |2> over sites B1, B2)"},
      {"levels", "Shared level energies (mean of A and B)"},
      {"couplings", "Inter-qudit couplings (cm^-1 per labelling convention; rad/s for energy order)"},
      {"dipoles", "Transition dipoles (Debye)"},
      {"ratios", "Model ratios (computed unless marked assigned)"}};
  std::ostringstream text;
  text << "Parameter estimation report\n"
       << "Debye = " << format_number(qeet_debye()) << " C m; omega = 2 pi c nu\n";
  std::string current;
  for (const auto& [key, value] : entries) {
    const std::string group = key.substr(0, key.find('.'));
    if (group != current) {
      current = group;
      const auto it = titles.find(group);
      text << "\n== " << (it == titles.end() ? group : it->second) << '\n';
    }
    std::string name = key.substr(key.find('.') + 1);
    const bool assigned = name.size() > 9 && name.ends_with(".assigned");
    if (assigned) {
      name.resize(name.size() - 9);
    }
    text << "  " << name << " = " << format_number(value) << (assigned ? "  [assigned]" : "")
         << '\n';
  }

  qeet_model* model_raw = nullptr;
  check(qeet_estimation_model(est.get(), &model_raw), "qeet_estimation_model");
  const ModelHandle model(model_raw);
  qeet_model* reference_raw = nullptr;
  check(qeet_model_default(&reference_raw), "qeet_model_default");
  const ModelHandle reference(reference_raw);
  text << "\n== Canonical simulation defaults (used unless overridden)\n"
       << model_block(reference.get());

  job.emit("estimate_params.txt", text.str());
  job.emit("estimate_params.kv", kv);
  job.emit("estimated_model.cfg", model_block(model.get()));

  std::ostringstream s;
  for (const auto& [key, value] : entries) {
    if (key.starts_with("ratios.") || key.starts_with("levels.omega1")) {
      s << key << " = " << format_number(value) << '\n';
    }
  }
  job.result.summary = s.str();
}

void run_gamma_from_pulse(Job& job) {
  const auto& ps = job.config.pulse;
  const qeet_pulse pulse{ps.energy_j, ps.duration_s, ps.cross_section_m2,
                         ps.dipole_debye * qeet_debye()};
  double gamma = 0.0;
  check(qeet_gamma_from_pulse(&pulse, &gamma), "qeet_gamma_from_pulse");
  const double rel = ps.reference_gamma > 0.0
                         ? (gamma - ps.reference_gamma) / ps.reference_gamma
                         : 0.0;
  CsvTable table({"formula_gamma", "reference_gamma", "relative_difference"});
  table.add_row({gamma, ps.reference_gamma, rel});
  job.emit("gamma_from_pulse.csv", table.str());
  std::ostringstream s;
  s << "formula gamma = " << format_number(gamma)
    << ", reference gamma = " << format_number(ps.reference_gamma)
    << ", relative difference = " << format_number(rel) << '\n';
  job.result.summary = s.str();
}

const std::map<std::string, std::function<void(Job&)>, std::less<>>& registry() {
  static const std::map<std::string, std::function<void(Job&)>, std::less<>> table{
      {"excite", run_excite},
      {"trace", run_trace},
      {"sweep-gamma", run_sweep_gamma},
      {"sweep-surface", run_sweep_surface},
      {"compare-truncations", run_compare},
      {"estimate-params", run_estimate},
      {"gamma-from-pulse", run_gamma_from_pulse},
  };
  return table;
}

std::string manifest(std::string_view name, const Job& job, const RunOptions& options) {
  std::ostringstream out;
  out << "tool = qudit-eet\n"
      << "library_version = " << qeet_version() << '\n'
      << "subcommand = " << name << '\n'
      << "config = " << (options.config_path.empty() ? "(defaults)" : options.config_path)
      << '\n'
      << "threads = " << job.threads << '\n'
      << "svg = " << (job.svg ? "yes" : "no") << '\n'
      << "\n[outputs]\n";
  for (const auto& f : job.result.files) {
    out << f.filename().string() << '\n';
  }
  out << "\n[defaults_applied]\n";
  for (const auto& key : job.config.defaults_applied) {
    out << key << '\n';
  }
  out << "\n[resolved_config]\n" << serialize_config(job.config);
  return out.str();
}

} // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

RunResult run_subcommand(std::string_view name, const RunConfig& config,
                         const RunOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) {
    throw std::invalid_argument("unknown subcommand '" + std::string(name) + "'");
  }
  Job job{config, options.out_dir.value_or(config.output.directory),
          options.svg || config.output.svg, options.threads.value_or(config.grid.threads), {}};
  std::error_code ec;
  std::filesystem::create_directories(job.dir, ec);
  if (ec || !std::filesystem::is_directory(job.dir)) {
    throw OutputError("cannot create output directory '" + job.dir.string() +
                      "': " + (ec ? ec.message() : "not a directory"));
  }
  job.result.directory = job.dir;
  it->second(job);
  const auto path = job.dir / "manifest.txt";
  job.result.files.push_back(path);
  try {
    write_file(path, manifest(name, job, options));
  } catch (const std::runtime_error& e) {
    throw OutputError(e.what());
  }
  return job.result;
}

int run_cli(std::string_view name, const RunOptions& options, std::ostream& out,
            std::ostream& err) {
  try {
    const RunConfig config =
        options.config_path.empty() ? default_config() : parse_config_file(options.config_path);
    if (!config.defaults_applied.empty()) {
      err << "note: " << config.defaults_applied.size()
          << " config keys not set; using built-in defaults (listed in manifest.txt)\n";
    }
    const RunResult result = run_subcommand(name, config, options);
    out << result.summary;
    out << "wrote " << result.files.size() << " files to " << result.directory.string() << '\n';
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error";
    if (!options.config_path.empty()) {
      err << " in " << options.config_path;
    }
    if (e.line() > 0) {
      err << ":" << e.line();
    }
    if (!e.key().empty()) {
      err << " [" << e.key() << "]";
    }
    err << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const OutputError& e) {
    err << "output error: " << e.what() << '\n';
    return kExitIo;
  } catch (const LibraryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitLibrary;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitLibrary;
  }
}

} // namespace qeet::cli
