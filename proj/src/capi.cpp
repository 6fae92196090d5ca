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

#include "qudit_eet/qudit_eet.h"

#include "dynamics.hpp"
#include "estimation.hpp"
#include "excitation.hpp"
#include "experiments.hpp"
#include "model.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <cmath>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

struct qeet_model {
  qeet::QuditModel value;
};

struct qeet_trace {
  qeet::EntanglementTrace value;
};

struct qeet_sweep {
  qeet::GammaSweep value;
};

struct qeet_surface {
  std::vector<qeet::SurfaceCell> cells;
};

struct qeet_comparison {
  std::array<qeet_trace, 4> traces;
  qeet::TruncationComparison value;
};

struct qeet_estimation {
  qeet::estimation::EstimationReport report;
  std::vector<std::pair<std::string, double>> entries;
};

namespace {

thread_local std::string last_error;

qeet_status fail(qeet_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Exception boundary: nothing may propagate into C callers.
template <typename Fn>
qeet_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(QEET_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(QEET_OUT_OF_RANGE, e.what());
  } catch (const std::runtime_error& e) {
    return fail(QEET_NUMERICAL_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QEET_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(QEET_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(QEET_INTERNAL_ERROR, "unknown error");
  }
}

#define QEET_REQUIRE(ptr)                                                                    \
  do {                                                                                       \
    if ((ptr) == nullptr) {                                                                  \
      return fail(QEET_NULL_POINTER, std::string(__func__) + ": " #ptr " is NULL");          \
    }                                                                                        \
  } while (0)

qeet::Truncation to_core(qeet_truncation mode) {
  switch (mode) {
  case QEET_FOUR_LEVEL:
    return qeet::Truncation::FourLevel;
  case QEET_THREE_LEVEL:
    return qeet::Truncation::ThreeLevel;
  case QEET_TWO_LEVEL:
    return qeet::Truncation::TwoLevel;
  case QEET_SINGLE_EXCITON:
    return qeet::Truncation::SingleExcitonManifold;
  }
  throw std::invalid_argument("unknown truncation mode " + std::to_string(static_cast<int>(mode)));
}

qeet_truncation to_c(qeet::Truncation mode) {
  switch (mode) {
  case qeet::Truncation::FourLevel:
    return QEET_FOUR_LEVEL;
  case qeet::Truncation::ThreeLevel:
    return QEET_THREE_LEVEL;
  case qeet::Truncation::TwoLevel:
    return QEET_TWO_LEVEL;
  case qeet::Truncation::SingleExcitonManifold:
    return QEET_SINGLE_EXCITON;
  }
  return QEET_FOUR_LEVEL;
}

qeet::DimensionlessParams to_core(const qeet_params& p) {
  qeet::DimensionlessParams out{p.gamma, p.delta, p.gamma2_max, p.r, p.drive_ratio};
  qeet::validate(out);
  return out;
}

qeet_max_entanglement to_c(const qeet::MaxEntanglement& m) {
  return qeet_max_entanglement{m.e_max,
                               m.gamma2,
                               m.coarse_e_max,
                               m.coarse_gamma2,
                               m.max_neighbour_step,
                               m.grid_resolved ? 1 : 0,
                               m.converged ? 1 : 0,
                               m.densifications,
                               m.grid_samples};
}

qeet_status copy_out(const std::vector<double>& values, double* buffer, size_t capacity,
                     size_t* count) {
  QEET_REQUIRE(count);
  *count = values.size();
  if (capacity < values.size()) {
    return fail(QEET_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(capacity) +
                                           " values, " + std::to_string(values.size()) +
                                           " needed");
  }
  QEET_REQUIRE(buffer);
  std::copy(values.begin(), values.end(), buffer);
  return QEET_OK;
}

std::vector<double> from_c_array(const double* data, size_t count, const char* name) {
  if (count > 0 && data == nullptr) {
    throw std::invalid_argument(std::string(name) + " is NULL");
  }
  return std::vector<double>(data, data + count);
}

qeet::EvolutionGrid grid_for(const qeet::DimensionlessParams& p, size_t samples) {
  return qeet::EvolutionGrid::uniform(p.gamma2_max, samples);
}

} // namespace

extern "C" {

const char* qeet_version(void) { return QEET_VERSION_STRING; }

const char* qeet_last_error(void) { return last_error.c_str(); }

const char* qeet_status_string(qeet_status status) {
  switch (status) {
  case QEET_OK:
    return "ok";
  case QEET_INVALID_ARGUMENT:
    return "invalid argument";
  case QEET_NULL_POINTER:
    return "null pointer";
  case QEET_BUFFER_TOO_SMALL:
    return "buffer too small";
  case QEET_OUT_OF_RANGE:
    return "index out of range";
  case QEET_NUMERICAL_ERROR:
    return "numerical error";
  case QEET_INTERNAL_ERROR:
    return "internal error";
  }
  return "unknown status";
}

const char* qeet_truncation_name(qeet_truncation mode) {
  try {
    return qeet::to_string(to_core(mode)).data();
  } catch (...) {
    return "unknown";
  }
}

size_t qeet_truncation_dimension(qeet_truncation mode) {
  try {
    return qeet::dimension_of(to_core(mode));
  } catch (...) {
    return 0;
  }
}

qeet_status qeet_model_default(qeet_model** out) {
  QEET_REQUIRE(out);
  return guarded([&] {
    *out = new qeet_model{qeet::default_model()};
    return QEET_OK;
  });
}

qeet_status qeet_model_create(const double* level_ratios, size_t level_count,
                              const double* dipole_ratios, size_t dipole_count,
                              const double* coupling_ratios, size_t coupling_count,
                              double coupling_sign, qeet_truncation mode, qeet_model** out) {
  QEET_REQUIRE(out);
  return guarded([&] {
    qeet::QuditModel m;
    m.level_ratios = from_c_array(level_ratios, level_count, "level_ratios");
    m.dipole_ratios = from_c_array(dipole_ratios, dipole_count, "dipole_ratios");
    m.coupling_ratios = from_c_array(coupling_ratios, coupling_count, "coupling_ratios");
    m.coupling_sign = coupling_sign;
    m.truncation = to_core(mode);
    qeet::validate(m);
    *out = new qeet_model{std::move(m)};
    return QEET_OK;
  });
}

qeet_status qeet_model_truncate(const qeet_model* model, qeet_truncation mode, qeet_model** out) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(out);
  return guarded([&] {
    *out = new qeet_model{qeet::truncate(model->value, to_core(mode))};
    return QEET_OK;
  });
}

void qeet_model_destroy(qeet_model* model) { delete model; }

qeet_status qeet_model_truncation(const qeet_model* model, qeet_truncation* out) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(out);
  *out = to_c(model->value.truncation);
  return QEET_OK;
}

qeet_status qeet_model_dimension(const qeet_model* model, size_t* out) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(out);
  *out = model->value.dimension();
  return QEET_OK;
}

qeet_status qeet_model_coupling_sign(const qeet_model* model, double* out) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(out);
  *out = model->value.coupling_sign;
  return QEET_OK;
}

qeet_status qeet_model_level_ratios(const qeet_model* model, double* buffer, size_t capacity,
                                    size_t* count) {
  QEET_REQUIRE(model);
  return copy_out(model->value.level_ratios, buffer, capacity, count);
}

qeet_status qeet_model_dipole_ratios(const qeet_model* model, double* buffer, size_t capacity,
                                     size_t* count) {
  QEET_REQUIRE(model);
  return copy_out(model->value.dipole_ratios, buffer, capacity, count);
}

qeet_status qeet_model_coupling_ratios(const qeet_model* model, double* buffer, size_t capacity,
                                       size_t* count) {
  QEET_REQUIRE(model);
  return copy_out(model->value.coupling_ratios, buffer, capacity, count);
}

qeet_status qeet_params_default(qeet_params* out) {
  QEET_REQUIRE(out);
  const auto p = qeet::default_params();
  *out = qeet_params{p.gamma, p.delta, p.gamma2_max, p.r, p.drive_ratio};
  return QEET_OK;
}

qeet_status qeet_params_validate(const qeet_params* params) {
  QEET_REQUIRE(params);
  return guarded([&] {
    to_core(*params);
    return QEET_OK;
  });
}

qeet_status qeet_prepare_initial_state(const qeet_model* model, const qeet_params* params,
                                       double* re, double* im, size_t capacity, size_t* count) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(params);
  QEET_REQUIRE(count);
  return guarded([&] {
    const auto psi = qeet::prepare_initial_state(model->value, to_core(*params));
    const auto n = static_cast<size_t>(psi.size());
    *count = n;
    if (capacity < n) {
      return fail(QEET_BUFFER_TOO_SMALL, "state needs " + std::to_string(n) + " entries");
    }
    QEET_REQUIRE(re);
    QEET_REQUIRE(im);
    for (size_t i = 0; i < n; ++i) {
      re[i] = psi(static_cast<Eigen::Index>(i)).real();
      im[i] = psi(static_cast<Eigen::Index>(i)).imag();
    }
    return QEET_OK;
  });
}

qeet_status qeet_initial_populations(const qeet_model* model, const qeet_params* params,
                                     double* buffer, size_t capacity, size_t* count) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(params);
  return guarded([&] {
    const auto pops =
        qeet::populations(qeet::prepare_initial_state(model->value, to_core(*params)));
    return copy_out(pops, buffer, capacity, count);
  });
}

qeet_status qeet_trace_compute(const qeet_model* model, const qeet_params* params, size_t samples,
                               unsigned threads, qeet_trace** out) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(params);
  QEET_REQUIRE(out);
  return guarded([&] {
    const auto p = to_core(*params);
    *out = new qeet_trace{
        qeet::entanglement_trace(model->value, p, grid_for(p, samples), {threads})};
    return QEET_OK;
  });
}

void qeet_trace_destroy(qeet_trace* trace) { delete trace; }

size_t qeet_trace_size(const qeet_trace* trace) {
  return trace == nullptr ? 0 : trace->value.samples.size();
}

double qeet_trace_gamma(const qeet_trace* trace) {
  return trace == nullptr ? 0.0 : trace->value.gamma;
}

qeet_status qeet_trace_sample(const qeet_trace* trace, size_t index, double* gamma2,
                              double* entropy) {
  QEET_REQUIRE(trace);
  QEET_REQUIRE(gamma2);
  QEET_REQUIRE(entropy);
  if (index >= trace->value.samples.size()) {
    return fail(QEET_OUT_OF_RANGE, "trace index " + std::to_string(index) + " out of range");
  }
  *gamma2 = trace->value.samples[index].gamma2;
  *entropy = trace->value.samples[index].entropy;
  return QEET_OK;
}

qeet_status qeet_max_entanglement_compute(const qeet_model* model, const qeet_params* params,
                                          size_t samples, unsigned threads,
                                          qeet_max_entanglement* out) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(params);
  QEET_REQUIRE(out);
  return guarded([&] {
    const auto p = to_core(*params);
    *out = to_c(qeet::max_entanglement(model->value, p, grid_for(p, samples), {threads}));
    return QEET_OK;
  });
}

qeet_status qeet_conservation_check(const qeet_model* model, const qeet_params* params,
                                    size_t samples, double* max_energy_drift,
                                    double* max_norm_drift) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(params);
  QEET_REQUIRE(max_energy_drift);
  QEET_REQUIRE(max_norm_drift);
  return guarded([&] {
    const auto p = to_core(*params);
    const qeet::PairEvolver evolver(qeet::build_joint_generator(model->value), p.r);
    const auto seed = evolver.seed(qeet::prepare_initial_state(model->value, p));
    const double e0 = evolver.energy(seed.initial());
    const double scale = std::max(std::abs(e0), 1.0);
    double energy_drift = 0.0;
    double norm_drift = 0.0;
    for (double g2 : grid_for(p, samples).values()) {
      const auto psi = evolver.state_at(seed, g2);
      energy_drift = std::max(energy_drift, std::abs(evolver.energy(psi) - e0) / scale);
      norm_drift = std::max(norm_drift, std::abs(psi.norm() - 1.0));
    }
    *max_energy_drift = energy_drift;
    *max_norm_drift = norm_drift;
    return QEET_OK;
  });
}

qeet_status qeet_sweep_gamma(const qeet_model* model, const qeet_params* params,
                             const double* gammas, size_t gamma_count, size_t samples,
                             unsigned threads, qeet_sweep** out) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(params);
  QEET_REQUIRE(out);
  return guarded([&] {
    const auto p = to_core(*params);
    *out = new qeet_sweep{qeet::sweep_gamma(model->value, p,
                                            from_c_array(gammas, gamma_count, "gammas"),
                                            grid_for(p, samples), {threads})};
    return QEET_OK;
  });
}

void qeet_sweep_destroy(qeet_sweep* sweep) { delete sweep; }

size_t qeet_sweep_size(const qeet_sweep* sweep) {
  return sweep == nullptr ? 0 : sweep->value.rows.size();
}

qeet_status qeet_sweep_get(const qeet_sweep* sweep, size_t index, qeet_sweep_row* out) {
  QEET_REQUIRE(sweep);
  QEET_REQUIRE(out);
  if (index >= sweep->value.rows.size()) {
    return fail(QEET_OUT_OF_RANGE, "sweep index " + std::to_string(index) + " out of range");
  }
  const auto& row = sweep->value.rows[index];
  qeet_sweep_row r{};
  r.gamma = row.gamma;
  std::copy(row.populations.begin(), row.populations.end(), r.populations);
  r.e_max = row.e_max;
  r.e_max_gamma2 = row.e_max_gamma2;
  r.detail = to_c(row.detail);
  *out = r;
  return QEET_OK;
}

qeet_status qeet_sweep_largest_drop(const qeet_sweep* sweep, double* drop, size_t* index) {
  QEET_REQUIRE(sweep);
  QEET_REQUIRE(drop);
  QEET_REQUIRE(index);
  *drop = sweep->value.largest_e_max_drop;
  *index = sweep->value.largest_drop_index;
  return QEET_OK;
}

qeet_status qeet_surface_compute(const qeet_model* model, const qeet_params* params,
                                 const double* gammas, size_t gamma_count, size_t samples,
                                 unsigned threads, qeet_surface** out) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(params);
  QEET_REQUIRE(out);
  return guarded([&] {
    const auto p = to_core(*params);
    *out = new qeet_surface{qeet::sweep_surface(model->value, p,
                                                from_c_array(gammas, gamma_count, "gammas"),
                                                grid_for(p, samples), {threads})};
    return QEET_OK;
  });
}

void qeet_surface_destroy(qeet_surface* surface) { delete surface; }

size_t qeet_surface_size(const qeet_surface* surface) {
  return surface == nullptr ? 0 : surface->cells.size();
}

qeet_status qeet_surface_get(const qeet_surface* surface, size_t index, qeet_surface_cell* out) {
  QEET_REQUIRE(surface);
  QEET_REQUIRE(out);
  if (index >= surface->cells.size()) {
    return fail(QEET_OUT_OF_RANGE, "surface index " + std::to_string(index) + " out of range");
  }
  const auto& c = surface->cells[index];
  *out = qeet_surface_cell{c.gamma, c.gamma2, c.entropy};
  return QEET_OK;
}

qeet_status qeet_compare_truncations(const qeet_model* model, const qeet_params* params,
                                     size_t samples, unsigned threads, qeet_comparison** out) {
  QEET_REQUIRE(model);
  QEET_REQUIRE(params);
  QEET_REQUIRE(out);
  return guarded([&] {
    const auto p = to_core(*params);
    auto cmp = std::make_unique<qeet_comparison>();
    cmp->value =
        qeet::compare_truncations(model->value, p.gamma, p, grid_for(p, samples), {threads});
    for (size_t k = 0; k < cmp->traces.size(); ++k) {
      cmp->traces[k].value = cmp->value.traces[k];
    }
    *out = cmp.release();
    return QEET_OK;
  });
}

void qeet_comparison_destroy(qeet_comparison* comparison) { delete comparison; }

qeet_status qeet_comparison_trace(const qeet_comparison* comparison, qeet_truncation mode,
                                  const qeet_trace** out) {
  QEET_REQUIRE(comparison);
  QEET_REQUIRE(out);
  return guarded([&] {
    *out = &comparison->traces.at(static_cast<size_t>(to_core(mode)));
    return QEET_OK;
  });
}

qeet_status qeet_comparison_maximum(const qeet_comparison* comparison, qeet_truncation mode,
                                    qeet_max_entanglement* out) {
  QEET_REQUIRE(comparison);
  QEET_REQUIRE(out);
  return guarded([&] {
    *out = to_c(comparison->value.maxima.at(static_cast<size_t>(to_core(mode))));
    return QEET_OK;
  });
}

qeet_status qeet_comparison_max_deviation(const qeet_comparison* comparison, double* out) {
  QEET_REQUIRE(comparison);
  QEET_REQUIRE(out);
  *out = comparison->value.max_pairwise_deviation;
  return QEET_OK;
}

qeet_status qeet_estimation_inputs_default(qeet_estimation_inputs* out) {
  QEET_REQUIRE(out);
  const auto in = qeet::estimation::default_inputs();
  qeet_estimation_inputs c{};
  c.block_a[0] = in.block_a.site_energies[0];
  c.block_a[1] = in.block_a.site_energies[1];
  c.block_a[2] = in.block_a.coupling;
  c.block_b[0] = in.block_b.site_energies[0];
  c.block_b[1] = in.block_b.site_energies[1];
  c.block_b[2] = in.block_b.coupling;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      c.site_coupling[i * 4 + j] = in.site_coupling(i, j);
    }
    for (int k = 0; k < 3; ++k) {
      c.site_dipoles[i][k] = in.site_dipoles[static_cast<size_t>(i)](k);
    }
    c.assigned_couplings[i] = in.assigned_couplings[static_cast<size_t>(i)];
  }
  c.level3_ratio = in.level3_ratio;
  c.dipole31_ratio = in.dipole31_ratio;
  *out = c;
  return QEET_OK;
}

qeet_status qeet_estimate(const qeet_estimation_inputs* inputs, qeet_estimation** out) {
  QEET_REQUIRE(inputs);
  QEET_REQUIRE(out);
  return guarded([&] {
    qeet::estimation::EstimationInputs in;
    in.block_a = {{inputs->block_a[0], inputs->block_a[1]}, inputs->block_a[2]};
    in.block_b = {{inputs->block_b[0], inputs->block_b[1]}, inputs->block_b[2]};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        in.site_coupling(i, j) = inputs->site_coupling[i * 4 + j];
      }
      in.site_dipoles[static_cast<size_t>(i)] = qeet::estimation::Vec3(
          inputs->site_dipoles[i][0], inputs->site_dipoles[i][1], inputs->site_dipoles[i][2]);
      in.assigned_couplings[static_cast<size_t>(i)] = inputs->assigned_couplings[i];
    }
    in.level3_ratio = inputs->level3_ratio;
    in.dipole31_ratio = inputs->dipole31_ratio;
    auto est = std::make_unique<qeet_estimation>();
    est->report = qeet::estimation::estimate_table1(in);
    est->entries = qeet::estimation::report_entries(est->report);
    *out = est.release();
    return QEET_OK;
  });
}

void qeet_estimation_destroy(qeet_estimation* estimation) { delete estimation; }

qeet_status qeet_estimation_model(const qeet_estimation* estimation, qeet_model** out) {
  QEET_REQUIRE(estimation);
  QEET_REQUIRE(out);
  return guarded([&] {
    *out = new qeet_model{estimation->report.model};
    return QEET_OK;
  });
}

size_t qeet_estimation_entry_count(const qeet_estimation* estimation) {
  return estimation == nullptr ? 0 : estimation->entries.size();
}

qeet_status qeet_estimation_entry(const qeet_estimation* estimation, size_t index,
                                  const char** key, double* value) {
  QEET_REQUIRE(estimation);
  QEET_REQUIRE(key);
  QEET_REQUIRE(value);
  if (index >= estimation->entries.size()) {
    return fail(QEET_OUT_OF_RANGE, "entry index " + std::to_string(index) + " out of range");
  }
  *key = estimation->entries[index].first.c_str();
  *value = estimation->entries[index].second;
  return QEET_OK;
}

qeet_status qeet_pulse_default(qeet_pulse* out) {
  QEET_REQUIRE(out);
  const auto p = qeet::estimation::default_pulse();
  *out = qeet_pulse{p.energy, p.duration, p.cross_section, p.dipole};
  return QEET_OK;
}

qeet_status qeet_gamma_from_pulse(const qeet_pulse* pulse, double* gamma) {
  QEET_REQUIRE(pulse);
  QEET_REQUIRE(gamma);
  return guarded([&] {
    *gamma = qeet::estimation::gamma_from_pulse(
        {pulse->energy, pulse->duration, pulse->cross_section, pulse->dipole});
    return QEET_OK;
  });
}

double qeet_wavenumber_to_angular(double wavenumber) {
  return qeet::estimation::wavenumber_to_angular(wavenumber);
}

double qeet_debye(void) { return qeet::estimation::constants::kDebye; }

} // extern "C"
