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

#include "experiments.hpp"

#include "excitation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qeet {

namespace {

unsigned resolve_threads(ExecutionOptions options, std::size_t work_items) {
  unsigned n = options.threads;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work_items, 1)));
}

// Runs body(i) for i in [0, count) over contiguous chunks. Each index is
// handled by exactly one worker, so per-index results do not depend on the
// thread count.
template <typename Body>
void parallel_for(std::size_t count, ExecutionOptions options, Body&& body) {
  const unsigned workers = resolve_threads(options, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) {
      break;
    }
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) {
          body(i);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

double entropy_at(const PairEvolver& evolver, const PairEvolver::Seed& seed, double gamma2) {
  const std::size_t d = evolver.qudit_dimension();
  return entropy_of_entanglement(schmidt_values(evolver.state_at(seed, gamma2), {d, d}));
}

// Shared by traces, sweeps and the surface so that every path produces
// bit-identical entropies for the same (model, gamma, gamma2).
std::vector<TraceSample> entropy_series(const SweepContext& context, double gamma,
                                        const std::vector<double>& gamma2_values,
                                        ExecutionOptions options) {
  const auto psi_a = prepare_initial_state(context.model(), context.params_for(gamma));
  const auto seed = context.evolver().seed(psi_a);
  std::vector<TraceSample> out(gamma2_values.size());
  parallel_for(gamma2_values.size(), options, [&](std::size_t i) {
    out[i] = TraceSample{gamma2_values[i], entropy_at(context.evolver(), seed, gamma2_values[i])};
  });
  return out;
}

} // namespace

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) {
    throw std::invalid_argument("linspace: count must be >= 1");
  }
  std::vector<double> out(count, lo);
  for (std::size_t i = 1; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  if (count > 1) {
    out.back() = hi;
  }
  return out;
}

SweepContext::SweepContext(const QuditModel& model, const DimensionlessParams& params)
    : model_(model), params_(params), generator_(build_joint_generator(model)),
      evolver_(generator_, params.r) {
  validate(params_);
}

DimensionlessParams SweepContext::params_for(double gamma) const {
  DimensionlessParams p = params_;
  p.gamma = gamma;
  validate(p);
  return p;
}

EntanglementTrace entanglement_trace(const SweepContext& context, double gamma,
                                     const EvolutionGrid& grid, ExecutionOptions options) {
  EntanglementTrace trace;
  trace.gamma = gamma;
  trace.truncation = context.model().truncation;
  trace.samples = entropy_series(context, gamma, grid.values(), options);
  return trace;
}

EntanglementTrace entanglement_trace(const QuditModel& model, const DimensionlessParams& params,
                                     const EvolutionGrid& grid, ExecutionOptions options) {
  const SweepContext context(model, params);
  return entanglement_trace(context, params.gamma, grid, options);
}

namespace {

struct Peak {
  double gamma2;
  double entropy;
};

// Golden-section search for the maximum on [lo, hi], seeded with a sample.
Peak polish(const PairEvolver& evolver, const PairEvolver::Seed& seed, double lo, double hi,
            Peak best) {
  constexpr double kInvPhi = 0.6180339887498949;
  constexpr int kIterations = 60;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = entropy_at(evolver, seed, c);
  double fd = entropy_at(evolver, seed, d);
  for (int it = 0; it < kIterations && b - a > 1e-12; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = entropy_at(evolver, seed, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = entropy_at(evolver, seed, d);
    }
  }
  for (const Peak p : {Peak{c, fc}, Peak{d, fd}}) {
    if (p.entropy > best.entropy) {
      best = p;
    }
  }
  return best;
}

Peak refine_peak(const PairEvolver& evolver, const PairEvolver::Seed& seed,
                 const std::vector<double>& g, std::size_t at, double entropy) {
  const double lo = g[at > 0 ? at - 1 : 0];
  const double hi = g[std::min(at + 1, g.size() - 1)];
  const std::size_t intervals = (at > 0 ? 1 : 0) + (at + 1 < g.size() ? 1 : 0);
  const auto local = linspace(lo, hi, intervals * kRefinementFactor + 1);
  Peak best{g[at], entropy};
  std::size_t best_local = 0;
  bool moved = false;
  for (std::size_t k = 0; k < local.size(); ++k) {
    const double e = entropy_at(evolver, seed, local[k]);
    if (e > best.entropy) {
      best = Peak{local[k], e};
      best_local = k;
      moved = true;
    }
  }
  if (!moved) {
    best_local = static_cast<std::size_t>(
        std::lower_bound(local.begin(), local.end(), g[at]) - local.begin());
    best_local = std::min(best_local, local.size() - 1);
  }
  const double a = local[best_local > 0 ? best_local - 1 : 0];
  const double b = local[std::min(best_local + 1, local.size() - 1)];
  return polish(evolver, seed, a, b, best);
}

double largest_step(const EntanglementTrace& trace) {
  double step = 0.0;
  for (std::size_t i = 1; i < trace.samples.size(); ++i) {
    step = std::max(step, std::abs(trace.samples[i].entropy - trace.samples[i - 1].entropy));
  }
  return step;
}

} // namespace

MaxEntanglement refine_maximum(const SweepContext& context, const EntanglementTrace& trace,
                               const EvolutionGrid& grid, ExecutionOptions options) {
  if (trace.samples.empty()) {
    throw std::invalid_argument("refine_maximum: empty trace");
  }
  if (trace.samples.size() != grid.count()) {
    throw std::invalid_argument("refine_maximum: trace and grid sizes differ");
  }
  MaxEntanglement out;
  out.max_neighbour_step = largest_step(trace);
  const EntanglementTrace* current = &trace;
  EntanglementTrace dense;
  EvolutionGrid g = grid;
  while (out.max_neighbour_step >= kMaxNeighbourStep && out.densifications < kMaxDensifications &&
         g.count() > 1) {
    g = g.refined();
    dense = entanglement_trace(context, trace.gamma, g, options);
    current = &dense;
    out.max_neighbour_step = largest_step(dense);
    ++out.densifications;
  }
  const auto& samples = current->samples;
  out.grid_samples = samples.size();
  out.grid_resolved = out.max_neighbour_step < kMaxNeighbourStep;

  std::size_t best = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].entropy > samples[best].entropy) {
      best = i;
    }
  }
  out.coarse_e_max = samples[best].entropy;
  out.coarse_gamma2 = samples[best].gamma2;
  out.e_max = out.coarse_e_max;
  out.gamma2 = out.coarse_gamma2;
  if (samples.size() < 2) {
    return out;
  }

  // Local grid peaks close enough to the maximum to overtake it once refined.
  const double floor = out.coarse_e_max - out.max_neighbour_step;
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double e = samples[i].entropy;
    const bool rises = i == 0 || e > samples[i - 1].entropy;
    const bool holds = i + 1 == samples.size() || e >= samples[i + 1].entropy;
    if ((rises && holds && e >= floor) || i == best) {
      peaks.push_back(i);
    }
  }
  if (peaks.size() > kMaxRefinedPeaks) {
    std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t x, std::size_t y) {
      return samples[x].entropy > samples[y].entropy;
    });
    peaks.resize(kMaxRefinedPeaks);
    if (std::find(peaks.begin(), peaks.end(), best) == peaks.end()) {
      peaks.back() = best;
    }
    std::sort(peaks.begin(), peaks.end());
  }

  const auto psi_a = prepare_initial_state(context.model(), context.params_for(trace.gamma));
  const auto seed = context.evolver().seed(psi_a);
  std::vector<Peak> refined;
  refined.reserve(peaks.size());
  double top = out.coarse_e_max;
  for (std::size_t i : peaks) {
    refined.push_back(refine_peak(context.evolver(), seed, g.values(), i, samples[i].entropy));
    top = std::max(top, refined.back().entropy);
  }
  for (const Peak& p : refined) {
    if (p.entropy >= top - kPeakTieTolerance) {
      out.e_max = std::max(p.entropy, out.coarse_e_max);
      out.gamma2 = p.gamma2;
      break;
    }
  }
  out.converged = out.e_max - out.coarse_e_max <= kRefinementTolerance;
  return out;
}

MaxEntanglement max_entanglement(const SweepContext& context, double gamma,
                                 const EvolutionGrid& grid, ExecutionOptions options) {
  return refine_maximum(context, entanglement_trace(context, gamma, grid, options), grid, options);
}

MaxEntanglement max_entanglement(const QuditModel& model, const DimensionlessParams& params,
                                 const EvolutionGrid& grid, ExecutionOptions options) {
  const SweepContext context(model, params);
  return max_entanglement(context, params.gamma, grid, options);
}

GammaSweep sweep_gamma(const QuditModel& model, const DimensionlessParams& params,
                       const std::vector<double>& gammas, const EvolutionGrid& grid,
                       ExecutionOptions options) {
  const SweepContext context(model, params);
  GammaSweep sweep;
  sweep.rows.resize(gammas.size());
  parallel_for(gammas.size(), options, [&](std::size_t i) {
    GammaSweepRow& row = sweep.rows[i];
    row.gamma = gammas[i];
    const auto pops = populations(prepare_initial_state(model, context.params_for(gammas[i])));
    std::copy(pops.begin(), pops.end(), row.populations.begin());
    const auto trace = entanglement_trace(context, gammas[i], grid, ExecutionOptions{1});
    row.detail = refine_maximum(context, trace, grid);
    row.e_max = row.detail.e_max;
    row.e_max_gamma2 = row.detail.gamma2;
  });
  for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
    const double drop = sweep.rows[i - 1].e_max - sweep.rows[i].e_max;
    if (drop > sweep.largest_e_max_drop) {
      sweep.largest_e_max_drop = drop;
      sweep.largest_drop_index = i;
    }
  }
  return sweep;
}

std::vector<SurfaceCell> sweep_surface(const QuditModel& model, const DimensionlessParams& params,
                                       const std::vector<double>& gammas,
                                       const EvolutionGrid& grid, ExecutionOptions options) {
  const SweepContext context(model, params);
  const std::size_t width = grid.count();
  std::vector<SurfaceCell> cells(gammas.size() * width);
  parallel_for(gammas.size(), options, [&](std::size_t i) {
    const auto trace = entanglement_trace(context, gammas[i], grid, ExecutionOptions{1});
    for (std::size_t j = 0; j < width; ++j) {
      cells[i * width + j] = SurfaceCell{gammas[i], trace.samples[j].gamma2, trace.samples[j].entropy};
    }
  });
  return cells;
}

TruncationComparison compare_truncations(const QuditModel& base, double gamma,
                                         const DimensionlessParams& params,
                                         const EvolutionGrid& grid, ExecutionOptions options) {
  TruncationComparison out;
  DimensionlessParams p = params;
  p.gamma = gamma;
  for (std::size_t k = 0; k < kComparedTruncations.size(); ++k) {
    const SweepContext context(truncate(base, kComparedTruncations[k]), p);
    out.traces[k] = entanglement_trace(context, gamma, grid, options);
    out.maxima[k] = refine_maximum(context, out.traces[k], grid);
  }
  for (std::size_t a = 0; a < out.traces.size(); ++a) {
    for (std::size_t b = a + 1; b < out.traces.size(); ++b) {
      for (std::size_t i = 0; i < grid.count(); ++i) {
        out.max_pairwise_deviation =
            std::max(out.max_pairwise_deviation, std::abs(out.traces[a].samples[i].entropy -
                                                          out.traces[b].samples[i].entropy));
      }
    }
  }
  return out;
}

} // namespace qeet
