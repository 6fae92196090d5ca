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

#include "dynamics.hpp"
#include "entanglement.hpp"
#include "model.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace qeet {

/// 0 selects std::thread::hardware_concurrency(). Results never depend on it.
struct ExecutionOptions {
  unsigned threads = 0;
};

/// Per-model state shared read-only across every gamma of a sweep: the joint
/// generator and its eigendecomposition depend on the model and r only.
class SweepContext {
public:
  SweepContext(const QuditModel& model, const DimensionlessParams& params);

  const QuditModel& model() const { return model_; }
  const DimensionlessParams& params() const { return params_; }
  const PairEvolver& evolver() const { return evolver_; }

  /// Same context with a different degree of excitation.
  DimensionlessParams params_for(double gamma) const;

private:
  QuditModel model_;
  DimensionlessParams params_;
  JointGenerator generator_;
  PairEvolver evolver_;
};

/// prepare -> evolve -> Schmidt -> entropy at every grid point.
EntanglementTrace entanglement_trace(const QuditModel& model, const DimensionlessParams& params,
                                     const EvolutionGrid& grid, ExecutionOptions options = {});
EntanglementTrace entanglement_trace(const SweepContext& context, double gamma,
                                     const EvolutionGrid& grid, ExecutionOptions options = {});

/// Neighbouring samples must differ by less than this for the grid to count
/// as resolving the entropy.
inline constexpr double kMaxNeighbourStep = 0.01;
/// Midpoint insertions tried, at most, when the grid does not resolve the
/// entropy.
inline constexpr std::size_t kMaxDensifications = 4;
/// A refinement pass that raises the maximum by more than this has not
/// converged.
inline constexpr double kRefinementTolerance = 1e-3;
/// Local refinement density relative to the grid.
inline constexpr std::size_t kRefinementFactor = 10;
/// Refined peaks within this of the best are equal; the earliest is reported.
inline constexpr double kPeakTieTolerance = 1e-9;
/// At most this many grid peaks are refined, highest first.
inline constexpr std::size_t kMaxRefinedPeaks = 32;

struct MaxEntanglement {
  double e_max = 0.0;        // refined maximum
  double gamma2 = 0.0;       // refined argmax
  double coarse_e_max = 0.0; // grid maximum
  double coarse_gamma2 = 0.0;
  double max_neighbour_step = 0.0;
  bool grid_resolved = true; // max_neighbour_step < kMaxNeighbourStep
  std::size_t densifications = 0; // midpoint insertions applied to the grid
  std::size_t grid_samples = 0;   // samples in the grid the maximum came from
  bool converged = true;     // e_max - coarse_e_max <= kRefinementTolerance
};

/// Grid maximum plus one refinement pass. A grid whose neighbouring samples
/// differ by kMaxNeighbourStep or more is first densified by midpoint
/// insertion, up to kMaxDensifications times. Every local grid peak within one
/// neighbour step of the grid maximum is resampled at kRefinementFactor x
/// density over its two adjacent intervals, then polished by golden-section
/// search. Equal peaks resolve to the smallest gamma2.
MaxEntanglement max_entanglement(const QuditModel& model, const DimensionlessParams& params,
                                 const EvolutionGrid& grid, ExecutionOptions options = {});
MaxEntanglement max_entanglement(const SweepContext& context, double gamma,
                                 const EvolutionGrid& grid, ExecutionOptions options = {});
/// Refinement of an already computed trace.
MaxEntanglement refine_maximum(const SweepContext& context, const EntanglementTrace& trace,
                               const EvolutionGrid& grid, ExecutionOptions options = {1});

struct GammaSweepRow {
  double gamma = 0.0;
  std::array<double, 4> populations{}; // p0..p3, zero beyond the model dimension
  double e_max = 0.0;
  double e_max_gamma2 = 0.0;
  MaxEntanglement detail;
};

struct GammaSweep {
  std::vector<GammaSweepRow> rows;
  /// Largest drop e_max[i] - e_max[i+1] between consecutive rows (0 when
  /// non-decreasing).
  double largest_e_max_drop = 0.0;
  std::size_t largest_drop_index = 0;
};

GammaSweep sweep_gamma(const QuditModel& model, const DimensionlessParams& params,
                       const std::vector<double>& gammas, const EvolutionGrid& grid,
                       ExecutionOptions options = {});

struct SurfaceCell {
  double gamma;
  double gamma2;
  double entropy;
};

/// Row-major: gamma outer, gamma2 inner.
std::vector<SurfaceCell> sweep_surface(const QuditModel& model, const DimensionlessParams& params,
                                       const std::vector<double>& gammas,
                                       const EvolutionGrid& grid, ExecutionOptions options = {});

inline constexpr std::array<Truncation, 4> kComparedTruncations{
    Truncation::FourLevel, Truncation::ThreeLevel, Truncation::TwoLevel,
    Truncation::SingleExcitonManifold};

struct TruncationComparison {
  std::array<EntanglementTrace, 4> traces; // kComparedTruncations order
  std::array<MaxEntanglement, 4> maxima;
  /// max over grid points and pairs of traces of |E_i - E_j|.
  double max_pairwise_deviation = 0.0;
};

/// `base` must be a four-level model; params.gamma is replaced by `gamma`.
TruncationComparison compare_truncations(const QuditModel& base, double gamma,
                                         const DimensionlessParams& params,
                                         const EvolutionGrid& grid, ExecutionOptions options = {});

/// Evenly spaced values on [lo, hi], `count` >= 1 points.
std::vector<double> linspace(double lo, double hi, std::size_t count);

} // namespace qeet
