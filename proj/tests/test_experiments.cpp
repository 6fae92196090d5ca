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

#include "doctest.h"
#include "oracles.hpp"

#include "experiments.hpp"

#include <cmath>
#include <numbers>

using namespace qeet;

namespace {

QuditModel single() {
  return truncate(default_model(), Truncation::SingleExcitonManifold);
}

} // namespace

TEST_CASE("no drive keeps the pair separable") {
  auto p = default_params();
  p.gamma = 0.0;
  const auto t = entanglement_trace(default_model(), p, EvolutionGrid::uniform(5.0, 2001));
  for (const auto& s : t.samples) {
    CHECK(s.entropy < 1e-9);
  }
}

TEST_CASE("single-exciton trace is the binary entropy of cos^2") {
  const auto grid = EvolutionGrid::uniform(5.0, 10001);
  const auto t = entanglement_trace(single(), default_params(), grid);
  REQUIRE(t.samples.size() == grid.count());
  double worst = 0.0;
  for (const auto& s : t.samples) {
    const double c = std::cos(s.gamma2);
    worst = std::max(worst, std::abs(s.entropy - oracle::binary_entropy(c * c)));
  }
  CHECK(worst < 1e-9);
  const auto best = max_entanglement(single(), default_params(), grid);
  CHECK(std::abs(best.e_max - 1.0) < 1e-6);
  CHECK(std::abs(best.gamma2 - std::numbers::pi / 4.0) < 1e-4);
  CHECK(best.converged);
}

TEST_CASE("four-level maxima in the strong and weak limits") {
  auto p = default_params();
  const auto grid = EvolutionGrid::uniform(5.0, 20001);
  p.gamma = 3.0;
  const auto strong = max_entanglement(default_model(), p, grid);
  CHECK(strong.e_max > 0.9);
  CHECK(strong.e_max < 1.1);
  p.gamma = 1e-6;
  CHECK(max_entanglement(default_model(), p, grid).e_max < 1e-6);
}

TEST_CASE("refinement never lowers the grid maximum") {
  const auto grid = EvolutionGrid::uniform(5.0, 501);
  const auto best = max_entanglement(default_model(), default_params(), grid);
  CHECK(best.e_max >= best.coarse_e_max);
  CHECK(best.max_neighbour_step >= 0.0);
}

TEST_CASE("trace equals surface cross-section bit-exactly") {
  const auto grid = EvolutionGrid::uniform(5.0, 801);
  const std::vector<double> gammas{0.0, 0.2, 0.41, 1.0};
  const auto surface = sweep_surface(default_model(), default_params(), gammas, grid, {2});
  REQUIRE(surface.size() == gammas.size() * grid.count());
  const auto trace = entanglement_trace(default_model(), default_params(), grid);
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const auto& cell = surface[2 * grid.count() + i];
    CHECK(cell.gamma == 0.41);
    CHECK(cell.gamma2 == trace.samples[i].gamma2);
    CHECK(cell.entropy == trace.samples[i].entropy);
  }
  for (std::size_t i = 0; i < grid.count(); ++i) {
    CHECK(surface[i].entropy < 1e-9);
  }
  for (const auto& cell : surface) {
    CHECK(cell.entropy >= 0.0);
    CHECK(cell.entropy <= 2.0);
  }
}

TEST_CASE("results do not depend on thread count") {
  const auto grid = EvolutionGrid::uniform(5.0, 401);
  const auto gammas = linspace(0.0, 4.0, 9);
  const auto one = sweep_surface(default_model(), default_params(), gammas, grid, {1});
  const auto many = sweep_surface(default_model(), default_params(), gammas, grid, {3});
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].entropy == many[i].entropy);
  }
  const auto s1 = sweep_gamma(default_model(), default_params(), gammas, grid, {1});
  const auto s4 = sweep_gamma(default_model(), default_params(), gammas, grid, {4});
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    CHECK(s1.rows[i].e_max == s4.rows[i].e_max);
    CHECK(s1.rows[i].populations == s4.rows[i].populations);
  }
}

TEST_CASE("gamma sweep rows") {
  const auto grid = EvolutionGrid::uniform(5.0, 4001);
  const std::vector<double> gammas{0.0, 0.25, 0.5, 0.75, 3.0};
  const auto sweep = sweep_gamma(default_model(), default_params(), gammas, grid);
  REQUIRE(sweep.rows.size() == gammas.size());
  CHECK(sweep.rows[0].populations[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sweep.rows[0].e_max < 1e-9);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(sweep.rows[i].e_max >= sweep.rows[i - 1].e_max - 0.02);
  }
  CHECK(sweep.rows[4].populations[1] > 0.85);
  CHECK(sweep.rows[4].populations[1] < 0.95);
  for (const auto& row : sweep.rows) {
    double sum = 0.0;
    for (double x : row.populations) {
      sum += x;
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("largest e_max drop is reported") {
  const auto grid = EvolutionGrid::uniform(5.0, 2001);
  const std::vector<double> gammas{3.0, 0.0};
  const auto sweep = sweep_gamma(default_model(), default_params(), gammas, grid);
  CHECK(sweep.largest_drop_index == 1);
  CHECK(sweep.largest_e_max_drop == doctest::Approx(sweep.rows[0].e_max - sweep.rows[1].e_max));
}

TEST_CASE("truncation comparison structure") {
  const auto grid = EvolutionGrid::uniform(5.0, 4001);
  const auto cmp = compare_truncations(default_model(), 0.41, default_params(), grid);
  for (std::size_t i = 0; i < kComparedTruncations.size(); ++i) {
    CHECK(cmp.traces[i].truncation == kComparedTruncations[i]);
    CHECK(cmp.traces[i].gamma == 0.41);
    CHECK(cmp.traces[i].samples.size() == grid.count());
  }
  CHECK(std::abs(cmp.maxima[3].e_max - 1.0) < 1e-6);
  CHECK(cmp.max_pairwise_deviation > 0.0);
  CHECK(cmp.max_pairwise_deviation <= 2.0);
  CHECK_THROWS_AS(compare_truncations(truncate(default_model(), Truncation::TwoLevel), 0.41,
                                      default_params(), grid),
                  std::invalid_argument);
}

TEST_CASE("linspace") {
  const auto v = linspace(0.0, 1.0, 5);
  CHECK(v == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(linspace(2.0, 3.0, 1) == std::vector<double>{2.0});
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("under-resolved grids are densified") {
  auto p = default_params();
  p.gamma = 3.0;
  const auto coarse = EvolutionGrid::uniform(5.0, 41);
  const auto best = max_entanglement(default_model(), p, coarse);
  CHECK(best.densifications > 0);
  CHECK(best.densifications <= kMaxDensifications);
  CHECK(best.grid_samples == (coarse.count() - 1) * (std::size_t{1} << best.densifications) + 1);
  const auto fine = max_entanglement(default_model(), p, EvolutionGrid::uniform(5.0, 20001));
  CHECK(fine.densifications == 0);
  CHECK(fine.grid_resolved);
  CHECK(fine.grid_samples == 20001);

  const auto g = EvolutionGrid::from_values({0.0, 1.0, 3.0});
  CHECK(g.refined().values() == std::vector<double>{0.0, 0.5, 1.0, 2.0, 3.0});
}
