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

#include "qudit_eet/qudit_eet.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct Model {
  qeet_model* p = nullptr;
  ~Model() { qeet_model_destroy(p); }
};

} // namespace

TEST_CASE("capi: version and names") {
  CHECK(std::strlen(qeet_version()) > 0);
  CHECK(std::string(qeet_truncation_name(QEET_THREE_LEVEL)) == "three-level");
  CHECK(qeet_truncation_dimension(QEET_FOUR_LEVEL) == 4);
  CHECK(qeet_truncation_dimension(QEET_SINGLE_EXCITON) == 2);
  CHECK(std::string(qeet_status_string(QEET_OK)).size() > 0);
}

TEST_CASE("capi: default model getters and buffer protocol") {
  Model m;
  REQUIRE(qeet_model_default(&m.p) == QEET_OK);
  size_t dim = 0;
  CHECK(qeet_model_dimension(m.p, &dim) == QEET_OK);
  CHECK(dim == 4);
  double sign = 0.0;
  CHECK(qeet_model_coupling_sign(m.p, &sign) == QEET_OK);
  CHECK(sign == -1.0);

  size_t count = 0;
  CHECK(qeet_model_coupling_ratios(m.p, nullptr, 0, &count) == QEET_BUFFER_TOO_SMALL);
  CHECK(count == 8);
  std::vector<double> buf(count);
  CHECK(qeet_model_coupling_ratios(m.p, buf.data(), buf.size(), &count) == QEET_OK);
  CHECK(buf[2] == -0.67);

  Model t;
  REQUIRE(qeet_model_truncate(m.p, QEET_TWO_LEVEL, &t.p) == QEET_OK);
  CHECK(qeet_model_dimension(t.p, &dim) == QEET_OK);
  CHECK(dim == 2);
  qeet_truncation mode{};
  CHECK(qeet_model_truncation(t.p, &mode) == QEET_OK);
  CHECK(mode == QEET_TWO_LEVEL);
  Model again;
  CHECK(qeet_model_truncate(t.p, QEET_TWO_LEVEL, &again.p) == QEET_INVALID_ARGUMENT);
  CHECK(again.p == nullptr);
}

TEST_CASE("capi: model_create validates") {
  const double levels[4] = {0.0, 1.0, 1.04, 2.0};
  const double dipoles[3] = {1.0, 0.94, 1.0};
  const double couplings[8] = {1, .5, -.67, .72, .9, .81, .81, .76};
  Model m;
  CHECK(qeet_model_create(levels, 4, dipoles, 3, couplings, 8, -1.0, QEET_FOUR_LEVEL, &m.p) ==
        QEET_OK);
  Model bad;
  const double shifted[4] = {0.5, 1.0, 1.04, 2.0};
  CHECK(qeet_model_create(shifted, 4, dipoles, 3, couplings, 8, -1.0, QEET_FOUR_LEVEL,
                          &bad.p) == QEET_INVALID_ARGUMENT);
  CHECK(std::strlen(qeet_last_error()) > 0);
  CHECK(bad.p == nullptr);
}

TEST_CASE("capi: null pointers and invalid params") {
  CHECK(qeet_model_default(nullptr) == QEET_NULL_POINTER);
  qeet_params p{};
  CHECK(qeet_params_default(&p) == QEET_OK);
  CHECK(p.gamma == 0.41);
  CHECK(qeet_params_validate(&p) == QEET_OK);
  p.gamma = -1.0;
  CHECK(qeet_params_validate(&p) == QEET_INVALID_ARGUMENT);
  CHECK(std::string(qeet_last_error()).find("gamma") != std::string::npos);

  Model m;
  REQUIRE(qeet_model_default(&m.p) == QEET_OK);
  double pops[4];
  size_t n = 0;
  CHECK(qeet_initial_populations(m.p, &p, pops, 4, &n) == QEET_INVALID_ARGUMENT);
  CHECK(qeet_initial_populations(m.p, nullptr, pops, 4, &n) == QEET_NULL_POINTER);
}

TEST_CASE("capi: initial state and trace") {
  Model m;
  REQUIRE(qeet_model_default(&m.p) == QEET_OK);
  qeet_params p{};
  qeet_params_default(&p);
  double re[4];
  double im[4];
  size_t n = 0;
  CHECK(qeet_prepare_initial_state(m.p, &p, re, im, 2, &n) == QEET_BUFFER_TOO_SMALL);
  REQUIRE(qeet_prepare_initial_state(m.p, &p, re, im, 4, &n) == QEET_OK);
  double norm = 0.0;
  for (size_t i = 0; i < n; ++i) {
    norm += re[i] * re[i] + im[i] * im[i];
  }
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));

  qeet_trace* t = nullptr;
  REQUIRE(qeet_trace_compute(m.p, &p, 501, 1, &t) == QEET_OK);
  CHECK(qeet_trace_size(t) == 501);
  CHECK(qeet_trace_gamma(t) == 0.41);
  double g2 = 0.0;
  double e = 0.0;
  CHECK(qeet_trace_sample(t, 500, &g2, &e) == QEET_OK);
  CHECK(g2 == p.gamma2_max);
  CHECK(qeet_trace_sample(t, 501, &g2, &e) == QEET_OUT_OF_RANGE);
  qeet_trace_destroy(t);

  qeet_max_entanglement best{};
  CHECK(qeet_max_entanglement_compute(m.p, &p, 2001, 1, &best) == QEET_OK);
  CHECK(best.e_max > 0.1);
  CHECK(best.e_max >= best.coarse_e_max);

  double drift = 1.0;
  double norm_drift = 1.0;
  CHECK(qeet_conservation_check(m.p, &p, 2001, &drift, &norm_drift) == QEET_OK);
  CHECK(drift < 1e-8);
  CHECK(norm_drift < 1e-10);
  CHECK(qeet_trace_compute(m.p, &p, 0, 1, &t) == QEET_INVALID_ARGUMENT);
}

TEST_CASE("capi: sweeps, surface and comparison") {
  Model m;
  REQUIRE(qeet_model_default(&m.p) == QEET_OK);
  qeet_params p{};
  qeet_params_default(&p);
  const double gammas[3] = {0.0, 0.41, 3.0};

  qeet_sweep* s = nullptr;
  REQUIRE(qeet_sweep_gamma(m.p, &p, gammas, 3, 1001, 2, &s) == QEET_OK);
  CHECK(qeet_sweep_size(s) == 3);
  qeet_sweep_row row{};
  CHECK(qeet_sweep_get(s, 2, &row) == QEET_OK);
  CHECK(row.gamma == 3.0);
  CHECK(row.populations[1] > 0.85);
  CHECK(qeet_sweep_get(s, 3, &row) == QEET_OUT_OF_RANGE);
  double drop = -1.0;
  size_t at = 99;
  CHECK(qeet_sweep_largest_drop(s, &drop, &at) == QEET_OK);
  CHECK(drop == 0.0);
  qeet_sweep_destroy(s);

  qeet_surface* surf = nullptr;
  REQUIRE(qeet_surface_compute(m.p, &p, gammas, 3, 101, 2, &surf) == QEET_OK);
  CHECK(qeet_surface_size(surf) == 303);
  qeet_surface_cell cell{};
  CHECK(qeet_surface_get(surf, 101, &cell) == QEET_OK);
  CHECK(cell.gamma == 0.41);
  CHECK(cell.gamma2 == 0.0);
  qeet_surface_destroy(surf);

  qeet_comparison* c = nullptr;
  REQUIRE(qeet_compare_truncations(m.p, &p, 1001, 1, &c) == QEET_OK);
  const qeet_trace* borrowed = nullptr;
  CHECK(qeet_comparison_trace(c, QEET_SINGLE_EXCITON, &borrowed) == QEET_OK);
  CHECK(qeet_trace_size(borrowed) == 1001);
  qeet_max_entanglement best{};
  CHECK(qeet_comparison_maximum(c, QEET_SINGLE_EXCITON, &best) == QEET_OK);
  CHECK(best.e_max == doctest::Approx(1.0).epsilon(1e-6));
  double dev = 0.0;
  CHECK(qeet_comparison_max_deviation(c, &dev) == QEET_OK);
  CHECK(dev > 0.0);
  qeet_comparison_destroy(c);
}

TEST_CASE("capi: estimation and pulse") {
  qeet_estimation_inputs in{};
  REQUIRE(qeet_estimation_inputs_default(&in) == QEET_OK);
  CHECK(in.block_a[0] == 16050.0);
  CHECK(in.block_a[2] == -87.0);
  qeet_estimation* est = nullptr;
  REQUIRE(qeet_estimate(&in, &est) == QEET_OK);
  CHECK(qeet_estimation_entry_count(est) > 20);
  const char* key = nullptr;
  double value = 0.0;
  CHECK(qeet_estimation_entry(est, 0, &key, &value) == QEET_OK);
  CHECK(std::string(key).rfind("constants.", 0) == 0);
  CHECK(qeet_estimation_entry(est, 100000, &key, &value) == QEET_OUT_OF_RANGE);
  Model m;
  CHECK(qeet_estimation_model(est, &m.p) == QEET_OK);
  double levels[4];
  size_t n = 0;
  CHECK(qeet_model_level_ratios(m.p, levels, 4, &n) == QEET_OK);
  CHECK(levels[2] > 1.01);
  CHECK(levels[2] < 1.05);
  qeet_estimation_destroy(est);

  qeet_pulse pulse{};
  REQUIRE(qeet_pulse_default(&pulse) == QEET_OK);
  double g = 0.0;
  CHECK(qeet_gamma_from_pulse(&pulse, &g) == QEET_OK);
  CHECK(g == doctest::Approx(0.34637).epsilon(1e-4));
  pulse.duration = 0.0;
  CHECK(qeet_gamma_from_pulse(&pulse, &g) == QEET_INVALID_ARGUMENT);
  CHECK(qeet_debye() == 3.33564e-30);
  CHECK(qeet_wavenumber_to_angular(0.0) == 0.0);
}

TEST_CASE("capi: destroy accepts null") {
  qeet_model_destroy(nullptr);
  qeet_trace_destroy(nullptr);
  qeet_sweep_destroy(nullptr);
  qeet_surface_destroy(nullptr);
  qeet_comparison_destroy(nullptr);
  qeet_estimation_destroy(nullptr);
}
