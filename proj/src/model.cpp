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

#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qeet {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw std::invalid_argument(what);
  }
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

std::string count_mismatch(std::string_view field, std::size_t got, std::size_t want,
                           Truncation mode) {
  std::ostringstream msg;
  msg << field << ": " << got << " entries, " << to_string(mode) << " needs " << want;
  return msg.str();
}

} // namespace

std::size_t dimension_of(Truncation mode) {
  switch (mode) {
  case Truncation::FourLevel:
    return 4;
  case Truncation::ThreeLevel:
    return 3;
  case Truncation::TwoLevel:
  case Truncation::SingleExcitonManifold:
    return 2;
  }
  throw std::invalid_argument("unknown truncation mode");
}

std::string_view to_string(Truncation mode) {
  switch (mode) {
  case Truncation::FourLevel:
    return "four-level";
  case Truncation::ThreeLevel:
    return "three-level";
  case Truncation::TwoLevel:
    return "two-level";
  case Truncation::SingleExcitonManifold:
    return "single-exciton";
  }
  return "unknown";
}

std::optional<Truncation> parse_truncation(std::string_view name) {
  for (auto mode : {Truncation::FourLevel, Truncation::ThreeLevel, Truncation::TwoLevel,
                    Truncation::SingleExcitonManifold}) {
    if (name == to_string(mode)) {
      return mode;
    }
  }
  return std::nullopt;
}

int CouplingTerm::max_level() const {
  return std::max({a_bra_side, b_bra_side, a_ket_side, b_ket_side});
}

std::vector<Transition> transitions_for(std::size_t dimension) {
  std::vector<Transition> out;
  for (const auto& t : kTransitions) {
    if (static_cast<std::size_t>(t.upper) < dimension) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<CouplingTerm> coupling_terms_for(std::size_t dimension) {
  std::vector<CouplingTerm> out;
  for (const auto& term : kCouplingTerms) {
    if (static_cast<std::size_t>(term.max_level()) < dimension) {
      out.push_back(term);
    }
  }
  return out;
}

void validate(const QuditModel& model) {
  const std::size_t d = model.dimension();
  require(model.level_ratios.size() == d,
          count_mismatch("level_ratios", model.level_ratios.size(), d, model.truncation));
  require(model.dipole_ratios.size() == transitions_for(d).size(),
          count_mismatch("dipole_ratios", model.dipole_ratios.size(), transitions_for(d).size(),
                         model.truncation));
  require(model.coupling_ratios.size() == coupling_terms_for(d).size(),
          count_mismatch("coupling_ratios", model.coupling_ratios.size(),
                         coupling_terms_for(d).size(), model.truncation));
  require(all_finite(model.level_ratios), "level_ratios: non-finite entry");
  require(all_finite(model.dipole_ratios), "dipole_ratios: non-finite entry");
  require(all_finite(model.coupling_ratios), "coupling_ratios: non-finite entry");
  require(model.level_ratios.front() == 0.0, "level_ratios: ground level must be 0");
  require(std::all_of(model.dipole_ratios.begin(), model.dipole_ratios.end(),
                      [](double x) { return x >= 0.0; }),
          "dipole_ratios: magnitudes must be >= 0");
  require(model.coupling_sign == 1.0 || model.coupling_sign == -1.0,
          "coupling_sign: must be +1 or -1");
}

QuditModel default_model() {
  return QuditModel{
      .level_ratios = {0.0, 1.0, 1.04, 2.0},
      .dipole_ratios = {1.0, 0.94, 1.0},
      .coupling_ratios = {1.0, 0.50, -0.67, 0.72, 0.90, 0.81, 0.81, 0.76},
      .coupling_sign = -1.0,
      .truncation = Truncation::FourLevel,
  };
}

QuditModel truncate(const QuditModel& model, Truncation mode) {
  validate(model);
  if (model.truncation != Truncation::FourLevel) {
    throw std::invalid_argument("truncate: model is already " +
                                std::string(to_string(model.truncation)));
  }
  if (mode == Truncation::FourLevel) {
    return model;
  }
  const std::size_t d = dimension_of(mode);
  QuditModel out;
  out.truncation = mode;
  out.coupling_sign = model.coupling_sign;
  out.level_ratios.assign(model.level_ratios.begin(), model.level_ratios.begin() + d);
  for (std::size_t i = 0; i < kTransitions.size(); ++i) {
    if (static_cast<std::size_t>(kTransitions[i].upper) < d) {
      out.dipole_ratios.push_back(model.dipole_ratios[i]);
    }
  }
  for (std::size_t i = 0; i < kCouplingTerms.size(); ++i) {
    if (static_cast<std::size_t>(kCouplingTerms[i].max_level()) < d) {
      out.coupling_ratios.push_back(model.coupling_ratios[i]);
    }
  }
  return out;
}

void validate(const DimensionlessParams& p) {
  require(std::isfinite(p.gamma) && std::isfinite(p.delta) && std::isfinite(p.gamma2_max) &&
              std::isfinite(p.r) && std::isfinite(p.drive_ratio),
          "params: non-finite value");
  require(p.gamma >= 0.0, "gamma: must be >= 0");
  require(p.gamma2_max >= 0.0, "gamma2_max: must be >= 0");
  // r = 0 is the interaction-picture limit and stays reachable.
  require(p.r >= 0.0, "r: must be >= 0");
}

DimensionlessParams default_params() { return DimensionlessParams{}; }

} // namespace qeet
