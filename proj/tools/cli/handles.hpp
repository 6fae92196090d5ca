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

// RAII ownership for the C API handles plus status-to-exception translation.

#include "qudit_eet/qudit_eet.h"

#include <memory>
#include <stdexcept>
#include <string>

namespace qeet::cli {

class LibraryError : public std::runtime_error {
public:
  LibraryError(qeet_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  qeet_status status() const { return status_; }

private:
  qeet_status status_;
};

inline void check(qeet_status status, const char* call) {
  if (status != QEET_OK) {
    throw LibraryError(status, std::string(call) + ": " + qeet_status_string(status) + ": " +
                                   qeet_last_error());
  }
}

template <typename T, void (*Destroy)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Destroy(p); }
};

using ModelHandle = std::unique_ptr<qeet_model, HandleDeleter<qeet_model, qeet_model_destroy>>;
using TraceHandle = std::unique_ptr<qeet_trace, HandleDeleter<qeet_trace, qeet_trace_destroy>>;
using SweepHandle = std::unique_ptr<qeet_sweep, HandleDeleter<qeet_sweep, qeet_sweep_destroy>>;
using SurfaceHandle =
    std::unique_ptr<qeet_surface, HandleDeleter<qeet_surface, qeet_surface_destroy>>;
using ComparisonHandle =
    std::unique_ptr<qeet_comparison, HandleDeleter<qeet_comparison, qeet_comparison_destroy>>;
using EstimationHandle =
    std::unique_ptr<qeet_estimation, HandleDeleter<qeet_estimation, qeet_estimation_destroy>>;

} // namespace qeet::cli
