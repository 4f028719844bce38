// Copyright 2026 The sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepscope/criteria.hpp"
#include "sepscope/states.hpp"

namespace sepscope {

struct GridAxis {
    std::string parameter;
    std::vector<double> values;
};

/// Cartesian product of the varying axes, each point evaluated at every
/// truncation dimension. No axes means a single point (the template itself).
struct SweepPlan {
    StateSpec spec_template;
    std::vector<GridAxis> varying;
    std::vector<std::size_t> dims;

    /// Throws ValidationError for empty grids or dims that are not strictly increasing.
    void validate() const;
    std::size_t point_count() const;
};

struct SweepRow {
    std::size_t point_index = 0;
    std::map<std::string, double> params;  ///< full parameter set used for the state
    std::size_t dim = 0;
    std::optional<CriterionReport> report;  ///< empty when construction failed
    std::string error;
    double wall_time_s = 0.0;
};

struct SweepResult {
    Family family = Family::RhoAlpha;
    std::vector<SweepRow> rows;  ///< plan order: point-major, then dims ascending
};

/// n evenly spaced values from lo to hi inclusive; n = 1 gives {lo}.
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// SEPSCOPE_THREADS if set to a positive integer, else hardware concurrency.
std::size_t default_thread_count();

/// Evaluates every (grid point, dim). Per-point construction errors land in
/// the row. Rows are merged in plan order whatever the completion order.
SweepResult run_sweep(const SweepPlan& plan, std::size_t threads = 0);

struct StabilityReport {
    std::vector<double> drift_per_point;  ///< max |norm(d_i) - norm(d_j)| per grid point
    double max_drift = 0.0;
};

/// Throws InsufficientDims unless every grid point has at least two
/// successfully evaluated dims.
StabilityReport stability_report(const SweepResult& result);

}  // namespace sepscope
