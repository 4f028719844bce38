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

#include "sepscope/truncation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include "sepscope/error.hpp"

namespace sepscope {

void SweepPlan::validate() const {
    if (dims.empty()) throw Error(ErrorKind::ValidationError, "sweep plan: no truncation dims");
    for (std::size_t i = 1; i < dims.size(); ++i) {
        if (dims[i] <= dims[i - 1]) throw Error(ErrorKind::ValidationError, "sweep plan: dims must strictly increase");
    }
    for (const auto& axis : varying) {
        if (axis.values.empty()) {
            throw Error(ErrorKind::ValidationError, "sweep plan: grid for '" + axis.parameter + "' is empty");
        }
    }
}

std::size_t SweepPlan::point_count() const {
    std::size_t n = 1;
    for (const auto& axis : varying) n *= axis.values.size();
    return n;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) return {};
    if (n == 1) return {lo};
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    out.back() = hi;
    return out;
}

std::size_t default_thread_count() {
    if (const char* env = std::getenv("SEPSCOPE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult run_sweep(const SweepPlan& plan, std::size_t threads) {
    plan.validate();
    const std::size_t points = plan.point_count();
    const std::size_t per_point = plan.dims.size();

    SweepResult result;
    result.family = plan.spec_template.family;
    result.rows.resize(points * per_point);

    // Decode point index into a mixed-radix position over the axes; the last
    // axis varies fastest.
    for (std::size_t p = 0; p < points; ++p) {
        std::map<std::string, double> params = plan.spec_template.params;
        std::size_t rest = p;
        for (auto axis = plan.varying.rbegin(); axis != plan.varying.rend(); ++axis) {
            params[axis->parameter] = axis->values[rest % axis->values.size()];
            rest /= axis->values.size();
        }
        for (std::size_t k = 0; k < per_point; ++k) {
            auto& row = result.rows[p * per_point + k];
            row.point_index = p;
            row.params = params;
            row.dim = plan.dims[k];
        }
    }

    auto evaluate = [&](SweepRow& row) {
        const auto start = std::chrono::steady_clock::now();
        try {
            StateSpec spec{plan.spec_template.family, row.params, row.dim};
            row.report = full_report(build_state(spec));
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    const std::size_t workers = std::min(threads == 0 ? default_thread_count() : threads, result.rows.size());
    if (workers <= 1) {
        for (auto& row : result.rows) evaluate(row);
        return result;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < result.rows.size(); i = next++) evaluate(result.rows[i]);
        });
    }
    pool.clear();  // joins
    return result;
}

StabilityReport stability_report(const SweepResult& result) {
    std::map<std::size_t, std::vector<double>> norms;
    for (const auto& row : result.rows) {
        auto& bucket = norms[row.point_index];
        if (row.report) bucket.push_back(row.report->realignment_trace_norm);
    }
    StabilityReport out;
    for (const auto& [point, values] : norms) {
        if (values.size() < 2) {
            throw Error(ErrorKind::InsufficientDims,
                        "grid point " + std::to_string(point) + " has fewer than two evaluated dims");
        }
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        out.drift_per_point.push_back(*hi - *lo);
        out.max_drift = std::max(out.max_drift, *hi - *lo);
    }
    if (norms.empty()) throw Error(ErrorKind::InsufficientDims, "empty sweep result");
    return out;
}

}  // namespace sepscope
