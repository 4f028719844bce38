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

#include <cstdint>
#include <string>
#include <vector>

namespace sepscope {

/// Outcome of one acceptance anchor.
struct AnchorResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string summary;               ///< computed vs expected, with tolerance
    std::vector<std::string> details;  ///< per-case lines, printed indented
};

struct VerificationOptions {
    std::uint64_t seed = 0x5e95c09e;
    std::size_t threads = 0;  ///< sweep parallelism; 0 = default_thread_count()
};

/// The twelve anchors, in order.
std::vector<AnchorResult> run_verification(const VerificationOptions& options = {});

/// Individual anchors, for callers that want a subset.
AnchorResult verify_rho_alpha_closed_form();
AnchorResult verify_rho_alpha_boundary();
AnchorResult verify_ppt_window();
AnchorResult verify_shift_mixture_decimals();
AnchorResult verify_shift_mixture_formula(std::uint64_t seed);
AnchorResult verify_werner_piecewise();
AnchorResult verify_cross_norm_equalities(std::uint64_t seed);
AnchorResult verify_pure_state_criterion(std::uint64_t seed);
AnchorResult verify_realignment_algebra(std::uint64_t seed);
AnchorResult verify_symmetric_states(std::uint64_t seed);
AnchorResult verify_separable_safety(std::uint64_t seed);
AnchorResult verify_truncation_stability(std::size_t threads);

/// "PASS [ 1] title: summary" followed by indented detail lines.
std::string format_anchor(const AnchorResult& result);

}  // namespace sepscope
