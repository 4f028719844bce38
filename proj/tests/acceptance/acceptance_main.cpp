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

// Acceptance suite: runs every anchor and prints one PASS/FAIL line each.
// Exit status is 0 only when all anchors pass.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "sepscope/verification.hpp"

int main(int argc, char** argv) {
    sepscope::VerificationOptions options;
    if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 0);

    const auto results = sepscope::run_verification(options);
    std::size_t failures = 0;
    for (const auto& r : results) {
        std::fputs(sepscope::format_anchor(r).c_str(), stdout);
        if (!r.passed) ++failures;
    }
    std::printf("%zu of %zu anchors passed\n", results.size() - failures, results.size());
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
