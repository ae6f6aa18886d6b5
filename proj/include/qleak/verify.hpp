// Copyright 2026 The qleak Authors
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

#ifndef QLEAK_VERIFY_HPP
#define QLEAK_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "qleak/states.hpp"

namespace qleak {

struct VerifyOptions {
    bool quick = false;
    unsigned threads = 0;
    std::uint64_t seed = 20240101;
    // Extra operator sets that must pass the CPTP check, e.g. to exercise
    // the failure path.
    std::vector<std::pair<std::string, std::vector<ComplexMatrix>>> extra_kraus_sets;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// CPTP validation of the built-in channels, the QOTP mixing check,
/// closed-form versus channel-pipeline agreement and Monte Carlo spot checks.
VerifyReport run_verification(const VerifyOptions &opts);

}  // namespace qleak

#endif
