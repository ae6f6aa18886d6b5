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

#ifndef QLEAK_CLI_HPP
#define QLEAK_CLI_HPP

#include <ostream>

namespace qleak::cli {

enum ExitCode : int {
    kSuccess = 0,
    kConfigError = 2,
    kIoError = 3,
    kVerificationFailure = 4,
};

inline constexpr const char *kVersion = "1.0.0";

/// Entry point shared by the qleak executable and the tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qleak::cli

#endif
