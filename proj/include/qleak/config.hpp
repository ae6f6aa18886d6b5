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

#ifndef QLEAK_CONFIG_HPP
#define QLEAK_CONFIG_HPP

#include <filesystem>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "qleak/experiment.hpp"

namespace qleak {

// Malformed or invalid configuration. The message names the offending field
// as a JSON pointer, or the line and column for syntax errors.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepJob {
    ExperimentConfig base;
    std::vector<OtpScheme> otps;
    std::vector<BasisAxis> attacker_axes;
    std::vector<double> alphas;
};

/// Reads and parses a JSON file. Throws IoError or ConfigError.
nlohmann::json load_config_file(const std::filesystem::path &path);

/// Sweep configuration:
///   reset          {"kind": ..., kind-specific parameters}
///   otp            name, object or list of them (default "none")
///   victim_axis    "z" | "x" (default "z")
///   attacker_axis  axis or list of axes (default "z")
///   alphas         radians (default nine values 0..pi)
///   n_shots, n_experiments, seed
/// Unknown fields are rejected.
SweepJob parse_sweep_config(const nlohmann::json &doc);

/// Sweep fields plus "grid": {"<param1>": [...], "<param2>": [...]}, keyed by
/// the parameter names of the reset kind.
SnrGridSpec parse_grid_config(const nlohmann::json &doc);

}  // namespace qleak

#endif
