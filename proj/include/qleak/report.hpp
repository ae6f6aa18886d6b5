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

#ifndef QLEAK_REPORT_HPP
#define QLEAK_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "qleak/experiment.hpp"

namespace qleak {

/// Shortest representation that parses back to the same double;
/// "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double x);

inline constexpr const char *kSweepCsvHeader =
    "reset_kind,otp,victim_axis,attacker_axis,alpha_rad,experiment_index,n_shots,"
    "p_minus_empirical,p_minus_analytic";

inline constexpr const char *kGridCsvHeader =
    "reset_kind,param1_name,param1_value,param2_name,param2_value,otp,attacker_axis,"
    "snr_empirical,snr_theoretical,valid";

/// One row per (sweep, alpha, experiment), LF line endings.
void write_sweep_csv(std::ostream &out, const std::vector<SweepResult> &sweeps);

/// One row per grid cell, OTP and attacker axis.
void write_grid_csv(std::ostream &out, const SnrGridResult &grid);

}  // namespace qleak

#endif
