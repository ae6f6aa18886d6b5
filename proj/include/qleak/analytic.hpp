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

#ifndef QLEAK_ANALYTIC_HPP
#define QLEAK_ANALYTIC_HPP

#include <functional>
#include <limits>
#include <span>

#include "qleak/channels.hpp"
#include "qleak/otp.hpp"

namespace qleak::analytic {

// Closed-form attacker statistics. COTP is the Pauli-X pad, the reset
// instruction measures along Z, and the attacker measures along Z or X.
// Outcome -1 is |1> along Z and |-> along X.
struct LeakageFormulaInput {
    BlochVector victim;
    OtpKind otp = OtpKind::None;
    ResetParams reset;
    BasisAxis attacker_axis = BasisAxis::Z;
};

/// Equilibrium population p1 adds a constant p1 (1 - e^{-gamma1}) along Z;
/// with the usual p1 = 0 this is exactly (1/2) e^{-gamma1} (1 - r cos(theta)).
double p_minus_thermal(const LeakageFormulaInput &in);
/// Requires the reset measurement axis to be Z.
double p_minus_reset_instruction(const LeakageFormulaInput &in);
double p_minus_measurementless(const LeakageFormulaInput &in);

/// Dispatches on the reset kind.
double p_minus(const LeakageFormulaInput &in);

/// Returned when the noise estimate is zero; carries the numerator's sign.
inline constexpr double kInfiniteSnr = std::numeric_limits<double>::infinity();

/// [P(-1|pi) - P(-1|0)] / mean_alpha sqrt(P (1 - P)) * sqrt(n_shots).
double snr_theoretical(const std::function<double(double)> &p_of_alpha,
                       std::span<const double> alphas, std::size_t n_shots);

}  // namespace qleak::analytic

#endif
