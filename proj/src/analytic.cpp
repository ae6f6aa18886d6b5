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

#include "qleak/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qleak::analytic {

namespace {

// r cos(theta) and r sin(theta) cos(phi): the victim's Z and X components.
double z_component(const BlochVector &v) { return v.r * std::cos(v.theta); }
double x_component(const BlochVector &v) {
    return v.r * std::sin(v.theta) * std::cos(v.phi);
}

// QOTP leaves the maximally mixed state, i.e. r = 0.
BlochVector effective_victim(const LeakageFormulaInput &in) {
    return in.otp == OtpKind::Qotp ? BlochVector{} : in.victim;
}

}  // namespace

double p_minus_thermal(const LeakageFormulaInput &in) {
    const auto *p = std::get_if<ThermalParams>(&in.reset);
    if (p == nullptr)
        throw std::invalid_argument("p_minus_thermal: reset is not thermal relaxation");
    p->validate();
    const BlochVector v = effective_victim(in);
    if (in.attacker_axis == BasisAxis::Z) {
        const double decay = std::exp(-p->gamma1);
        const double floor = p->p1 * (1.0 - decay);
        if (in.otp == OtpKind::Cotp)
            return floor + 0.5 * decay;
        return floor + 0.5 * decay * (1.0 - z_component(v));
    }
    return 0.5 * (1.0 - std::exp(-p->gamma2) * x_component(v));
}

double p_minus_reset_instruction(const LeakageFormulaInput &in) {
    const auto *p = std::get_if<ResetInstrParams>(&in.reset);
    if (p == nullptr)
        throw std::invalid_argument("p_minus_reset_instruction: wrong reset kind");
    p->validate();
    if (std::abs(dot(p->axis, AxisVector::z()) - 1.0) > tol::kConstruction)
        throw std::invalid_argument(
            "p_minus_reset_instruction: closed form needs the reset axis along Z");
    if (in.attacker_axis == BasisAxis::X)
        return 0.5;
    const double offset = (p->m10 + p->m01) * (1.0 - p->p_bf) + p->p_bf;
    if (in.otp != OtpKind::None)
        return 0.5 * offset;
    const double slope = (p->m10 - p->m01) * (1.0 - p->p_bf) - p->p_bf;
    return 0.5 * (offset + slope * z_component(in.victim));
}

double p_minus_measurementless(const LeakageFormulaInput &in) {
    const auto *p = std::get_if<MeasurementlessParams>(&in.reset);
    if (p == nullptr)
        throw std::invalid_argument("p_minus_measurementless: wrong reset kind");
    p->validate();
    const BlochVector v = effective_victim(in);
    if (in.attacker_axis == BasisAxis::Z) {
        if (in.otp == OtpKind::Cotp)
            return 0.5 * p->p_r;
        return 0.5 * p->p_r * (1.0 - z_component(v));
    }
    return 0.5 * (1.0 - p->p_r * x_component(v));
}

double p_minus(const LeakageFormulaInput &in) {
    switch (reset_kind(in.reset)) {
    case ResetKind::Thermal:
        return p_minus_thermal(in);
    case ResetKind::ResetInstruction:
        return p_minus_reset_instruction(in);
    case ResetKind::Measurementless:
        return p_minus_measurementless(in);
    }
    throw std::logic_error("unreachable reset kind");
}

double snr_theoretical(const std::function<double(double)> &p_of_alpha,
                       std::span<const double> alphas, std::size_t n_shots) {
    if (alphas.empty())
        throw std::invalid_argument("snr_theoretical: no alpha values");
    if (n_shots == 0)
        throw std::invalid_argument("snr_theoretical: n_shots must be positive");
    const auto checked = [&](double alpha) {
        const double p = p_of_alpha(alpha);
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("snr_theoretical: P(-1) outside [0, 1]");
        return p;
    };
    const double signal = checked(std::numbers::pi) - checked(0.0);
    double noise = 0.0;
    for (double alpha : alphas) {
        const double p = checked(alpha);
        noise += std::sqrt(p * (1.0 - p));
    }
    noise /= static_cast<double>(alphas.size());
    if (noise == 0.0)
        return std::copysign(kInfiniteSnr, signal);
    return signal / noise * std::sqrt(static_cast<double>(n_shots));
}

}  // namespace qleak::analytic
