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

#ifndef QLEAK_OTP_HPP
#define QLEAK_OTP_HPP

#include <string_view>
#include <vector>

#include "qleak/channels.hpp"
#include "qleak/gates.hpp"

namespace qleak {

enum class OtpKind { None, Cotp, Qotp };

std::string_view to_string(OtpKind kind);
/// Accepts "none", "cotp", "qotp"; throws std::invalid_argument otherwise.
OtpKind parse_otp_kind(std::string_view name);

// Pad applied before the reset. COTP applies the generalized X gate about
// x_axis with probability 1/2; QOTP additionally applies the generalized X
// gate about z_axis, which must be orthogonal to x_axis.
struct OtpScheme {
    OtpKind kind = OtpKind::None;
    AxisVector x_axis = AxisVector::x();
    AxisVector z_axis = AxisVector::z();

    void validate() const;

    Gate x_gate() const { return generalized_pauli_x(x_axis); }
    Gate z_gate() const { return generalized_pauli_x(z_axis); }

    static OtpScheme none() { return {}; }
    static OtpScheme cotp(AxisVector x_axis = AxisVector::x()) {
        return {OtpKind::Cotp, x_axis, AxisVector::z()};
    }
    static OtpScheme qotp(AxisVector x_axis = AxisVector::x(),
                          AxisVector z_axis = AxisVector::z()) {
        return {OtpKind::Qotp, x_axis, z_axis};
    }
};

struct OtpKey {
    bool k1 = false;
    bool k2 = false;  // ignored unless QOTP
};

/// Every key the scheme can draw, each equally likely.
std::vector<OtpKey> key_space(const OtpScheme &scheme);

/// Z_n^{k2} X_n^{k1} for QOTP, X_n^{k1} for COTP, identity for no pad.
ComplexMatrix key_unitary(const OtpScheme &scheme, const OtpKey &key);

/// The pad averaged over its keys, as a channel on one qubit.
KrausChannel otp_channel(const OtpScheme &scheme);

/// Key-averaged pad. Four-dimensional inputs receive independent pads on
/// each qubit.
DensityMatrix otp_average(const OtpScheme &scheme, const DensityMatrix &rho);

/// Applies X_n^{k1}, then Z_n^{k2}.
DensityMatrix otp_keyed(const OtpScheme &scheme, const OtpKey &key,
                        const DensityMatrix &rho);

DensityMatrix otp_decrypt(const OtpScheme &scheme, const OtpKey &key,
                          const DensityMatrix &rho);

struct PureQubit {
    Complex a;  // amplitude of |0>
    Complex b;  // amplitude of |1>
};

/// <n| rho' |n> where rho' is the Pauli-X COTP average of |psi><psi|.
double cotp_measurement_probability(const PureQubit &psi, const PureQubit &n);

}  // namespace qleak

#endif
