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

#include "qleak/otp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qleak {

std::string_view to_string(OtpKind kind) {
    switch (kind) {
    case OtpKind::None:
        return "none";
    case OtpKind::Cotp:
        return "cotp";
    case OtpKind::Qotp:
        return "qotp";
    }
    return "?";
}

OtpKind parse_otp_kind(std::string_view name) {
    if (name == "none")
        return OtpKind::None;
    if (name == "cotp")
        return OtpKind::Cotp;
    if (name == "qotp")
        return OtpKind::Qotp;
    throw std::invalid_argument("unknown OTP scheme '" + std::string(name) +
                                "' (expected none, cotp or qotp)");
}

void OtpScheme::validate() const {
    if (kind == OtpKind::Qotp && std::abs(dot(x_axis, z_axis)) > tol::kChannel)
        throw std::invalid_argument("QOTP gate axes must be orthogonal");
}

std::vector<OtpKey> key_space(const OtpScheme &scheme) {
    switch (scheme.kind) {
    case OtpKind::None:
        return {{false, false}};
    case OtpKind::Cotp:
        return {{false, false}, {true, false}};
    case OtpKind::Qotp:
        return {{false, false}, {true, false}, {false, true}, {true, true}};
    }
    return {};
}

ComplexMatrix key_unitary(const OtpScheme &scheme, const OtpKey &key) {
    ComplexMatrix u = identity(2);
    if (scheme.kind == OtpKind::None)
        return u;
    if (key.k1)
        u = scheme.x_gate().matrix() * u;
    if (scheme.kind == OtpKind::Qotp && key.k2)
        u = scheme.z_gate().matrix() * u;
    return u;
}

KrausChannel otp_channel(const OtpScheme &scheme) {
    scheme.validate();
    const auto keys = key_space(scheme);
    const double weight = 1.0 / std::sqrt(static_cast<double>(keys.size()));
    std::vector<ComplexMatrix> ops;
    for (const auto &key : keys)
        ops.push_back(weight * key_unitary(scheme, key));
    return KrausChannel(std::move(ops));
}

DensityMatrix otp_average(const OtpScheme &scheme, const DensityMatrix &rho) {
    const KrausChannel pad = otp_channel(scheme);
    if (rho.dim() == 2)
        return apply_kraus(pad, rho);
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (const auto &a : pad.ops())
        for (const auto &b : pad.ops()) {
            const ComplexMatrix k(kron(a, b));
            out += k * rho.matrix() * k.adjoint();
        }
    return DensityMatrix::trusted(std::move(out));
}

DensityMatrix otp_keyed(const OtpScheme &scheme, const OtpKey &key,
                        const DensityMatrix &rho) {
    scheme.validate();
    if (rho.dim() != 2)
        throw std::invalid_argument("otp_keyed: single-qubit states only");
    const ComplexMatrix u = key_unitary(scheme, key);
    return DensityMatrix::trusted(u * rho.matrix() * u.adjoint());
}

DensityMatrix otp_decrypt(const OtpScheme &scheme, const OtpKey &key,
                          const DensityMatrix &rho) {
    scheme.validate();
    if (rho.dim() != 2)
        throw std::invalid_argument("otp_decrypt: single-qubit states only");
    const ComplexMatrix u = key_unitary(scheme, key).adjoint();
    return DensityMatrix::trusted(u * rho.matrix() * u.adjoint());
}

double cotp_measurement_probability(const PureQubit &psi, const PureQubit &n) {
    const auto check = [](const PureQubit &q, const char *what) {
        const double norm = std::norm(q.a) + std::norm(q.b);
        if (std::abs(norm - 1.0) > tol::kConstruction)
            throw std::invalid_argument(std::string(what) + " is not normalized");
    };
    check(psi, "input state");
    check(n, "target state");
    const DensityMatrix rho = DensityMatrix::pure(Ket{psi.a, psi.b});
    const DensityMatrix padded = otp_average(OtpScheme::cotp(), rho);
    const Ket target{n.a, n.b};
    return (target.adjoint() * padded.matrix() * target)(0, 0).real();
}

}  // namespace qleak
