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

#include "qleak/channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qleak {

namespace {

void require_probability(const char *name, double v) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string(name) + " = " + std::to_string(v) +
                                    " is not a probability");
}

ComplexMatrix outer(const Ket &a, const Ket &b) { return a * b.adjoint(); }

const Ket kZero{1.0, 0.0};
const Ket kOne{0.0, 1.0};

}  // namespace

void ThermalParams::validate() const {
    if (!(gamma1 >= 0.0) || !(gamma2 >= 0.0))
        throw std::invalid_argument("thermal exponents must be non-negative");
    require_probability("p0", p0);
    require_probability("p1", p1);
    if (std::abs(p0 + p1 - 1.0) > tol::kConstruction)
        throw std::invalid_argument("equilibrium populations must sum to 1");
    if (gamma1 > 2.0 * gamma2 + tol::kConstruction)
        throw std::invalid_argument("gamma1 = " + std::to_string(gamma1) +
                                    " exceeds 2 * gamma2 = " +
                                    std::to_string(2.0 * gamma2) + " (T2 <= 2 T1)");
}

ThermalParams ThermalParams::from_times(double idle, double t1, double t2, double p0) {
    if (!(t1 > 0.0) || !(t2 > 0.0) || !(idle >= 0.0))
        throw std::invalid_argument("decoherence times must be positive");
    return {idle / t1, idle / t2, p0, 1.0 - p0};
}

void ResetInstrParams::validate() const {
    require_probability("m10", m10);
    require_probability("m01", m01);
    require_probability("p_bf", p_bf);
}

void MeasurementlessParams::validate() const { require_probability("p_r", p_r); }

CptpReport validate_cptp(std::span<const ComplexMatrix> kraus_ops, double tolerance) {
    CptpReport report;
    if (kraus_ops.empty())
        return report;
    ComplexMatrix completeness = ComplexMatrix::Zero(2, 2);
    ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
    for (const auto &k : kraus_ops) {
        if (k.rows() != 2 || k.cols() != 2)
            return report;
        completeness += k.adjoint() * k;
        Eigen::Matrix<Complex, 4, 1> v;
        for (int i = 0; i < 2; ++i)
            for (int a = 0; a < 2; ++a)
                v(2 * i + a) = k(a, i);
        choi += v * v.adjoint();
    }
    report.trace_residual = max_abs_diff(completeness, identity(2));
    report.min_choi_eigenvalue = min_hermitian_eigenvalue(choi);
    report.passed = report.trace_residual <= tolerance &&
                    report.min_choi_eigenvalue >= -tolerance;
    return report;
}

CptpReport validate_choi(const ComplexMatrix &choi, double tolerance) {
    CptpReport report;
    if (choi.rows() != 4 || choi.cols() != 4)
        return report;
    const double hermiticity = (choi - choi.adjoint()).cwiseAbs().maxCoeff();
    report.trace_residual = max_abs_diff(partial_trace_second(choi), identity(2));
    report.min_choi_eigenvalue = min_hermitian_eigenvalue(choi);
    report.passed = hermiticity <= tolerance && report.trace_residual <= tolerance &&
                    report.min_choi_eigenvalue >= -tolerance;
    return report;
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
    if (ops_.empty())
        throw std::invalid_argument("Kraus channel needs at least one operator");
    const CptpReport report = validate_cptp(ops_);
    if (!report.passed)
        throw std::invalid_argument("Kraus operators are not complete (residual " +
                                    std::to_string(report.trace_residual) + ")");
}

ChoiChannel::ChoiChannel(ComplexMatrix choi) : choi_(std::move(choi)) {
    const CptpReport report = validate_choi(choi_);
    if (!report.passed)
        throw std::invalid_argument(
            "Choi matrix is not CPTP (trace residual " +
            std::to_string(report.trace_residual) + ", min eigenvalue " +
            std::to_string(report.min_choi_eigenvalue) + ")");
}

CptpReport validate_cptp(const KrausChannel &ch) { return validate_cptp(ch.ops()); }
CptpReport validate_cptp(const ChoiChannel &ch) { return validate_choi(ch.choi()); }

ChoiChannel to_choi(const KrausChannel &ch) {
    // choi_{(i,a),(j,b)} = E(|i><j|)_{ab} = sum_k K_{ai} conj(K_{bj})
    ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
    for (const auto &k : ch.ops()) {
        Eigen::Matrix<Complex, 4, 1> v;
        for (int i = 0; i < 2; ++i)
            for (int a = 0; a < 2; ++a)
                v(2 * i + a) = k(a, i);
        choi += v * v.adjoint();
    }
    return ChoiChannel(std::move(choi));
}

KrausChannel to_kraus(const ChoiChannel &ch) {
    const ComplexMatrix h = 0.5 * (ch.choi() + ch.choi().adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    std::vector<ComplexMatrix> ops;
    for (Eigen::Index k = 0; k < 4; ++k) {
        const double lambda = solver.eigenvalues()(k);
        if (lambda <= 1e-14)
            continue;
        const double scale = std::sqrt(lambda);
        ComplexMatrix op(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int a = 0; a < 2; ++a)
                op(a, i) = scale * solver.eigenvectors()(2 * i + a, k);
        ops.push_back(std::move(op));
    }
    return KrausChannel(std::move(ops));
}

DensityMatrix apply_kraus(const KrausChannel &ch, const DensityMatrix &rho) {
    if (rho.dim() != 2)
        throw std::invalid_argument("apply_kraus: single-qubit channels only");
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    for (const auto &k : ch.ops())
        out += k * rho.matrix() * k.adjoint();
    return DensityMatrix::trusted(std::move(out));
}

DensityMatrix apply_choi(const ChoiChannel &ch, const DensityMatrix &rho) {
    if (rho.dim() != 2)
        throw std::invalid_argument("apply_choi: single-qubit channels only");
    const ComplexMatrix lifted(kron(rho.matrix().transpose(), Eigen::MatrixXcd::Identity(2, 2)));
    return DensityMatrix::trusted(partial_trace_first(ch.choi() * lifted));
}

ChoiChannel thermal_relaxation(const ThermalParams &p) {
    p.validate();
    const double decay = 1.0 - std::exp(-p.gamma1);
    const double coherence = std::exp(-p.gamma2);
    ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
    choi(0, 0) = 1.0 - p.p1 * decay;
    choi(1, 1) = p.p1 * decay;
    choi(2, 2) = p.p0 * decay;
    choi(3, 3) = 1.0 - p.p0 * decay;
    choi(0, 3) = coherence;
    choi(3, 0) = coherence;
    return ChoiChannel(std::move(choi));
}

Instrument noisy_z_measurement(double m10, double m01) {
    require_probability("m10", m10);
    require_probability("m01", m01);
    const ComplexMatrix p0 = outer(kZero, kZero);
    const ComplexMatrix p1 = outer(kOne, kOne);
    Instrument inst;
    inst[0] = {std::sqrt(1.0 - m10) * p0, std::sqrt(m01) * p1};
    inst[1] = {std::sqrt(m10) * p0, std::sqrt(1.0 - m01) * p1};
    return inst;
}

Instrument conditional_flip(double p_bf) {
    require_probability("p_bf", p_bf);
    ComplexMatrix x = ComplexMatrix::Zero(2, 2);
    x(0, 1) = x(1, 0) = 1.0;
    Instrument inst;
    inst[0] = {identity(2)};
    inst[1] = {std::sqrt(1.0 - p_bf) * x, std::sqrt(p_bf) * identity(2)};
    return inst;
}

KrausChannel compose_conditional(const Instrument &measurement,
                                 const Instrument &correction) {
    std::vector<ComplexMatrix> ops;
    for (std::size_t bit = 0; bit < 2; ++bit)
        for (const auto &m : measurement[bit])
            for (const auto &c : correction[bit]) {
                ComplexMatrix k = c * m;
                if (k.cwiseAbs().maxCoeff() > 0.0)
                    ops.push_back(std::move(k));
            }
    return KrausChannel(std::move(ops));
}

ComplexMatrix basis_change_to_z(const AxisVector &m) {
    ComplexMatrix u(2, 2);
    u.row(0) = m.ket_plus().adjoint();
    u.row(1) = m.ket_minus().adjoint();
    return u;
}

KrausChannel reset_instruction(const ResetInstrParams &p) {
    p.validate();
    const KrausChannel along_z =
        compose_conditional(noisy_z_measurement(p.m10, p.m01), conditional_flip(p.p_bf));
    const ComplexMatrix u = basis_change_to_z(p.axis);
    std::vector<ComplexMatrix> ops;
    ops.reserve(along_z.size());
    for (const auto &k : along_z.ops())
        ops.push_back(u.adjoint() * k * u);
    return KrausChannel(std::move(ops));
}

KrausChannel measurementless_reset(const MeasurementlessParams &p) {
    p.validate();
    const double reset = std::sqrt(1.0 - p.p_r);
    std::vector<ComplexMatrix> ops{std::sqrt(p.p_r) * identity(2),
                                   reset * outer(kZero, kZero),
                                   reset * outer(kZero, kOne)};
    std::erase_if(ops, [](const ComplexMatrix &k) { return k.cwiseAbs().maxCoeff() == 0.0; });
    return KrausChannel(std::move(ops));
}

ResetKind reset_kind(const ResetParams &p) {
    return static_cast<ResetKind>(p.index());
}

std::string_view to_string(ResetKind kind) {
    switch (kind) {
    case ResetKind::Thermal:
        return "thermal";
    case ResetKind::ResetInstruction:
        return "reset_instruction";
    case ResetKind::Measurementless:
        return "measurementless";
    }
    return "?";
}

ResetKind parse_reset_kind(std::string_view name) {
    for (ResetKind k : {ResetKind::Thermal, ResetKind::ResetInstruction,
                        ResetKind::Measurementless})
        if (name == to_string(k))
            return k;
    throw std::invalid_argument(
        "unknown reset kind '" + std::string(name) +
        "' (expected thermal, reset_instruction or measurementless)");
}

void validate(const ResetParams &p) {
    std::visit([](const auto &params) { params.validate(); }, p);
}

KrausChannel reset_channel(const ResetParams &p) {
    switch (reset_kind(p)) {
    case ResetKind::Thermal:
        return to_kraus(thermal_relaxation(std::get<ThermalParams>(p)));
    case ResetKind::ResetInstruction:
        return reset_instruction(std::get<ResetInstrParams>(p));
    case ResetKind::Measurementless:
        return measurementless_reset(std::get<MeasurementlessParams>(p));
    }
    throw std::logic_error("unreachable reset kind");
}

DensityMatrix apply_reset(const ResetParams &p, const DensityMatrix &rho) {
    if (const auto *thermal = std::get_if<ThermalParams>(&p))
        return apply_choi(thermal_relaxation(*thermal), rho);
    return apply_kraus(reset_channel(p), rho);
}

MeasurementResult measure(const DensityMatrix &rho, const AxisVector &axis) {
    if (rho.dim() != 2)
        throw std::invalid_argument("measure: single-qubit states only");
    const Ket plus = axis.ket_plus();
    const Ket minus = axis.ket_minus();
    const double p_plus =
        std::clamp((plus.adjoint() * rho.matrix() * plus)(0, 0).real(), 0.0, 1.0);
    return {
        .p_plus = p_plus,
        .p_minus = 1.0 - p_plus,
        .collapsed_plus = DensityMatrix::trusted(outer(plus, plus)),
        .collapsed_minus = DensityMatrix::trusted(outer(minus, minus)),
    };
}

}  // namespace qleak
