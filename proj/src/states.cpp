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

#include "qleak/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qleak {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_supported_dim(Eigen::Index d) { return d == 2 || d == 4; }

}  // namespace

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix &m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("partial_trace_first: expected a 4x4 matrix");
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i)
        out += m.block(2 * i, 2 * i, 2, 2);
    return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix &m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("partial_trace_second: expected a 4x4 matrix");
    ComplexMatrix out(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    return out;
}

double min_hermitian_eigenvalue(const ComplexMatrix &m) {
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Eigen::Vector3d AxisVector::cartesian() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

Ket AxisVector::ket_plus() const {
    return {Complex(std::cos(theta / 2), 0.0),
            std::polar(1.0, phi) * std::sin(theta / 2)};
}

Ket AxisVector::ket_minus() const {
    return {Complex(std::sin(theta / 2), 0.0),
            -std::polar(1.0, phi) * std::cos(theta / 2)};
}

double dot(const AxisVector &a, const AxisVector &b) {
    return a.cartesian().dot(b.cartesian());
}

AxisVector to_axis(BasisAxis axis) {
    return axis == BasisAxis::Z ? AxisVector::z() : AxisVector::x();
}

std::string_view to_string(BasisAxis axis) { return axis == BasisAxis::Z ? "z" : "x"; }

BasisAxis parse_basis_axis(std::string_view name) {
    if (name == "z" || name == "Z")
        return BasisAxis::Z;
    if (name == "x" || name == "X")
        return BasisAxis::X;
    throw std::invalid_argument("unknown measurement axis '" + std::string(name) +
                                "' (expected z or x)");
}

Eigen::Vector3d BlochVector::cartesian() const {
    return r * AxisVector{theta, phi}.cartesian();
}

DensityMatrix::Residuals DensityMatrix::residuals(const ComplexMatrix &m) {
    return {
        .hermiticity = (m - m.adjoint()).cwiseAbs().maxCoeff(),
        .trace = std::abs(m.trace() - Complex(1.0, 0.0)),
        .min_eigenvalue = min_hermitian_eigenvalue(m),
    };
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || !is_supported_dim(m_.rows()))
        throw std::invalid_argument("density matrix must be 2x2 or 4x4, got " +
                                    std::to_string(m_.rows()) + "x" +
                                    std::to_string(m_.cols()));
    const Residuals res = residuals(m_);
    if (res.hermiticity > tol::kConstruction)
        throw std::invalid_argument("density matrix is not Hermitian (residual " +
                                    std::to_string(res.hermiticity) + ")");
    if (res.trace > tol::kConstruction)
        throw std::invalid_argument("density matrix trace differs from 1 by " +
                                    std::to_string(res.trace));
    if (res.min_eigenvalue < -tol::kPsd)
        throw std::invalid_argument("density matrix has negative eigenvalue " +
                                    std::to_string(res.min_eigenvalue));
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
    return DensityMatrix(std::move(m), TrustedTag{});
}

DensityMatrix DensityMatrix::pure(const Ket &psi) {
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > tol::kConstruction)
        throw std::invalid_argument("pure state is not normalized");
    return DensityMatrix(ComplexMatrix(psi * psi.adjoint()));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    if (!is_supported_dim(dim))
        throw std::invalid_argument("maximally_mixed: unsupported dimension");
    return DensityMatrix(ComplexMatrix(identity(dim) / static_cast<double>(dim)),
                         TrustedTag{});
}

DensityMatrix bloch_to_density(const BlochVector &v) {
    if (!(v.r >= 0.0) || v.r > 1.0 + tol::kConstruction)
        throw std::invalid_argument("Bloch vector length " + std::to_string(v.r) +
                                    " outside [0, 1]");
    const Eigen::Vector3d c = v.cartesian();
    ComplexMatrix m(2, 2);
    m(0, 0) = 0.5 * (1.0 + c.z());
    m(1, 1) = 0.5 * (1.0 - c.z());
    m(0, 1) = 0.5 * Complex(c.x(), -c.y());
    m(1, 0) = 0.5 * Complex(c.x(), c.y());
    return DensityMatrix(std::move(m));
}

BlochVector density_to_bloch(const DensityMatrix &rho) {
    if (rho.dim() != 2)
        throw std::invalid_argument("density_to_bloch: expected a single-qubit state");
    const double x = 2.0 * rho(0, 1).real();
    const double y = -2.0 * rho(0, 1).imag();
    const double z = (rho(0, 0) - rho(1, 1)).real();
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r < 1e-15)
        return {};
    double phi = std::atan2(y, x);
    if (phi < 0.0)
        phi += kTwoPi;
    if (phi >= kTwoPi)
        phi = 0.0;
    return {std::min(r, 1.0), std::acos(std::clamp(z / r, -1.0, 1.0)), phi};
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() * b.dim() > 4)
        throw std::invalid_argument("tensor: states beyond two qubits are not supported");
    return DensityMatrix::trusted(ComplexMatrix(kron(a.matrix(), b.matrix())));
}

}  // namespace qleak
