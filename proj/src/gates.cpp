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

#include "qleak/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qleak {

Gate::Gate(ComplexMatrix matrix, std::string label)
    : matrix_(std::move(matrix)), label_(std::move(label)) {
    if (matrix_.rows() != matrix_.cols())
        throw std::invalid_argument("gate '" + label_ + "' is not square");
    const ComplexMatrix product = matrix_ * matrix_.adjoint();
    if (max_abs_diff(product, identity(matrix_.rows())) > tol::kConstruction)
        throw std::invalid_argument("gate '" + label_ + "' is not unitary");
}

Gate Gate::adjoint() const {
    return Gate(matrix_.adjoint(), label_ + "^dag");
}

Gate pauli(PauliKind kind) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    switch (kind) {
    case PauliKind::I:
        m(0, 0) = m(1, 1) = 1.0;
        return Gate(m, "I");
    case PauliKind::X:
        m(0, 1) = m(1, 0) = 1.0;
        return Gate(m, "X");
    case PauliKind::Z:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        return Gate(m, "Z");
    case PauliKind::XZ:
        m(0, 1) = -1.0;
        m(1, 0) = 1.0;
        return Gate(m, "XZ");
    }
    throw std::invalid_argument("unknown Pauli kind");
}

Gate rotation_x(double theta) {
    const Complex c(std::cos(theta / 2), 0.0);
    const Complex s(0.0, -std::sin(theta / 2));
    ComplexMatrix m(2, 2);
    m << c, s, s, c;
    return Gate(m, "RX");
}

Gate generalized_pauli_x(const AxisVector &n) {
    const double c = std::cos(n.theta);
    const double s = std::sin(n.theta);
    ComplexMatrix m(2, 2);
    m << c, std::polar(s, -n.phi), std::polar(s, n.phi), -c;
    return Gate(m, "X_n");
}

Gate hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m << h, h, h, -h;
    return Gate(m, "H");
}

Gate tensor(const Gate &a, const Gate &b) {
    return Gate(ComplexMatrix(kron(a.matrix(), b.matrix())),
                a.label() + "(x)" + b.label());
}

DensityMatrix apply_gate(const Gate &g, const DensityMatrix &rho) {
    if (g.dim() != rho.dim())
        throw std::invalid_argument("apply_gate: gate '" + g.label() +
                                    "' does not match state dimension");
    return DensityMatrix::trusted(g.matrix() * rho.matrix() * g.matrix().adjoint());
}

}  // namespace qleak
