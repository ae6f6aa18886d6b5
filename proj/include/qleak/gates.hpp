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

#ifndef QLEAK_GATES_HPP
#define QLEAK_GATES_HPP

#include <string>

#include "qleak/states.hpp"

namespace qleak {

enum class PauliKind { I, X, Z, XZ };

// Unitary acting on one or two qubits.
class Gate {
public:
    /// Throws std::invalid_argument unless `matrix` is unitary within 1e-12.
    Gate(ComplexMatrix matrix, std::string label);

    const ComplexMatrix &matrix() const { return matrix_; }
    const std::string &label() const { return label_; }
    Eigen::Index dim() const { return matrix_.rows(); }

    Gate adjoint() const;

private:
    ComplexMatrix matrix_;
    std::string label_;
};

Gate pauli(PauliKind kind);

/// [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]; no global phase removal.
Gate rotation_x(double theta);

/// |n><n| - |-n><-n|: Hermitian involution with eigenstate |n> at +1.
Gate generalized_pauli_x(const AxisVector &n);

Gate hadamard();

/// Local product a (x) b acting on two qubits.
Gate tensor(const Gate &a, const Gate &b);

/// U rho U^dagger.
DensityMatrix apply_gate(const Gate &g, const DensityMatrix &rho);

}  // namespace qleak

#endif
