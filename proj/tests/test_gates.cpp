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

#include <doctest.h>

#include "qleak/channels.hpp"
#include "qleak/gates.hpp"
#include "test_support.hpp"

using namespace qleak;
using namespace qleak::testing;

TEST_CASE("Pauli matrices") {
    CHECK(approx_equal(pauli(PauliKind::X).matrix(), mat2(0, 1, 1, 0)));
    CHECK(approx_equal(pauli(PauliKind::Z).matrix(), mat2(1, 0, 0, -1)));
    CHECK(approx_equal(pauli(PauliKind::XZ).matrix(), mat2(0, -1, 1, 0)));
    CHECK(approx_equal(pauli(PauliKind::I).matrix(), identity(2)));
    CHECK(approx_equal(pauli(PauliKind::XZ).matrix(),
                       pauli(PauliKind::X).matrix() * pauli(PauliKind::Z).matrix()));
}

TEST_CASE("rotation_x") {
    CHECK(approx_equal(rotation_x(0.0).matrix(), identity(2)));
    const Complex minus_i(0.0, -1.0);
    CHECK(approx_equal(rotation_x(kPi).matrix(),
                       ComplexMatrix(minus_i * pauli(PauliKind::X).matrix())));

    const DensityMatrix rho =
        apply_gate(rotation_x(kPi / 2), DensityMatrix(mat2(1, 0, 0, 0)));
    CHECK(std::abs(measure(rho, AxisVector::z()).p_plus - 0.5) <= 1e-12);
}

TEST_CASE("generalized_pauli_x") {
    CHECK(approx_equal(generalized_pauli_x(AxisVector::x()).matrix(),
                       pauli(PauliKind::X).matrix()));
    CHECK(approx_equal(generalized_pauli_x(AxisVector::z()).matrix(),
                       pauli(PauliKind::Z).matrix()));
    for (int n = 0; n < 200; ++n) {
        const AxisVector axis = random_axis();
        const ComplexMatrix g = generalized_pauli_x(axis).matrix();
        const Ket plus = axis.ket_plus();
        const Ket minus = axis.ket_minus();
        REQUIRE((g * plus - plus).cwiseAbs().maxCoeff() <= 1e-12);
        REQUIRE((g * minus + minus).cwiseAbs().maxCoeff() <= 1e-12);
        REQUIRE(max_abs_diff(g, g.adjoint()) <= 1e-12);
        REQUIRE(max_abs_diff(g * g, identity(2)) <= 1e-12);
    }
}

TEST_CASE("hadamard equals the generalized X gate at theta = pi/4") {
    CHECK(approx_equal(hadamard().matrix(),
                       generalized_pauli_x({kPi / 4, 0.0}).matrix()));
}

TEST_CASE("apply_gate examples") {
    const DensityMatrix zero(mat2(1, 0, 0, 0));
    CHECK(approx_equal(apply_gate(pauli(PauliKind::X), zero).matrix(), mat2(0, 0, 0, 1)));
    const DensityMatrix rho = random_density(2);
    CHECK(approx_equal(apply_gate(pauli(PauliKind::I), rho).matrix(), rho.matrix()));

    for (int n = 0; n < 100; ++n) {
        const BlochVector v = random_bloch();
        const DensityMatrix rotated = apply_gate(pauli(PauliKind::Z), bloch_to_density(v));
        const DensityMatrix expected = bloch_to_density({v.r, v.theta, v.phi + kPi});
        REQUIRE(max_abs_diff(rotated.matrix(), expected.matrix()) <= 1e-12);
    }
    CHECK_THROWS_AS(apply_gate(pauli(PauliKind::X), random_density(4)),
                    std::invalid_argument);
}

TEST_CASE("gate construction rejects non-unitary matrices") {
    CHECK_THROWS_AS(Gate(mat2(1, 1, 0, 1), "shear"), std::invalid_argument);
}

TEST_CASE("gate properties on random inputs") {
    for (int n = 0; n < 1000; ++n) {
        const Gate g(random_unitary(2), "U");
        const DensityMatrix rho = random_density(2);
        const DensityMatrix out = apply_gate(g, rho);
        const auto res = DensityMatrix::residuals(out.matrix());
        REQUIRE(res.trace <= 1e-12);
        REQUIRE(res.min_eigenvalue >= -1e-10);

        const Gate xn = generalized_pauli_x(random_axis());
        const DensityMatrix twice = apply_gate(xn, apply_gate(xn, rho));
        REQUIRE(max_abs_diff(twice.matrix(), rho.matrix()) <= 1e-12);
    }
}
