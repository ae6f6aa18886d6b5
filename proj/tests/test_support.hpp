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

// Random generators and independent reference implementations for tests.

#ifndef QLEAK_TEST_SUPPORT_HPP
#define QLEAK_TEST_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qleak/states.hpp"

namespace qleak::testing {

inline constexpr double kPi = std::numbers::pi;

inline std::mt19937_64 &test_rng() {
    static std::mt19937_64 rng(0xC0FFEE);
    return rng;
}

inline double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(test_rng());
}

inline Complex gaussian_complex() {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(test_rng()), n(test_rng())};
}

/// Uniform in the unit ball.
inline BlochVector random_bloch() {
    return {std::cbrt(uniform()), std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2 * kPi)};
}

inline AxisVector random_axis() {
    return {std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2 * kPi)};
}

/// Random mixed state of dimension `dim` from a Ginibre matrix G G^dag / tr.
inline DensityMatrix random_density(Eigen::Index dim) {
    ComplexMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            g(i, j) = gaussian_complex();
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(rho);
}

inline ComplexMatrix random_unitary(Eigen::Index dim) {
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            g(i, j) = gaussian_complex();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    return ComplexMatrix(qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim));
}

/// Random channel with `n` Kraus operators cut from a random isometry.
inline std::vector<ComplexMatrix> random_kraus_ops(int n) {
    Eigen::MatrixXcd g(2 * n, 2);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2; ++j)
            g(i, j) = gaussian_complex();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    const Eigen::MatrixXcd v = qr.householderQ() * Eigen::MatrixXcd::Identity(2 * n, 2);
    std::vector<ComplexMatrix> ops;
    for (int k = 0; k < n; ++k)
        ops.emplace_back(v.block(2 * k, 0, 2, 2));
    return ops;
}

/// Element-wise Kronecker product written out as four nested loops.
inline Eigen::MatrixXcd kron_reference(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace qleak::testing

#endif
