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

#ifndef QLEAK_STATES_HPP
#define QLEAK_STATES_HPP

#include <complex>
#include <numbers>
#include <string_view>

#include <Eigen/Dense>

namespace qleak {

using Complex = std::complex<double>;

// Dense complex matrix of dimension at most 4 (two qubits). The fixed upper
// bound keeps storage inline, so no arithmetic below touches the heap.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 4, 4>;
using Ket = Eigen::Matrix<Complex, 2, 1>;

namespace tol {
inline constexpr double kConstruction = 1e-12;
inline constexpr double kPsd = 1e-10;
inline constexpr double kChannel = 1e-10;
}  // namespace tol

/// Largest element-wise modulus of `a - b`. Dimensions must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

inline bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b,
                         double eps = tol::kConstruction) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           max_abs_diff(a, b) <= eps;
}

ComplexMatrix identity(Eigen::Index dim);

/// Kronecker product; the first factor indexes the most significant bits.
/// Unbounded in size, so it also serves products beyond two qubits.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// Partial trace over the first factor of a 2x2 bipartite matrix:
/// (Tr_1 M)_{ab} = sum_i M_{(i,a),(i,b)} with (i,a) -> 2i + a.
ComplexMatrix partial_trace_first(const ComplexMatrix &m);

/// Partial trace over the second factor, same ordering.
ComplexMatrix partial_trace_second(const ComplexMatrix &m);

/// Smallest eigenvalue of the Hermitian part of `m`.
double min_hermitian_eigenvalue(const ComplexMatrix &m);

/// Unit vector on the Bloch sphere, used for measurement and gate axes.
struct AxisVector {
    double theta = 0.0;
    double phi = 0.0;

    Eigen::Vector3d cartesian() const;

    /// |m> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
    Ket ket_plus() const;
    /// The orthogonal eigenstate |-m>.
    Ket ket_minus() const;

    static constexpr AxisVector z() { return {0.0, 0.0}; }
    static constexpr AxisVector x() { return {std::numbers::pi / 2, 0.0}; }
    static constexpr AxisVector y() { return {std::numbers::pi / 2, std::numbers::pi / 2}; }
};

double dot(const AxisVector &a, const AxisVector &b);

// Measurement bases used by the victim and the attacker.
enum class BasisAxis { Z, X };

AxisVector to_axis(BasisAxis axis);
std::string_view to_string(BasisAxis axis);
/// Accepts "z" or "x" in either case; throws std::invalid_argument.
BasisAxis parse_basis_axis(std::string_view name);

struct BlochVector {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;

    Eigen::Vector3d cartesian() const;
};

// Hermitian, unit-trace, positive semidefinite matrix of dimension 2 or 4.
class DensityMatrix {
public:
    /// Validates the state invariants; throws std::invalid_argument.
    explicit DensityMatrix(ComplexMatrix m);

    /// Wraps `m` without the eigenvalue check. Reserved for outputs of
    /// operations that preserve the invariants by construction.
    static DensityMatrix trusted(ComplexMatrix m);

    static DensityMatrix pure(const Ket &psi);
    static DensityMatrix maximally_mixed(Eigen::Index dim);

    const ComplexMatrix &matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

    struct Residuals {
        double hermiticity;
        double trace;
        double min_eigenvalue;
    };
    static Residuals residuals(const ComplexMatrix &m);

private:
    struct TrustedTag {};
    DensityMatrix(ComplexMatrix m, TrustedTag) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

/// rho = (I + r . sigma) / 2.
DensityMatrix bloch_to_density(const BlochVector &v);

/// Inverse of bloch_to_density. Degenerate angles (r = 0) map to theta = phi = 0.
BlochVector density_to_bloch(const DensityMatrix &rho);

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

}  // namespace qleak

#endif
