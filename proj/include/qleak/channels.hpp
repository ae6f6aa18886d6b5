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

#ifndef QLEAK_CHANNELS_HPP
#define QLEAK_CHANNELS_HPP

#include <array>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "qleak/states.hpp"

namespace qleak {

// Idle decoherence. Exponents are idle time over decoherence time, so a
// 250 ns idle with T1 = T2 = 100 ns gives gamma1 = gamma2 = 2.5.
struct ThermalParams {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double p0 = 1.0;  // equilibrium population of |0>
    double p1 = 0.0;  // equilibrium population of |1>

    /// Throws std::invalid_argument; enforces gamma1 <= 2 gamma2.
    void validate() const;

    static ThermalParams from_times(double idle, double t1, double t2, double p0 = 1.0);
};

// Mid-circuit measurement along `axis` followed by a conditional flip.
struct ResetInstrParams {
    double m10 = 0.0;   // prepared |0>, reported 1
    double m01 = 0.0;   // prepared |1>, reported 0
    double p_bf = 0.0;  // conditional flip fails to act
    AxisVector axis = AxisVector::z();

    void validate() const;
};

// Keeps the state with probability p_r, otherwise prepares |0>.
struct MeasurementlessParams {
    double p_r = 0.0;

    void validate() const;
};

struct CptpReport {
    double trace_residual = 0.0;       // ||sum K^dag K - I||_max or ||Tr_out(choi) - I||_max
    double min_choi_eigenvalue = 0.0;
    bool passed = false;
};

/// Report-only check; never throws on non-CPTP input.
CptpReport validate_cptp(std::span<const ComplexMatrix> kraus_ops,
                         double tolerance = tol::kChannel);
/// Choi matrix indexed (input, output) with (i, a) -> 2i + a.
CptpReport validate_choi(const ComplexMatrix &choi, double tolerance = tol::kChannel);

class KrausChannel {
public:
    /// Rejects operator sets that are not 2x2 or fail completeness.
    explicit KrausChannel(std::vector<ComplexMatrix> ops);

    const std::vector<ComplexMatrix> &ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }

private:
    std::vector<ComplexMatrix> ops_;
};

class ChoiChannel {
public:
    /// Rejects matrices that are not trace preserving or not PSD.
    explicit ChoiChannel(ComplexMatrix choi);

    const ComplexMatrix &choi() const { return choi_; }

private:
    ComplexMatrix choi_;
};

enum class ResetKind { Thermal, ResetInstruction, Measurementless };

using ResetParams = std::variant<ThermalParams, ResetInstrParams, MeasurementlessParams>;

ResetKind reset_kind(const ResetParams &p);
std::string_view to_string(ResetKind kind);
/// Accepts "thermal", "reset_instruction", "measurementless".
ResetKind parse_reset_kind(std::string_view name);
void validate(const ResetParams &p);

CptpReport validate_cptp(const KrausChannel &ch);
CptpReport validate_cptp(const ChoiChannel &ch);

ChoiChannel to_choi(const KrausChannel &ch);
/// Kraus operators from the eigendecomposition of the Choi matrix.
KrausChannel to_kraus(const ChoiChannel &ch);

DensityMatrix apply_kraus(const KrausChannel &ch, const DensityMatrix &rho);
/// Tr_1[choi (rho^T (x) I)].
DensityMatrix apply_choi(const ChoiChannel &ch, const DensityMatrix &rho);

ChoiChannel thermal_relaxation(const ThermalParams &p);
KrausChannel reset_instruction(const ResetInstrParams &p);
KrausChannel measurementless_reset(const MeasurementlessParams &p);

/// Kraus form of any reset; thermal relaxation goes through to_kraus.
KrausChannel reset_channel(const ResetParams &p);
/// Applies the reset in its native representation (Choi for thermal).
DensityMatrix apply_reset(const ResetParams &p, const DensityMatrix &rho);

// Kraus operators grouped by a classical outcome bit. For a measurement the
// bit is the reported result; for a correction it selects which operators act.
using Instrument = std::array<std::vector<ComplexMatrix>, 2>;

/// Z-basis projective measurement with readout errors m10 and m01.
Instrument noisy_z_measurement(double m10, double m01);
/// Outcome 0 leaves the qubit alone; outcome 1 applies X, which fails with p_bf.
Instrument conditional_flip(double p_bf);
/// Runs `measurement`, feeds its reported bit to `correction`, discards the bit.
KrausChannel compose_conditional(const Instrument &measurement,
                                 const Instrument &correction);

/// Unitary with rows <m| and <-m|; takes |m> to |0>.
ComplexMatrix basis_change_to_z(const AxisVector &m);

struct MeasurementResult {
    double p_plus;
    double p_minus;
    DensityMatrix collapsed_plus;
    DensityMatrix collapsed_minus;
};

/// Projective measurement onto |m>, |-m>. Outcome -1 corresponds to |-m>.
MeasurementResult measure(const DensityMatrix &rho, const AxisVector &axis);

}  // namespace qleak

#endif
