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

#ifndef QLEAK_EXPERIMENT_HPP
#define QLEAK_EXPERIMENT_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qleak/analytic.hpp"
#include "qleak/channels.hpp"
#include "qleak/otp.hpp"

namespace qleak {

using Rng = std::mt19937_64;

/// {0, pi/8, ..., pi}.
std::vector<double> default_alphas();

inline constexpr std::size_t kDefaultShots = 10000;
inline constexpr std::size_t kDefaultExperiments = 10;

// One victim -> pad -> reset -> attacker pipeline. The victim prepares
// Z RX(alpha)|0> and measures it along victim_axis.
struct ExperimentConfig {
    double alpha = 0.0;
    BasisAxis victim_axis = BasisAxis::Z;
    OtpScheme otp;
    ResetParams reset = MeasurementlessParams{};
    BasisAxis attacker_axis = BasisAxis::Z;
    std::size_t n_shots = kDefaultShots;
    std::size_t n_experiments = kDefaultExperiments;
    std::uint64_t master_seed = 0;

    void validate() const;
};

/// The victim's state after its measurement, averaged over outcomes.
DensityMatrix victim_state(const ExperimentConfig &cfg);

/// P(-1) by pushing the averaged state through the channels.
double p_minus_pipeline(const ExperimentConfig &cfg);

/// P(-1) from the closed-form expressions when they cover `cfg`
/// (Pauli-X COTP, Z-axis reset instruction), otherwise from the pipeline.
double p_minus_expected(const ExperimentConfig &cfg);

// Per-shot sampler. Everything that does not depend on the random draws is
// prepared once at construction.
class ShotSimulator {
public:
    /// With `keyed_otp` false the pad is applied as its key average.
    explicit ShotSimulator(const ExperimentConfig &cfg, bool keyed_otp = true);

    /// Returns +1 or -1.
    int run_shot(Rng &rng) const;

private:
    using Mat2 = Eigen::Matrix2cd;

    double victim_p_plus_;
    std::array<Mat2, 2> victim_collapsed_;  // +1, -1
    std::vector<Mat2> pads_;
    std::vector<Mat2> reset_ops_;
    std::vector<Mat2> reset_effects_;  // K^dag K
    Ket attacker_plus_;
};

int run_shot(const ExperimentConfig &cfg, Rng &rng);

struct RunOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
    bool keyed_otp = true;
};

struct SweepResult {
    ExperimentConfig config;              // alpha field unused
    std::vector<double> alphas;
    std::vector<std::vector<double>> p_minus;  // [alpha][experiment]
    std::vector<double> p_minus_analytic;      // [alpha]

    std::vector<double> mean() const;
    /// Population standard deviation across experiments.
    std::vector<double> stddev() const;
};

/// Deterministic in cfg.master_seed regardless of `opts.threads`.
SweepResult run_sweep(const ExperimentConfig &cfg, std::span<const double> alphas,
                      const RunOptions &opts = {});

/// Mean difference between alpha = pi and alpha = 0 over the mean
/// Bessel-corrected spread across experiments.
double snr_empirical(const SweepResult &sweep);

/// Theoretical SNR of `cfg` over `alphas` using p_minus_expected.
double snr_theoretical(const ExperimentConfig &cfg, std::span<const double> alphas);

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

/// Grid parameter names for a reset kind: gamma1/gamma2, m10/m01, p_r/none.
std::pair<std::string, std::string> grid_parameter_names(ResetKind kind);

/// `base` with the two grid parameters substituted.
ResetParams with_grid_parameters(const ResetParams &base, double v1, double v2);

struct SnrGridSpec {
    ExperimentConfig base;  // reset holds the fixed parameters
    GridAxis param1;
    GridAxis param2;        // single value 0 named "none" for one-parameter resets
    std::vector<OtpScheme> otps;
    std::vector<BasisAxis> attacker_axes;
    std::vector<double> alphas;
};

struct SnrCell {
    std::size_t i = 0;
    std::size_t j = 0;
    OtpKind otp = OtpKind::None;
    BasisAxis attacker_axis = BasisAxis::Z;
    double snr_empirical = 0.0;
    double snr_theoretical = 0.0;
    bool valid = true;
};

struct SnrGridResult {
    ResetKind kind = ResetKind::Thermal;
    GridAxis param1;
    GridAxis param2;
    std::vector<SnrCell> cells;  // ordered by (i, j, otp, axis)
};

/// Cells whose parameters are not physical (gamma1 > 2 gamma2) are marked
/// invalid and carry NaN SNRs.
SnrGridResult run_snr_grid(const SnrGridSpec &spec, const RunOptions &opts = {});

/// Stream seed for cell `index` of a run seeded with `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace qleak

#endif
