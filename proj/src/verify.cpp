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

#include "qleak/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qleak/analytic.hpp"
#include "qleak/channels.hpp"
#include "qleak/experiment.hpp"
#include "qleak/otp.hpp"

namespace qleak {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char *pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

std::vector<ResetParams> builtin_reset_grid() {
    std::vector<ResetParams> grid;
    const double steps[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (double g2 : {0.0, 0.5, 1.0, 2.5, 10.0})
        for (double f : steps)
            grid.push_back(ThermalParams{2.0 * g2 * f, g2, 1.0, 0.0});
    for (double m10 : {0.0, 0.05, 0.1, 0.5, 1.0})
        for (double m01 : {0.0, 0.05, 0.1, 0.5, 1.0})
            grid.push_back(ResetInstrParams{m10, m01, 0.02, AxisVector::z()});
    for (double p_r : steps)
        for (double theta : {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi})
            grid.push_back(ResetInstrParams{0.05, 0.1, p_r, AxisVector{theta, 0.3}});
    for (double p_r : steps)
        grid.push_back(MeasurementlessParams{p_r});
    return grid;
}

CheckResult check_cptp() {
    double worst_trace = 0.0;
    double worst_eig = 0.0;
    bool ok = true;
    for (const auto &reset : builtin_reset_grid()) {
        const CptpReport kraus = validate_cptp(reset_channel(reset));
        ok = ok && kraus.passed;
        worst_trace = std::max(worst_trace, kraus.trace_residual);
        worst_eig = std::min(worst_eig, kraus.min_choi_eigenvalue);
        if (const auto *t = std::get_if<ThermalParams>(&reset)) {
            const CptpReport choi = validate_cptp(thermal_relaxation(*t));
            ok = ok && choi.passed;
            worst_trace = std::max(worst_trace, choi.trace_residual);
            worst_eig = std::min(worst_eig, choi.min_choi_eigenvalue);
        }
    }
    return {"cptp/builtin-channels", ok,
            fmt("max trace residual %.3g, min Choi eigenvalue %.3g", worst_trace, worst_eig)};
}

// Deterministic sweep of states inside the Bloch ball.
std::vector<BlochVector> state_grid(int n) {
    std::vector<BlochVector> out;
    Rng rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        out.push_back({std::cbrt(u(rng)), std::acos(1.0 - 2.0 * u(rng)), 2 * kPi * u(rng)});
    return out;
}

CheckResult check_qotp_mixing(bool quick) {
    double worst = 0.0;
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
    for (const auto &v : state_grid(quick ? 100 : 1000)) {
        const DensityMatrix out = otp_average(OtpScheme::qotp(), bloch_to_density(v));
        worst = std::max(worst, max_abs_diff(out.matrix(), mixed.matrix()));
    }
    return {"otp/qotp-maximal-mixing", worst <= 1e-12, fmt("max deviation %.3g", worst)};
}

CheckResult check_analytic_pipeline() {
    const std::vector<ResetParams> resets = {
        ThermalParams{2.5, 2.5, 1.0, 0.0}, ThermalParams{0.7, 1.9, 0.9, 0.1},
        ResetInstrParams{0.05, 0.10, 0.0, AxisVector::z()},
        ResetInstrParams{0.10, 0.03, 0.07, AxisVector::z()}, MeasurementlessParams{0.1},
        MeasurementlessParams{0.65}};
    double worst = 0.0;
    for (const auto &reset : resets)
        for (OtpKind otp : {OtpKind::None, OtpKind::Cotp, OtpKind::Qotp})
            for (BasisAxis axis : {BasisAxis::Z, BasisAxis::X})
                for (const auto &v : state_grid(27)) {
                    const double closed = analytic::p_minus({v, otp, reset, axis});
                    const OtpScheme scheme{otp, AxisVector::x(), AxisVector::z()};
                    const DensityMatrix out =
                        apply_reset(reset, otp_average(scheme, bloch_to_density(v)));
                    const double numeric = measure(out, to_axis(axis)).p_minus;
                    worst = std::max(worst, std::abs(closed - numeric));
                }
    return {"analytic/pipeline-agreement", worst <= 1e-10, fmt("max difference %.3g", worst)};
}

CheckResult check_measurementless_thermal() {
    double worst = 0.0;
    for (double p_r : {0.05, 0.1, 0.5, 0.9, 1.0}) {
        const double gamma = -std::log(p_r);
        for (const auto &v : state_grid(20)) {
            const DensityMatrix rho = bloch_to_density(v);
            const DensityMatrix a = apply_kraus(measurementless_reset({p_r}), rho);
            const DensityMatrix b =
                apply_choi(thermal_relaxation({gamma, gamma, 1.0, 0.0}), rho);
            worst = std::max(worst, max_abs_diff(a.matrix(), b.matrix()));
        }
    }
    return {"channels/measurementless-equals-isotropic-thermal", worst <= 1e-10,
            fmt("max difference %.3g", worst)};
}

CheckResult check_monte_carlo(const VerifyOptions &opts) {
    const std::vector<ResetParams> resets = {ThermalParams{2.5, 2.5, 1.0, 0.0},
                                             ResetInstrParams{0.05, 0.10, 0.0, AxisVector::z()},
                                             MeasurementlessParams{0.1}};
    const std::vector<double> alphas =
        opts.quick ? std::vector<double>{0.0, kPi / 2, kPi} : default_alphas();
    double worst_sigma = 0.0;
    std::uint64_t index = 0;
    for (const auto &reset : resets)
        for (const auto &otp : {OtpScheme::none(), OtpScheme::cotp(), OtpScheme::qotp()})
            for (BasisAxis axis : {BasisAxis::Z, BasisAxis::X}) {
                ExperimentConfig cfg;
                cfg.reset = reset;
                cfg.otp = otp;
                cfg.attacker_axis = axis;
                cfg.n_shots = opts.quick ? 1000 : kDefaultShots;
                cfg.n_experiments = opts.quick ? 2 : kDefaultExperiments;
                cfg.master_seed = derive_seed(opts.seed, index++);
                const SweepResult sweep = run_sweep(cfg, alphas, {opts.threads, true});
                const std::vector<double> means = sweep.mean();
                const double n_total = static_cast<double>(cfg.n_shots * cfg.n_experiments);
                for (std::size_t a = 0; a < alphas.size(); ++a) {
                    const double p = sweep.p_minus_analytic[a];
                    const double sigma = std::sqrt(std::max(p * (1.0 - p), 1e-12) / n_total);
                    worst_sigma = std::max(worst_sigma, std::abs(means[a] - p) / sigma);
                }
            }
    // 18 sweeps x 9 alphas: a 5 sigma bound keeps the false-alarm rate negligible.
    return {"experiment/monte-carlo-vs-analytic", worst_sigma <= 5.0,
            fmt("largest deviation %.2f sigma", worst_sigma)};
}

}  // namespace

bool VerifyReport::passed() const {
    for (const auto &c : checks)
        if (!c.passed)
            return false;
    return !checks.empty();
}

VerifyReport run_verification(const VerifyOptions &opts) {
    VerifyReport report;
    report.checks.push_back(check_cptp());
    for (const auto &[name, ops] : opts.extra_kraus_sets) {
        const CptpReport r = validate_cptp(ops);
        report.checks.push_back({"cptp/" + name, r.passed,
                                 fmt("trace residual %.3g, min Choi eigenvalue %.3g",
                                     r.trace_residual, r.min_choi_eigenvalue)});
    }
    report.checks.push_back(check_qotp_mixing(opts.quick));
    report.checks.push_back(check_analytic_pipeline());
    report.checks.push_back(check_measurementless_thermal());
    report.checks.push_back(check_monte_carlo(opts));
    return report;
}

}  // namespace qleak
