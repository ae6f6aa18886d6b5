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

#include "qleak/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qleak/gates.hpp"

namespace qleak {

namespace {

struct VictimBranches {
    double p_plus;
    DensityMatrix plus;
    DensityMatrix minus;
};

// Z RX(alpha)|0>, then a measurement along the victim axis. An X-axis
// measurement is a Hadamard, a Z measurement, and a Hadamard restoring the
// collapsed state to the X eigenbasis.
VictimBranches victim_branches(const ExperimentConfig &cfg) {
    DensityMatrix rho = DensityMatrix::pure(Ket{1.0, 0.0});
    rho = apply_gate(rotation_x(cfg.alpha), rho);
    rho = apply_gate(pauli(PauliKind::Z), rho);
    const bool along_x = cfg.victim_axis == BasisAxis::X;
    if (along_x)
        rho = apply_gate(hadamard(), rho);
    const MeasurementResult m = measure(rho, AxisVector::z());
    if (!along_x)
        return {m.p_plus, m.collapsed_plus, m.collapsed_minus};
    return {m.p_plus, apply_gate(hadamard(), m.collapsed_plus),
            apply_gate(hadamard(), m.collapsed_minus)};
}

bool closed_form_applies(const ExperimentConfig &cfg) {
    if (cfg.otp.kind == OtpKind::Cotp &&
        std::abs(dot(cfg.otp.x_axis, AxisVector::x()) - 1.0) > tol::kConstruction)
        return false;
    if (const auto *instr = std::get_if<ResetInstrParams>(&cfg.reset))
        return std::abs(dot(instr->axis, AxisVector::z()) - 1.0) <= tol::kConstruction;
    return true;
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn &&fn) {
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                fn(i);
        });
}

Rng stream_rng(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(master),
                      static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    return Rng(seq);
}

std::size_t index_of_alpha(std::span<const double> alphas, double target) {
    for (std::size_t i = 0; i < alphas.size(); ++i)
        if (std::abs(alphas[i] - target) < 1e-9)
            return i;
    throw std::invalid_argument("sweep must include alpha = 0 and alpha = pi");
}

}  // namespace

std::vector<double> default_alphas() {
    std::vector<double> alphas;
    for (int k = 0; k <= 8; ++k)
        alphas.push_back(k * std::numbers::pi / 8.0);
    return alphas;
}

void ExperimentConfig::validate() const {
    if (!std::isfinite(alpha))
        throw std::invalid_argument("alpha must be finite");
    if (n_shots < 1)
        throw std::invalid_argument("n_shots must be at least 1");
    if (n_experiments < 2)
        throw std::invalid_argument("n_experiments must be at least 2");
    otp.validate();
    qleak::validate(reset);
}

DensityMatrix victim_state(const ExperimentConfig &cfg) {
    const VictimBranches v = victim_branches(cfg);
    return DensityMatrix::trusted(v.p_plus * v.plus.matrix() +
                                  (1.0 - v.p_plus) * v.minus.matrix());
}

double p_minus_pipeline(const ExperimentConfig &cfg) {
    const DensityMatrix padded = otp_average(cfg.otp, victim_state(cfg));
    const DensityMatrix reset = apply_reset(cfg.reset, padded);
    return measure(reset, to_axis(cfg.attacker_axis)).p_minus;
}

double p_minus_expected(const ExperimentConfig &cfg) {
    if (!closed_form_applies(cfg))
        return p_minus_pipeline(cfg);
    return analytic::p_minus({
        .victim = density_to_bloch(victim_state(cfg)),
        .otp = cfg.otp.kind,
        .reset = cfg.reset,
        .attacker_axis = cfg.attacker_axis,
    });
}

ShotSimulator::ShotSimulator(const ExperimentConfig &cfg, bool keyed_otp) {
    cfg.validate();
    const VictimBranches v = victim_branches(cfg);
    victim_p_plus_ = v.p_plus;
    if (keyed_otp) {
        victim_collapsed_ = {Mat2(v.plus.matrix()), Mat2(v.minus.matrix())};
        for (const auto &key : key_space(cfg.otp))
            pads_.emplace_back(key_unitary(cfg.otp, key));
    } else {
        victim_collapsed_ = {Mat2(otp_average(cfg.otp, v.plus).matrix()),
                             Mat2(otp_average(cfg.otp, v.minus).matrix())};
    }
    const KrausChannel reset = reset_channel(cfg.reset);
    for (const auto &k : reset.ops()) {
        reset_ops_.emplace_back(k);
        reset_effects_.emplace_back(k.adjoint() * k);
    }
    attacker_plus_ = to_axis(cfg.attacker_axis).ket_plus();
}

int ShotSimulator::run_shot(Rng &rng) const {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    Mat2 rho = victim_collapsed_[uniform(rng) < victim_p_plus_ ? 0 : 1];

    if (pads_.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, pads_.size() - 1);
        const Mat2 &pad = pads_[pick(rng)];
        rho = pad * rho * pad.adjoint();
    }

    // Sample one Kraus branch of the reset with the Born weights.
    const double draw = uniform(rng);
    double cumulative = 0.0;
    std::size_t chosen = reset_ops_.size();
    double chosen_weight = 0.0;
    for (std::size_t k = 0; k < reset_ops_.size(); ++k) {
        const double w = (reset_effects_[k] * rho).trace().real();
        if (w <= 0.0)
            continue;
        cumulative += w;
        chosen = k;
        chosen_weight = w;
        if (draw < cumulative)
            break;
    }
    const Mat2 &op = reset_ops_[chosen];
    rho = op * rho * op.adjoint() / chosen_weight;

    const double p_plus = (attacker_plus_.adjoint() * rho * attacker_plus_)(0, 0).real();
    return uniform(rng) < p_plus ? +1 : -1;
}

int run_shot(const ExperimentConfig &cfg, Rng &rng) {
    return ShotSimulator(cfg).run_shot(rng);
}

std::vector<double> SweepResult::mean() const {
    std::vector<double> out;
    for (const auto &row : p_minus) {
        double sum = 0.0;
        for (double p : row)
            sum += p;
        out.push_back(sum / static_cast<double>(row.size()));
    }
    return out;
}

std::vector<double> SweepResult::stddev() const {
    const std::vector<double> means = mean();
    std::vector<double> out;
    for (std::size_t a = 0; a < p_minus.size(); ++a) {
        double ss = 0.0;
        for (double p : p_minus[a])
            ss += (p - means[a]) * (p - means[a]);
        out.push_back(std::sqrt(ss / static_cast<double>(p_minus[a].size())));
    }
    return out;
}

SweepResult run_sweep(const ExperimentConfig &cfg, std::span<const double> alphas,
                      const RunOptions &opts) {
    cfg.validate();
    if (alphas.empty())
        throw std::invalid_argument("run_sweep: no alpha values");

    SweepResult result{.config = cfg, .alphas = {alphas.begin(), alphas.end()},
                       .p_minus = {}, .p_minus_analytic = {}};
    std::vector<ShotSimulator> simulators;
    simulators.reserve(alphas.size());
    for (double alpha : alphas) {
        ExperimentConfig at = cfg;
        at.alpha = alpha;
        simulators.emplace_back(at, opts.keyed_otp);
        result.p_minus_analytic.push_back(p_minus_expected(at));
    }

    const std::size_t n_exp = cfg.n_experiments;
    std::vector<double> flat(alphas.size() * n_exp);
    parallel_for(flat.size(), opts.threads, [&](std::size_t task) {
        const std::size_t a = task / n_exp;
        const std::size_t e = task % n_exp;
        Rng rng = stream_rng(cfg.master_seed, a, e);
        std::size_t minus = 0;
        for (std::size_t s = 0; s < cfg.n_shots; ++s)
            minus += simulators[a].run_shot(rng) < 0;
        flat[task] = static_cast<double>(minus) / static_cast<double>(cfg.n_shots);
    });

    for (std::size_t a = 0; a < alphas.size(); ++a)
        result.p_minus.emplace_back(flat.begin() + a * n_exp,
                                    flat.begin() + (a + 1) * n_exp);
    return result;
}

double snr_empirical(const SweepResult &sweep) {
    const std::size_t lo = index_of_alpha(sweep.alphas, 0.0);
    const std::size_t hi = index_of_alpha(sweep.alphas, std::numbers::pi);
    const std::vector<double> means = sweep.mean();
    const std::vector<double> sigmas = sweep.stddev();
    const double n_exp = static_cast<double>(sweep.config.n_experiments);
    const double bessel = std::sqrt(n_exp / (n_exp - 1.0));

    double noise = 0.0;
    for (double s : sigmas)
        noise += s * bessel;
    noise /= static_cast<double>(sigmas.size());

    const double signal = means[hi] - means[lo];
    if (noise == 0.0)
        return std::copysign(analytic::kInfiniteSnr, signal);
    return signal / noise;
}

double snr_theoretical(const ExperimentConfig &cfg, std::span<const double> alphas) {
    return analytic::snr_theoretical(
        [&](double alpha) {
            ExperimentConfig at = cfg;
            at.alpha = alpha;
            return p_minus_expected(at);
        },
        alphas, cfg.n_shots);
}

std::pair<std::string, std::string> grid_parameter_names(ResetKind kind) {
    switch (kind) {
    case ResetKind::Thermal:
        return {"gamma1", "gamma2"};
    case ResetKind::ResetInstruction:
        return {"m10", "m01"};
    case ResetKind::Measurementless:
        return {"p_r", "none"};
    }
    throw std::logic_error("unreachable reset kind");
}

ResetParams with_grid_parameters(const ResetParams &base, double v1, double v2) {
    ResetParams out = base;
    if (auto *p = std::get_if<ThermalParams>(&out)) {
        p->gamma1 = v1;
        p->gamma2 = v2;
    } else if (auto *p = std::get_if<ResetInstrParams>(&out)) {
        p->m10 = v1;
        p->m01 = v2;
    } else {
        std::get<MeasurementlessParams>(out).p_r = v1;
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(master),
                      static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32), 0x5eedu};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

SnrGridResult run_snr_grid(const SnrGridSpec &spec, const RunOptions &opts) {
    const ResetKind kind = reset_kind(spec.base.reset);
    const auto [name1, name2] = grid_parameter_names(kind);
    if (spec.param1.name != name1 || spec.param2.name != name2)
        throw std::invalid_argument("grid parameters for " + std::string(to_string(kind)) +
                                    " must be " + name1 + " and " + name2);
    if (spec.param1.values.empty() || spec.param2.values.empty() || spec.otps.empty() ||
        spec.attacker_axes.empty())
        throw std::invalid_argument("SNR grid must not be empty");
    index_of_alpha(spec.alphas, 0.0);
    index_of_alpha(spec.alphas, std::numbers::pi);

    SnrGridResult result{
        .kind = kind, .param1 = spec.param1, .param2 = spec.param2, .cells = {}};
    std::uint64_t cell_index = 0;
    for (std::size_t i = 0; i < spec.param1.values.size(); ++i) {
        for (std::size_t j = 0; j < spec.param2.values.size(); ++j) {
            const ResetParams reset = with_grid_parameters(
                spec.base.reset, spec.param1.values[i], spec.param2.values[j]);
            bool valid = true;
            try {
                validate(reset);
            } catch (const std::invalid_argument &) {
                valid = false;
            }
            for (const auto &otp : spec.otps) {
                for (BasisAxis axis : spec.attacker_axes) {
                    SnrCell cell{.i = i, .j = j, .otp = otp.kind, .attacker_axis = axis};
                    const std::uint64_t index = cell_index++;
                    if (!valid) {
                        cell.valid = false;
                        cell.snr_empirical = cell.snr_theoretical =
                            std::numeric_limits<double>::quiet_NaN();
                        result.cells.push_back(cell);
                        continue;
                    }
                    ExperimentConfig cfg = spec.base;
                    cfg.reset = reset;
                    cfg.otp = otp;
                    cfg.attacker_axis = axis;
                    cfg.master_seed = derive_seed(spec.base.master_seed, index);
                    cell.snr_empirical = snr_empirical(run_sweep(cfg, spec.alphas, opts));
                    cell.snr_theoretical = snr_theoretical(cfg, spec.alphas);
                    result.cells.push_back(cell);
                }
            }
        }
    }
    return result;
}

}  // namespace qleak
