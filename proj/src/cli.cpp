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

#include "qleak/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qleak/config.hpp"
#include "qleak/report.hpp"
#include "qleak/verify.hpp"

namespace qleak::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
    std::string config;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    bool quick = false;
    bool inject_broken_kraus = false;
};

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void prepare_out_dir(const fs::path &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError("cannot create output directory " + dir.string());
}

void write_file(const fs::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out)
        throw IoError("failed writing " + path.string());
}

void write_manifest(const fs::path &dir, const std::string &command, const json &config,
                    std::uint64_t seed, const std::string &started,
                    const std::vector<std::string> &outputs) {
    json manifest = {
        {"tool", "qleak"},
        {"version", kVersion},
        {"command", command},
        {"config", config},
        {"master_seed", seed},
        {"started_at", started},
        {"finished_at", utc_timestamp()},
        {"outputs", outputs},
    };
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

int cmd_sweep(const Options &opts, std::ostream &out) {
    const std::string started = utc_timestamp();
    const json doc = load_config_file(opts.config);
    SweepJob job = parse_sweep_config(doc);
    if (opts.seed)
        job.base.master_seed = *opts.seed;
    const fs::path dir(opts.out_dir);
    prepare_out_dir(dir);

    std::vector<SweepResult> sweeps;
    std::uint64_t index = 0;
    for (const auto &otp : job.otps)
        for (BasisAxis axis : job.attacker_axes) {
            ExperimentConfig cfg = job.base;
            cfg.otp = otp;
            cfg.attacker_axis = axis;
            cfg.master_seed = derive_seed(job.base.master_seed, index++);
            sweeps.push_back(run_sweep(cfg, job.alphas, {opts.threads, true}));
        }

    std::ostringstream csv;
    write_sweep_csv(csv, sweeps);
    write_file(dir / "sweep.csv", csv.str());
    write_manifest(dir, "sweep", doc, job.base.master_seed, started, {"sweep.csv"});
    out << "wrote " << (dir / "sweep.csv").string() << " (" << sweeps.size()
        << " sweeps)\n";
    return kSuccess;
}

int cmd_snr_grid(const Options &opts, std::ostream &out) {
    const std::string started = utc_timestamp();
    const json doc = load_config_file(opts.config);
    SnrGridSpec spec = parse_grid_config(doc);
    if (opts.seed)
        spec.base.master_seed = *opts.seed;
    const fs::path dir(opts.out_dir);
    prepare_out_dir(dir);

    const SnrGridResult grid = run_snr_grid(spec, {opts.threads, true});
    std::ostringstream csv;
    write_grid_csv(csv, grid);
    write_file(dir / "snr_grid.csv", csv.str());
    write_manifest(dir, "snr-grid", doc, spec.base.master_seed, started, {"snr_grid.csv"});
    out << "wrote " << (dir / "snr_grid.csv").string() << " (" << grid.cells.size()
        << " cells)\n";
    return kSuccess;
}

int cmd_verify(const Options &opts, std::ostream &out) {
    VerifyOptions vopts;
    vopts.quick = opts.quick;
    vopts.threads = opts.threads;
    if (opts.seed)
        vopts.seed = *opts.seed;
    if (opts.inject_broken_kraus)
        vopts.extra_kraus_sets.push_back(
            {"injected-half-identity", {0.5 * identity(2)}});
    const VerifyReport report = run_verification(vopts);
    for (const auto &check : report.checks)
        out << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail
            << '\n';
    out << (report.passed() ? "verification passed\n" : "verification FAILED\n");
    return report.passed() ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum state leakage across reset operations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Options opts;
    std::uint64_t seed = 0;
    const auto add_run_flags = [&](CLI::App *sub) {
        sub->add_option("--config", opts.config, "JSON configuration file")->required();
        sub->add_option("--out", opts.out_dir, "output directory")->required();
        sub->add_option("--seed", seed, "master seed, overrides the config");
        sub->add_option("--threads", opts.threads, "worker threads, 0 = auto");
    };

    CLI::App *sweep = app.add_subcommand("sweep", "P(-1) versus alpha");
    add_run_flags(sweep);
    CLI::App *grid = app.add_subcommand("snr-grid", "SNR over a grid of error rates");
    add_run_flags(grid);
    CLI::App *verify = app.add_subcommand("verify", "self-check of channels and formulas");
    verify->add_flag("--quick", opts.quick, "reduced Monte Carlo workload");
    verify->add_option("--seed", seed, "seed for the Monte Carlo checks");
    verify->add_option("--threads", opts.threads, "worker threads, 0 = auto");
    verify->add_flag("--inject-broken-kraus", opts.inject_broken_kraus)
        ->group("");  // test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kConfigError;
    }
    for (CLI::App *sub : {sweep, grid, verify})
        if (sub->count("--seed") > 0)
            opts.seed = seed;

    try {
        if (*sweep)
            return cmd_sweep(opts, out);
        if (*grid)
            return cmd_snr_grid(opts, out);
        return cmd_verify(opts, out);
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const IoError &e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }
}

}  // namespace qleak::cli
