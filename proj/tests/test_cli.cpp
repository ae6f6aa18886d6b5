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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qleak/cli.hpp"
#include "qleak/report.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace qleak;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qleak");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code =
        cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    explicit Scratch(const std::string &name)
        : dir_(fs::temp_directory_path() / ("qleak_cli_" + name)) {
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    fs::path path(const std::string &leaf) const { return dir_ / leaf; }

    std::string write(const std::string &leaf, const std::string &content) const {
        std::ofstream(path(leaf)) << content;
        return path(leaf).string();
    }

private:
    fs::path dir_;
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> fields(const std::string &line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');)
        out.push_back(f);
    return out;
}

const char *kSmallSweep = R"({
  "reset": {"kind": "reset_instruction", "m10": 0.05, "m01": 0.10},
  "otp": ["none", "cotp", "qotp"],
  "attacker_axis": ["z", "x"],
  "alphas": [0, 1.5707963267948966, 3.141592653589793],
  "n_shots": 200,
  "n_experiments": 3,
  "seed": 99
})";

}  // namespace

TEST_CASE("sweep writes CSV and manifest") {
    Scratch s("sweep");
    const std::string cfg = s.write("cfg.json", kSmallSweep);
    const Run r = run_cli({"sweep", "--config", cfg, "--out", s.path("out").string()});
    REQUIRE(r.code == cli::kSuccess);

    const std::string csv = slurp(s.path("out/sweep.csv"));
    CHECK(csv.find('\r') == std::string::npos);
    const auto rows = lines(csv);
    REQUIRE(rows.size() == 1 + 3 * 2 * 3 * 3);
    CHECK(rows[0] == kSweepCsvHeader);
    CHECK(fields(rows[1]) == std::vector<std::string>{"reset_instruction", "none", "z", "z",
                                                      "0", "0", "200", fields(rows[1])[7],
                                                      fields(rows[1])[8]});
    for (std::size_t i = 1; i < rows.size(); ++i)
        REQUIRE(fields(rows[i]).size() == 9);

    const auto manifest = nlohmann::json::parse(slurp(s.path("out/manifest.json")));
    CHECK(manifest["command"] == "sweep");
    CHECK(manifest["version"] == cli::kVersion);
    CHECK(manifest["master_seed"] == 99);
    CHECK(manifest["outputs"] == nlohmann::json::array({"sweep.csv"}));
    CHECK(manifest["config"]["n_shots"] == 200);
    CHECK(manifest.contains("started_at"));
    CHECK(manifest.contains("finished_at"));
}

TEST_CASE("sweep CSV rows of the flat pads are flat") {
    Scratch s("flat");
    const std::string cfg = s.write("cfg.json", kSmallSweep);
    REQUIRE(run_cli({"sweep", "--config", cfg, "--out", s.path("o").string()}).code == 0);
    const auto rows = lines(slurp(s.path("o/sweep.csv")));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = fields(rows[i]);
        if (f[1] != "none" && f[3] == "z")
            REQUIRE(std::stod(f[8]) == doctest::Approx(0.075).epsilon(1e-13));
    }
}

TEST_CASE("same config and seed give byte-identical CSV across thread counts") {
    Scratch s("determinism");
    const std::string cfg = s.write("cfg.json", kSmallSweep);
    REQUIRE(run_cli({"sweep", "--config", cfg, "--out", s.path("a").string(), "--threads",
                     "1"}).code == 0);
    REQUIRE(run_cli({"sweep", "--config", cfg, "--out", s.path("b").string(), "--threads",
                     "8"}).code == 0);
    CHECK(slurp(s.path("a/sweep.csv")) == slurp(s.path("b/sweep.csv")));

    REQUIRE(run_cli({"sweep", "--config", cfg, "--out", s.path("c").string(), "--seed",
                     "100"}).code == 0);
    CHECK(slurp(s.path("a/sweep.csv")) != slurp(s.path("c/sweep.csv")));
    const auto manifest = nlohmann::json::parse(slurp(s.path("c/manifest.json")));
    CHECK(manifest["master_seed"] == 100);
}

TEST_CASE("config errors exit with code 2") {
    Scratch s("errors");
    const auto run_with = [&](const std::string &content) {
        const std::string cfg = s.write("bad.json", content);
        return run_cli({"sweep", "--config", cfg, "--out", s.path("o").string()});
    };

    Run r = run_with(R"({"reset": {"kind": "measurementless", "p_r": 0.1}, "alphas": []})");
    CHECK(r.code == cli::kConfigError);
    CHECK(r.err.find("/alphas") != std::string::npos);

    r = run_with(R"({"reset": {"kind": "measurementless", "pr": 0.1}})");
    CHECK(r.code == cli::kConfigError);
    CHECK(r.err.find("/reset/pr: unknown field") != std::string::npos);

    r = run_with(R"({"reset": {"kind": "measurementless"}, "n_shot": 10})");
    CHECK(r.code == cli::kConfigError);
    CHECK(r.err.find("/n_shot") != std::string::npos);

    r = run_with("{\n  \"reset\": {\"kind\": \"thermal\",}\n}");
    CHECK(r.code == cli::kConfigError);
    CHECK(r.err.find("line 2") != std::string::npos);

    r = run_with(R"({"reset": {"kind": "thermal", "gamma1": 3, "gamma2": 1}})");
    CHECK(r.code == cli::kConfigError);

    r = run_with(R"({"reset": {"kind": "reset_instruction", "m10": 1.5}})");
    CHECK(r.code == cli::kConfigError);

    r = run_with(R"({"reset": {"kind": "teleport"}})");
    CHECK(r.code == cli::kConfigError);

    r = run_with(R"({"reset": {"kind": "measurementless"}, "n_experiments": 1})");
    CHECK(r.code == cli::kConfigError);

    CHECK(run_cli({"sweep", "--out", "x"}).code == cli::kConfigError);
    CHECK(run_cli({"frobnicate"}).code == cli::kConfigError);
}

TEST_CASE("I/O errors exit with code 3") {
    Scratch s("io");
    Run r = run_cli({"sweep", "--config", s.path("missing.json").string(), "--out",
                     s.path("o").string()});
    CHECK(r.code == cli::kIoError);

    const std::string cfg = s.write("cfg.json", kSmallSweep);
    const std::string blocker = s.write("blocker", "not a directory");
    r = run_cli({"sweep", "--config", cfg, "--out", blocker + "/sub"});
    CHECK(r.code == cli::kIoError);
}

TEST_CASE("snr-grid marks thermal cells outside the physical domain") {
    Scratch s("thermal_grid");
    const std::string cfg = s.write("grid.json", R"({
      "reset": {"kind": "thermal"},
      "grid": {"gamma1": [0.5, 3.0], "gamma2": [1.0, 2.0]},
      "attacker_axis": ["z", "x"],
      "alphas": [0, 3.141592653589793],
      "n_shots": 50,
      "n_experiments": 2
    })");
    REQUIRE(run_cli({"snr-grid", "--config", cfg, "--out", s.path("o").string()}).code == 0);
    const auto rows = lines(slurp(s.path("o/snr_grid.csv")));
    REQUIRE(rows.size() == 1 + 2 * 2 * 2);
    CHECK(rows[0] == kGridCsvHeader);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = fields(rows[i]);
        REQUIRE(f.size() == 10);
        const bool expect_valid = std::stod(f[2]) <= 2 * std::stod(f[4]);
        CHECK(f[9] == (expect_valid ? "true" : "false"));
        if (!expect_valid)
            CHECK(f[8] == "nan");
    }
}

TEST_CASE("snr-grid 1x1 gives one row") {
    Scratch s("one_cell");
    const std::string cfg = s.write("grid.json", R"({
      "reset": {"kind": "reset_instruction"},
      "grid": {"m10": [0.1], "m01": [0.05]},
      "n_shots": 100,
      "n_experiments": 3
    })");
    REQUIRE(run_cli({"snr-grid", "--config", cfg, "--out", s.path("o").string()}).code == 0);
    const auto rows = lines(slurp(s.path("o/snr_grid.csv")));
    REQUIRE(rows.size() == 2);
    const auto f = fields(rows[1]);
    CHECK(f[0] == "reset_instruction");
    CHECK(f[1] == "m10");
    CHECK(f[3] == "m01");
    CHECK(std::stod(f[8]) < 0);
}

TEST_CASE("measurement-less theoretical SNR grows with p_r") {
    Scratch s("monotone");
    const std::string cfg = s.write("grid.json", R"({
      "reset": {"kind": "measurementless"},
      "grid": {"p_r": [0.02, 0.05, 0.1, 0.2, 0.4, 0.8]},
      "n_shots": 20,
      "n_experiments": 2
    })");
    REQUIRE(run_cli({"snr-grid", "--config", cfg, "--out", s.path("o").string()}).code == 0);
    const auto rows = lines(slurp(s.path("o/snr_grid.csv")));
    REQUIRE(rows.size() == 7);
    double previous = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = fields(rows[i]);
        CHECK(f[3] == "none");
        const double snr = std::stod(f[8]);
        REQUIRE(snr > previous);
        previous = snr;
    }
}

TEST_CASE("snr-grid rejects configs without the SNR endpoints") {
    Scratch s("grid_errors");
    std::string cfg = s.write("grid.json", R"({
      "reset": {"kind": "measurementless"},
      "grid": {"p_r": [0.1]},
      "alphas": [0, 1]
    })");
    CHECK(run_cli({"snr-grid", "--config", cfg, "--out", s.path("o").string()}).code ==
          cli::kConfigError);
    cfg = s.write("grid.json", R"({
      "reset": {"kind": "measurementless"},
      "grid": {"gamma1": [0.1]}
    })");
    CHECK(run_cli({"snr-grid", "--config", cfg, "--out", s.path("o").string()}).code ==
          cli::kConfigError);
}

TEST_CASE("verify passes on the stock build and names an injected failure") {
    Run r = run_cli({"verify", "--quick"});
    INFO(r.out);
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run_cli({"verify", "--quick", "--inject-broken-kraus"});
    CHECK(r.code == cli::kVerificationFailure);
    CHECK(r.out.find("FAIL cptp/injected-half-identity") != std::string::npos);
}

TEST_CASE("CSV numbers round-trip") {
    for (double x : {0.1, 1.0 / 3.0, 0.075, 1e-300, 6.02214076e23, -0.0, 0.0}) {
        const std::string s = format_double(x);
        REQUIRE(std::stod(s) == x);
    }
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}
