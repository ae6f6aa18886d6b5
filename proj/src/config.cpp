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

#include "qleak/config.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace qleak {

using nlohmann::json;

namespace {

std::string join(const std::string &base, const std::string &key) {
    return base + "/" + key;
}

[[noreturn]] void fail(const std::string &where, const std::string &what) {
    throw ConfigError((where.empty() ? std::string("/") : where) + ": " + what);
}

void reject_unknown(const json &obj, const std::string &where,
                    std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object())
        fail(where, "expected an object");
    for (const auto &[key, _] : obj.items()) {
        bool known = false;
        for (auto a : allowed)
            known = known || key == a;
        if (!known)
            fail(join(where, key), "unknown field");
    }
}

double number_at(const json &obj, const std::string &key, const std::string &where,
                 double fallback) {
    if (!obj.contains(key))
        return fallback;
    const json &v = obj.at(key);
    if (!v.is_number())
        fail(join(where, key), "expected a number");
    return v.get<double>();
}

std::size_t count_at(const json &obj, const std::string &key, const std::string &where,
                     std::size_t fallback) {
    if (!obj.contains(key))
        return fallback;
    const json &v = obj.at(key);
    if (!v.is_number_unsigned())
        fail(join(where, key), "expected a non-negative integer");
    return v.get<std::size_t>();
}

std::string string_of(const json &v, const std::string &where) {
    if (!v.is_string())
        fail(where, "expected a string");
    return v.get<std::string>();
}

template <typename Fn>
auto converted(const std::string &where, Fn &&fn) {
    try {
        return fn();
    } catch (const std::invalid_argument &e) {
        fail(where, e.what());
    }
}

AxisVector parse_axis_vector(const json &v, const std::string &where) {
    reject_unknown(v, where, {"theta", "phi"});
    return {number_at(v, "theta", where, 0.0), number_at(v, "phi", where, 0.0)};
}

ResetParams parse_reset(const json &v, const std::string &where) {
    if (!v.is_object() || !v.contains("kind"))
        fail(where, "expected an object with a \"kind\" field");
    const std::string kind_name = string_of(v.at("kind"), join(where, "kind"));
    const ResetKind kind =
        converted(join(where, "kind"), [&] { return parse_reset_kind(kind_name); });
    ResetParams out;
    switch (kind) {
    case ResetKind::Thermal: {
        reject_unknown(v, where, {"kind", "gamma1", "gamma2", "p0", "p1"});
        ThermalParams p;
        p.gamma1 = number_at(v, "gamma1", where, 0.0);
        p.gamma2 = number_at(v, "gamma2", where, 0.0);
        p.p0 = number_at(v, "p0", where, 1.0);
        p.p1 = number_at(v, "p1", where, 1.0 - p.p0);
        out = p;
        break;
    }
    case ResetKind::ResetInstruction: {
        reject_unknown(v, where, {"kind", "m10", "m01", "p_bf", "axis"});
        ResetInstrParams p;
        p.m10 = number_at(v, "m10", where, 0.0);
        p.m01 = number_at(v, "m01", where, 0.0);
        p.p_bf = number_at(v, "p_bf", where, 0.0);
        if (v.contains("axis"))
            p.axis = parse_axis_vector(v.at("axis"), join(where, "axis"));
        out = p;
        break;
    }
    case ResetKind::Measurementless: {
        reject_unknown(v, where, {"kind", "p_r"});
        out = MeasurementlessParams{number_at(v, "p_r", where, 0.0)};
        break;
    }
    }
    return out;
}

OtpScheme parse_otp(const json &v, const std::string &where) {
    OtpScheme scheme;
    if (v.is_string()) {
        scheme.kind = converted(where, [&] { return parse_otp_kind(v.get<std::string>()); });
    } else {
        reject_unknown(v, where, {"kind", "x_axis", "z_axis"});
        if (!v.contains("kind"))
            fail(where, "missing \"kind\"");
        const std::string name = string_of(v.at("kind"), join(where, "kind"));
        scheme.kind = converted(join(where, "kind"), [&] { return parse_otp_kind(name); });
        if (v.contains("x_axis"))
            scheme.x_axis = parse_axis_vector(v.at("x_axis"), join(where, "x_axis"));
        if (v.contains("z_axis"))
            scheme.z_axis = parse_axis_vector(v.at("z_axis"), join(where, "z_axis"));
    }
    converted(where, [&] {
        scheme.validate();
        return 0;
    });
    return scheme;
}

template <typename T, typename Fn>
std::vector<T> one_or_many(const json &doc, const std::string &key, const T &fallback,
                           Fn &&parse_one) {
    const std::string where = "/" + key;
    if (!doc.contains(key))
        return {fallback};
    const json &v = doc.at(key);
    std::vector<T> out;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(parse_one(v[i], where + "/" + std::to_string(i)));
    } else {
        out.push_back(parse_one(v, where));
    }
    if (out.empty())
        fail(where, "must not be empty");
    return out;
}

std::vector<double> number_list(const json &v, const std::string &where) {
    if (!v.is_array())
        fail(where, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number())
            fail(where + "/" + std::to_string(i), "expected a number");
        out.push_back(v[i].get<double>());
    }
    if (out.empty())
        fail(where, "must not be empty");
    return out;
}

SweepJob parse_common(const json &doc) {
    if (!doc.contains("reset"))
        fail("/reset", "required field missing");

    SweepJob job;
    ExperimentConfig &cfg = job.base;
    cfg.reset = parse_reset(doc.at("reset"), "/reset");
    converted("/reset", [&] {
        validate(cfg.reset);
        return 0;
    });
    if (doc.contains("victim_axis"))
        cfg.victim_axis = converted("/victim_axis", [&] {
            return parse_basis_axis(string_of(doc.at("victim_axis"), "/victim_axis"));
        });
    cfg.n_shots = count_at(doc, "n_shots", "", kDefaultShots);
    cfg.n_experiments = count_at(doc, "n_experiments", "", kDefaultExperiments);
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned())
            fail("/seed", "expected a non-negative integer");
        cfg.master_seed = doc.at("seed").get<std::uint64_t>();
    }
    if (cfg.n_shots < 1)
        fail("/n_shots", "must be at least 1");
    if (cfg.n_experiments < 2)
        fail("/n_experiments", "must be at least 2");

    job.otps = one_or_many(doc, "otp", OtpScheme::none(), parse_otp);
    job.attacker_axes = one_or_many(
        doc, "attacker_axis", BasisAxis::Z, [](const json &v, const std::string &where) {
            return converted(where, [&] { return parse_basis_axis(string_of(v, where)); });
        });
    job.alphas = doc.contains("alphas") ? number_list(doc.at("alphas"), "/alphas")
                                        : default_alphas();
    return job;
}

}  // namespace

json load_config_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

SweepJob parse_sweep_config(const json &doc) {
    reject_unknown(doc, "", {"reset", "otp", "victim_axis", "attacker_axis", "alphas",
                             "n_shots", "n_experiments", "seed"});
    return parse_common(doc);
}

SnrGridSpec parse_grid_config(const json &doc) {
    reject_unknown(doc, "", {"reset", "otp", "victim_axis", "attacker_axis", "alphas",
                             "n_shots", "n_experiments", "seed", "grid"});
    SweepJob job = parse_common(doc);
    if (!doc.contains("grid"))
        fail("/grid", "required field missing");
    const json &grid = doc.at("grid");
    const auto [name1, name2] = grid_parameter_names(reset_kind(job.base.reset));
    if (name2 == "none")
        reject_unknown(grid, "/grid", {name1});
    else
        reject_unknown(grid, "/grid", {name1, name2});
    if (!grid.contains(name1))
        fail("/grid/" + name1, "required field missing");

    SnrGridSpec spec;
    spec.base = job.base;
    spec.param1 = {name1, number_list(grid.at(name1), "/grid/" + name1)};
    if (name2 == "none") {
        spec.param2 = {name2, {0.0}};
    } else {
        if (!grid.contains(name2))
            fail("/grid/" + name2, "required field missing");
        spec.param2 = {name2, number_list(grid.at(name2), "/grid/" + name2)};
    }
    spec.otps = job.otps;
    spec.attacker_axes = job.attacker_axes;
    spec.alphas = job.alphas;
    bool has_zero = false;
    bool has_pi = false;
    for (double a : spec.alphas) {
        has_zero = has_zero || std::abs(a) < 1e-9;
        has_pi = has_pi || std::abs(a - std::numbers::pi) < 1e-9;
    }
    if (!has_zero || !has_pi)
        fail("/alphas", "SNR needs alpha = 0 and alpha = pi");
    return spec;
}

}  // namespace qleak
