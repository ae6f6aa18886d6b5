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

#include "qleak/report.hpp"

#include <charconv>
#include <cmath>

namespace qleak {

std::string format_double(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepResult> &sweeps) {
    out << kSweepCsvHeader << '\n';
    for (const auto &sweep : sweeps) {
        const ExperimentConfig &cfg = sweep.config;
        for (std::size_t a = 0; a < sweep.alphas.size(); ++a)
            for (std::size_t e = 0; e < sweep.p_minus[a].size(); ++e)
                out << to_string(reset_kind(cfg.reset)) << ',' << to_string(cfg.otp.kind)
                    << ',' << to_string(cfg.victim_axis) << ','
                    << to_string(cfg.attacker_axis) << ',' << format_double(sweep.alphas[a])
                    << ',' << e << ',' << cfg.n_shots << ','
                    << format_double(sweep.p_minus[a][e]) << ','
                    << format_double(sweep.p_minus_analytic[a]) << '\n';
    }
}

void write_grid_csv(std::ostream &out, const SnrGridResult &grid) {
    out << kGridCsvHeader << '\n';
    for (const auto &cell : grid.cells)
        out << to_string(grid.kind) << ',' << grid.param1.name << ','
            << format_double(grid.param1.values[cell.i]) << ',' << grid.param2.name << ','
            << format_double(grid.param2.values[cell.j]) << ',' << to_string(cell.otp)
            << ',' << to_string(cell.attacker_axis) << ','
            << format_double(cell.snr_empirical) << ','
            << format_double(cell.snr_theoretical) << ','
            << (cell.valid ? "true" : "false") << '\n';
}

}  // namespace qleak
