// SPDX-License-Identifier: Apache-2.0
//
// rydmimo: channel modelling and capacity analysis for Rydberg atomic MIMO receivers
// Copyright (C) 2026 The rydmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef rydmimo_sweep_H
#define rydmimo_sweep_H

#include "rydmimo/ffchannel.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Declarative capacity sweeps for the two reference experiments:
//   farfield  - ergodic capacity versus element count N on a fixed L x L aperture
//   nearfield - deterministic capacity versus separation D between two coaxial arrays
//
// Configuration files are flat `key = value` lines; `#` starts a comment. Lists are comma separated.
//
//   experiment        = farfield | nearfield
//   aperture          = 5                      # L in wavelengths
//   sweep             = 2, 3, 4                # N values (farfield) or D in wavelengths (nearfield)
//   systems           = rydberg, dipole-1pol, dipole-2pol
//   snr_db            = 10
//   seed              = 1
//   trials            = 2000
//   quad_theta        = 64
//   quad_phi          = 128
//   atomic_efficiency = hannan | unity
//   nearfield_side    = 10                     # N per side for the nearfield arrays
//   threads           = 0                      # 0 = all hardware threads
//   pitch_column      = false                  # append a pitch = L / N column to the CSV
namespace rydmimo
{
    enum class Experiment
    {
        farfield,
        nearfield
    };

    enum class SystemKind
    {
        rydberg,
        dipole_1pol,
        dipole_2pol
    };

    enum class AtomicEfficiency
    {
        hannan, // e = min(1, 4 pi S)
        unity   // mutual-coupling losses ignored for atomic cells
    };

    std::string_view label(Experiment e);
    std::string_view label(SystemKind s);
    std::string_view label(AtomicEfficiency a);

    struct SweepConfig
    {
        Experiment experiment = Experiment::farfield;
        double aperture = 5.0;
        std::optional<std::vector<double>> sweep; // unset: the experiment's default sweep
        std::vector<SystemKind> systems{SystemKind::rydberg, SystemKind::dipole_1pol, SystemKind::dipole_2pol};
        double snr_db = 10.0;
        std::uint64_t seed = 1;
        std::size_t trials = 2000;
        QuadratureSpec quad{};
        AtomicEfficiency atomic_efficiency = AtomicEfficiency::hannan;
        std::size_t nearfield_side = 10;
        std::size_t threads = 0;
        bool pitch_column = false;
    };

    // Defaults: N = 2..16 for farfield, D = {1, 2, 3, 5, 10, 20, 50, 100} for nearfield.
    std::vector<double> default_sweep(Experiment e);
    std::vector<double> resolved_sweep(const SweepConfig &cfg);

    // Applies one key/value pair. Throws ConfigError naming the key.
    void set_config_value(SweepConfig &cfg, std::string_view key, std::string_view value);

    // Parses a configuration stream on top of the defaults. Errors carry `source:line`.
    SweepConfig parse_config(std::istream &in, const std::string &source = "<config>");
    SweepConfig load_config(const std::string &path);

    // Throws ConfigError naming the first invalid field.
    void validate(const SweepConfig &cfg);

    struct SweepRow
    {
        double sweep = 0.0; // N (farfield) or D in wavelengths (nearfield)
        SystemKind system = SystemKind::rydberg;
        double capacity_bits = 0.0;
        double std_error = 0.0; // 0 for deterministic channels
        double pitch = 0.0;     // element pitch in wavelengths
    };

    struct SweepResult
    {
        Experiment experiment = Experiment::farfield;
        std::vector<SweepRow> rows; // sweep order, then system order
    };

    // Seed of the Monte Carlo ensemble for one (sweep point, system) cell.
    std::uint64_t sweep_point_seed(std::uint64_t seed, std::size_t point_index, SystemKind system);

    SweepResult run_farfield(const SweepConfig &cfg);
    SweepResult run_nearfield(const SweepConfig &cfg);
    SweepResult run_sweep(const SweepConfig &cfg);

    // Header `sweep,system,capacity_bits,stderr` (plus `,pitch` if requested), '\n' line endings and
    // shortest round-trip decimal formatting, so identical results give identical bytes.
    void write_csv(const SweepResult &res, std::ostream &out, bool pitch_column = false);

    // Throws std::runtime_error naming the path if the file cannot be written.
    void emit_csv(const SweepResult &res, const std::string &path, bool pitch_column = false);
}

#endif
