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

// simulate: run a far-field or near-field capacity sweep and write the results as CSV.
//
//   simulate --config configs/farfield.cfg --out farfield.csv
//   simulate --config configs/nearfield.cfg --snr-db 15
//
// Exit codes: 0 success, 2 configuration error, 3 numerical error, 1 anything else.

#include "rydmimo/errors.hpp"
#include "rydmimo/sweep.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

namespace
{
    constexpr int exit_config = 2;
    constexpr int exit_numerical = 3;
}

int main(int argc, char **argv)
{
    CLI::App app{"Capacity sweeps for Rydberg atomic and classical dipole MIMO receivers"};

    std::string config_path;
    std::optional<std::string> experiment, out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials, threads;
    std::optional<double> snr_db;
    bool pitch_column = false;

    app.add_option("--config", config_path, "Sweep configuration file (key = value lines)")->required();
    app.add_option("--experiment", experiment, "Override the experiment")->check(CLI::IsMember({"farfield", "nearfield"}));
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--seed", seed, "Override the Monte Carlo seed");
    app.add_option("--trials", trials, "Override the Monte Carlo trial count");
    app.add_option("--snr-db", snr_db, "Override the total SNR in dB");
    app.add_option("--threads", threads, "Worker threads, 0 = all hardware threads (results do not depend on it)");
    app.add_flag("--pitch-column", pitch_column, "Append a pitch = L / N column to the CSV");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config;
    }

    try
    {
        rydmimo::SweepConfig cfg = rydmimo::load_config(config_path);
        if (experiment)
            rydmimo::set_config_value(cfg, "experiment", *experiment);
        if (seed)
            cfg.seed = *seed;
        if (trials)
            cfg.trials = *trials;
        if (snr_db)
            cfg.snr_db = *snr_db;
        if (threads)
            cfg.threads = *threads;
        if (pitch_column)
            cfg.pitch_column = true;
        rydmimo::validate(cfg);

        const auto result = rydmimo::run_sweep(cfg);
        if (out_path)
            rydmimo::emit_csv(result, *out_path, cfg.pitch_column);
        else
            rydmimo::write_csv(result, std::cout, cfg.pitch_column);
    }
    catch (const rydmimo::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const rydmimo::NumericalError &e)
    {
        std::cerr << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    }
    catch (const rydmimo::DegeneratePatternError &e)
    {
        std::cerr << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
