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

#include "rydmimo/sweep.hpp"
#include "rydmimo/capacity.hpp"
#include "rydmimo/errors.hpp"
#include "rydmimo/nfchannel.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rydmimo
{
    std::string_view label(Experiment e)
    {
        return e == Experiment::farfield ? "farfield" : "nearfield";
    }

    std::string_view label(SystemKind s)
    {
        switch (s)
        {
        case SystemKind::rydberg:
            return "rydberg";
        case SystemKind::dipole_1pol:
            return "dipole-1pol";
        case SystemKind::dipole_2pol:
            return "dipole-2pol";
        }
        return "unknown";
    }

    std::string_view label(AtomicEfficiency a)
    {
        return a == AtomicEfficiency::hannan ? "hannan" : "unity";
    }

    std::vector<double> default_sweep(Experiment e)
    {
        if (e == Experiment::nearfield)
            return {1, 2, 3, 5, 10, 20, 50, 100};
        std::vector<double> n;
        for (int i = 2; i <= 16; ++i)
            n.push_back(i);
        return n;
    }

    std::vector<double> resolved_sweep(const SweepConfig &cfg)
    {
        return cfg.sweep ? *cfg.sweep : default_sweep(cfg.experiment);
    }

    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        std::vector<std::string_view> split_list(std::string_view value)
        {
            std::vector<std::string_view> items;
            value = trim(value);
            if (value.empty())
                return items;
            std::size_t start = 0;
            while (true)
            {
                const auto comma = value.find(',', start);
                items.push_back(trim(value.substr(start, comma == std::string_view::npos ? value.npos : comma - start)));
                if (comma == std::string_view::npos)
                    break;
                start = comma + 1;
            }
            return items;
        }

        double parse_double(std::string_view key, std::string_view text)
        {
            double v = 0.0;
            const auto *end = text.data() + text.size();
            const auto [ptr, ec] = std::from_chars(text.data(), end, v);
            if (ec != std::errc{} || ptr != end || !std::isfinite(v))
                throw ConfigError(std::string(key), "expected a finite number, got '" + std::string(text) + "'");
            return v;
        }

        template <typename Int>
        Int parse_unsigned(std::string_view key, std::string_view text)
        {
            Int v = 0;
            const auto *end = text.data() + text.size();
            const auto [ptr, ec] = std::from_chars(text.data(), end, v);
            if (ec != std::errc{} || ptr != end)
                throw ConfigError(std::string(key), "expected a non-negative integer, got '" + std::string(text) + "'");
            return v;
        }

        bool parse_bool(std::string_view key, std::string_view text)
        {
            if (text == "true" || text == "1" || text == "yes")
                return true;
            if (text == "false" || text == "0" || text == "no")
                return false;
            throw ConfigError(std::string(key), "expected true or false, got '" + std::string(text) + "'");
        }

        SystemKind parse_system(std::string_view text)
        {
            if (text == "rydberg")
                return SystemKind::rydberg;
            if (text == "dipole-1pol")
                return SystemKind::dipole_1pol;
            if (text == "dipole-2pol")
                return SystemKind::dipole_2pol;
            throw ConfigError("systems", "unknown system '" + std::string(text) + "'");
        }
    }

    void set_config_value(SweepConfig &cfg, std::string_view key, std::string_view value)
    {
        value = trim(value);
        if (key == "experiment")
        {
            if (value == "farfield")
                cfg.experiment = Experiment::farfield;
            else if (value == "nearfield")
                cfg.experiment = Experiment::nearfield;
            else
                throw ConfigError("experiment", "expected farfield or nearfield, got '" + std::string(value) + "'");
        }
        else if (key == "aperture")
            cfg.aperture = parse_double(key, value);
        else if (key == "sweep")
        {
            std::vector<double> values;
            for (auto item : split_list(value))
                values.push_back(parse_double(key, item));
            cfg.sweep = std::move(values);
        }
        else if (key == "systems")
        {
            cfg.systems.clear();
            for (auto item : split_list(value))
                cfg.systems.push_back(parse_system(item));
        }
        else if (key == "snr_db")
            cfg.snr_db = parse_double(key, value);
        else if (key == "seed")
            cfg.seed = parse_unsigned<std::uint64_t>(key, value);
        else if (key == "trials")
            cfg.trials = parse_unsigned<std::size_t>(key, value);
        else if (key == "quad_theta")
            cfg.quad.theta_nodes = parse_unsigned<std::size_t>(key, value);
        else if (key == "quad_phi")
            cfg.quad.phi_nodes = parse_unsigned<std::size_t>(key, value);
        else if (key == "atomic_efficiency")
        {
            if (value == "hannan")
                cfg.atomic_efficiency = AtomicEfficiency::hannan;
            else if (value == "unity")
                cfg.atomic_efficiency = AtomicEfficiency::unity;
            else
                throw ConfigError("atomic_efficiency", "expected hannan or unity, got '" + std::string(value) + "'");
        }
        else if (key == "nearfield_side")
            cfg.nearfield_side = parse_unsigned<std::size_t>(key, value);
        else if (key == "threads")
            cfg.threads = parse_unsigned<std::size_t>(key, value);
        else if (key == "pitch_column")
            cfg.pitch_column = parse_bool(key, value);
        else
            throw ConfigError(std::string(key), "unknown key");
    }

    SweepConfig parse_config(std::istream &in, const std::string &source)
    {
        SweepConfig cfg;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            std::string_view view(line);
            if (const auto hash = view.find('#'); hash != std::string_view::npos)
                view = view.substr(0, hash);
            view = trim(view);
            if (view.empty())
                continue;

            const auto eq = view.find('=');
            const std::string where = source + ":" + std::to_string(line_no);
            if (eq == std::string_view::npos)
                throw ConfigError("", where + ": expected 'key = value'");
            const auto key = trim(view.substr(0, eq));
            try
            {
                set_config_value(cfg, key, view.substr(eq + 1));
            }
            catch (const ConfigError &e)
            {
                throw ConfigError(e.key(), where + ": " + e.what());
            }
        }
        return cfg;
    }

    SweepConfig load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("config", "cannot open '" + path + "'");
        return parse_config(in, path);
    }

    void validate(const SweepConfig &cfg)
    {
        if (!std::isfinite(cfg.aperture) || cfg.aperture <= 0.0)
            throw ConfigError("aperture", "must be positive");
        if (!std::isfinite(cfg.snr_db))
            throw ConfigError("snr_db", "must be finite");
        if (cfg.systems.empty())
            throw ConfigError("systems", "must list at least one system");
        for (std::size_t i = 0; i < cfg.systems.size(); ++i)
            for (std::size_t j = i + 1; j < cfg.systems.size(); ++j)
                if (cfg.systems[i] == cfg.systems[j])
                    throw ConfigError("systems", "lists '" + std::string(label(cfg.systems[i])) + "' twice");
        if (cfg.trials == 0)
            throw ConfigError("trials", "must be at least 1");
        if (cfg.quad.theta_nodes == 0)
            throw ConfigError("quad_theta", "must be at least 1");
        if (cfg.quad.phi_nodes == 0)
            throw ConfigError("quad_phi", "must be at least 1");
        if (cfg.nearfield_side == 0)
            throw ConfigError("nearfield_side", "must be at least 1");

        const auto sweep = resolved_sweep(cfg);
        if (sweep.empty())
            throw ConfigError("sweep", "must list at least one value");
        for (double v : sweep)
        {
            if (!std::isfinite(v) || v <= 0.0)
                throw ConfigError("sweep", "values must be positive");
            if (cfg.experiment == Experiment::farfield && v != std::floor(v))
                throw ConfigError("sweep", "farfield values are element counts and must be integers");
        }
    }

    std::uint64_t sweep_point_seed(std::uint64_t seed, std::size_t point_index, SystemKind system)
    {
        return trial_stream_seed(trial_stream_seed(seed, point_index), static_cast<std::uint64_t>(system) + 1);
    }

    SweepResult run_farfield(const SweepConfig &cfg)
    {
        validate(cfg);
        if (cfg.experiment != Experiment::farfield)
            throw ConfigError("experiment", "run_farfield needs experiment = farfield");

        const double gamma = db_to_linear(cfg.snr_db);
        const auto sweep = resolved_sweep(cfg);

        SweepResult res{Experiment::farfield, {}};
        for (std::size_t p = 0; p < sweep.size(); ++p)
        {
            const auto side = static_cast<std::size_t>(sweep[p]);
            const PlanarArray arr = uniform_planar_array(cfg.aperture, side);
            const double area = arr.element_area();

            std::optional<CorrelationMatrix> r_iso, r_dip;
            for (auto sys : cfg.systems)
            {
                ChannelEnsembleSpec spec;
                if (sys == SystemKind::rydberg)
                {
                    if (!r_iso)
                        r_iso = correlation_matrix(arr, PatternKind::isotropic, cfg.quad);
                    spec.correlation = *r_iso;
                    spec.efficiency = cfg.atomic_efficiency == AtomicEfficiency::unity
                                          ? 1.0
                                          : hannan_efficiency(area, EfficiencyKind::atomic);
                }
                else
                {
                    if (!r_dip)
                        r_dip = correlation_matrix(arr, PatternKind::dipole, cfg.quad);
                    spec.correlation = sys == SystemKind::dipole_2pol ? dual_polarized(*r_dip) : *r_dip;
                    spec.efficiency = hannan_efficiency(area, EfficiencyKind::dipole);
                }
                // Ideal transmitter with as many ports as the receiver.
                spec.tx_count = static_cast<std::size_t>(spec.correlation.r.rows());
                spec.seed = sweep_point_seed(cfg.seed, p, sys);
                spec.trials = cfg.trials;

                const auto erg = ergodic_capacity(spec, {gamma, spec.tx_count}, cfg.threads);
                res.rows.push_back({sweep[p], sys, erg.mean, erg.std_error, arr.pitch()});
            }
        }
        return res;
    }

    SweepResult run_nearfield(const SweepConfig &cfg)
    {
        validate(cfg);
        if (cfg.experiment != Experiment::nearfield)
            throw ConfigError("experiment", "run_nearfield needs experiment = nearfield");

        const double gamma = db_to_linear(cfg.snr_db);
        const auto sweep = resolved_sweep(cfg);

        SweepResult res{Experiment::nearfield, {}};
        for (double d : sweep)
        {
            const auto single = coaxial_scenario(cfg.aperture, cfg.nearfield_side, d);
            const ChannelMatrix reference = classical_channel(single);
            const NormalizationPolicy policy{NormalizationMode::reference_channel, reference.h};

            for (auto sys : cfg.systems)
            {
                ChannelMatrix h;
                switch (sys)
                {
                case SystemKind::rydberg:
                    h = rydberg_channel(single);
                    break;
                case SystemKind::dipole_1pol:
                    h = reference;
                    break;
                case SystemKind::dipole_2pol:
                    h = classical_channel(coaxial_scenario(cfg.aperture, cfg.nearfield_side, d,
                                                           {Polarization::x, Polarization::y},
                                                           {Polarization::x, Polarization::y}));
                    break;
                }
                const ChannelMatrix scaled = normalize(h, policy);
                const auto tx_ports = static_cast<std::size_t>(scaled.h.cols());
                res.rows.push_back({d, sys, det_capacity(scaled, {gamma, tx_ports}), 0.0, single.tx.pitch()});
            }
        }
        return res;
    }

    SweepResult run_sweep(const SweepConfig &cfg)
    {
        return cfg.experiment == Experiment::farfield ? run_farfield(cfg) : run_nearfield(cfg);
    }

    namespace
    {
        void put_number(std::ostream &out, double v)
        {
            char buf[64];
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
            if (ec != std::errc{})
                throw std::runtime_error("write_csv: number formatting failed");
            out.write(buf, ptr - buf);
        }
    }

    void write_csv(const SweepResult &res, std::ostream &out, bool pitch_column)
    {
        out << "sweep,system,capacity_bits,stderr";
        if (pitch_column)
            out << ",pitch";
        out << '\n';
        for (const auto &row : res.rows)
        {
            put_number(out, row.sweep);
            out << ',' << label(row.system) << ',';
            put_number(out, row.capacity_bits);
            out << ',';
            put_number(out, row.std_error);
            if (pitch_column)
            {
                out << ',';
                put_number(out, row.pitch);
            }
            out << '\n';
        }
    }

    void emit_csv(const SweepResult &res, const std::string &path, bool pitch_column)
    {
        std::ostringstream buffer;
        write_csv(res, buffer, pitch_column);

        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file)
            throw std::runtime_error("emit_csv: cannot open '" + path + "' for writing");
        const std::string bytes = buffer.str();
        file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        file.close();
        if (!file)
            throw std::runtime_error("emit_csv: write to '" + path + "' failed");
    }
}
