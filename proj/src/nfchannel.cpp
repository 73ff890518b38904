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

#include "rydmimo/nfchannel.hpp"
#include "rydmimo/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydmimo
{
    void validate_polarizations(const PolarizationSet &pols)
    {
        if (pols.empty())
            throw std::invalid_argument("polarisation set must not be empty");
        bool seen[3] = {false, false, false};
        for (auto p : pols)
        {
            const auto i = static_cast<int>(p);
            if (i < 0 || i > 2)
                throw std::invalid_argument("polarisation set holds an unknown polarisation");
            if (seen[i])
                throw std::invalid_argument("polarisation set repeats a polarisation");
            seen[i] = true;
        }
    }

    std::complex<double> scalar_green(const Eigen::Vector3d &r, const Eigen::Vector3d &r_src, double k)
    {
        const double dist = (r - r_src).norm();
        if (dist == 0.0)
            throw SingularityError("scalar_green: source and observation points coincide");
        return std::polar(1.0 / (4.0 * std::numbers::pi * dist), -k * dist);
    }

    GreensDyad dyadic_green(const Eigen::Vector3d &r, const Eigen::Vector3d &r_src, double k)
    {
        const Eigen::Vector3d diff = r - r_src;
        const double dist = diff.norm();
        if (dist == 0.0)
            throw SingularityError("dyadic_green: source and observation points coincide");

        const std::complex<double> g = std::polar(1.0 / (4.0 * std::numbers::pi * dist), -k * dist);
        const std::complex<double> jkr{0.0, k * dist};
        const double kr2 = (k * dist) * (k * dist);

        // grad grad g = g / R^2 [ (3 + 3 jkR - (kR)^2) Rhat Rhat - (1 + jkR) I ]
        const std::complex<double> transverse = 1.0 - (1.0 + jkr) / kr2;
        const std::complex<double> radial = (3.0 + 3.0 * jkr - kr2) / kr2;
        const Eigen::Vector3d unit = diff / dist;

        GreensDyad out;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                out(p, q) = g * ((p == q ? transverse : 0.0) + radial * (unit(p) * unit(q)));
        return out;
    }

    NearFieldScenario coaxial_scenario(double aperture, std::size_t side_count, double separation,
                                       PolarizationSet tx_pols, PolarizationSet rx_pols)
    {
        if (!std::isfinite(separation) || separation <= 0.0)
            throw std::invalid_argument("coaxial_scenario: separation must be positive");
        validate_polarizations(tx_pols);
        validate_polarizations(rx_pols);
        return NearFieldScenario{uniform_planar_array(aperture, side_count, 0.0),
                                 uniform_planar_array(aperture, side_count, separation),
                                 separation, std::move(tx_pols), std::move(rx_pols)};
    }

    ChannelMatrix classical_channel(const NearFieldScenario &sc)
    {
        validate_polarizations(sc.tx_pols);
        validate_polarizations(sc.rx_pols);

        const auto nr = static_cast<Eigen::Index>(sc.rx.size());
        const auto nt = static_cast<Eigen::Index>(sc.tx.size());
        const auto prx = static_cast<Eigen::Index>(sc.rx_pols.size());
        const auto ptx = static_cast<Eigen::Index>(sc.tx_pols.size());

        ChannelMatrix out{Eigen::MatrixXcd(nr * prx, nt * ptx), ChannelOrigin::near_field_classical};
        for (Eigen::Index m = 0; m < nr; ++m)
            for (Eigen::Index n = 0; n < nt; ++n)
            {
                const GreensDyad g = dyadic_green(sc.rx.position(static_cast<std::size_t>(m)),
                                                  sc.tx.position(static_cast<std::size_t>(n)), wavenumber);
                for (Eigen::Index a = 0; a < prx; ++a)
                    for (Eigen::Index b = 0; b < ptx; ++b)
                        out.h(a * nr + m, b * nt + n) = g(static_cast<int>(sc.rx_pols[static_cast<std::size_t>(a)]),
                                                          static_cast<int>(sc.tx_pols[static_cast<std::size_t>(b)]));
            }
        return out;
    }

    ChannelMatrix rydberg_channel(const NearFieldScenario &sc)
    {
        validate_polarizations(sc.tx_pols);
        if (sc.tx_pols.size() != 1)
            throw UnsupportedError("rydberg_channel: exactly one transmit polarisation is supported");
        const int col = static_cast<int>(sc.tx_pols.front());

        const auto nr = static_cast<Eigen::Index>(sc.rx.size());
        const auto nt = static_cast<Eigen::Index>(sc.tx.size());
        ChannelMatrix out{Eigen::MatrixXcd(nr, nt), ChannelOrigin::near_field_rydberg};
        for (Eigen::Index m = 0; m < nr; ++m)
            for (Eigen::Index n = 0; n < nt; ++n)
            {
                const auto &r = sc.rx.position(static_cast<std::size_t>(m));
                const auto &r_src = sc.tx.position(static_cast<std::size_t>(n));
                const GreensDyad g = dyadic_green(r, r_src, wavenumber);
                out.h(m, n) = std::polar(g.col(col).norm(), -wavenumber * (r - r_src).norm());
            }
        return out;
    }
}
