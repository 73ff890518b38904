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

#ifndef rydmimo_nfchannel_H
#define rydmimo_nfchannel_H

#include "rydmimo/arraygeom.hpp"
#include "rydmimo/channel.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

// Deterministic line-of-sight channels between two parallel, coaxial planar arrays.
// The free-space kernel is g = exp(-j k R) / (4 pi R), the same phase convention as the
// Rydberg channel element, and G = (I + grad grad / k^2) g is evaluated in closed form.
namespace rydmimo
{
    using GreensDyad = Eigen::Matrix3cd;

    enum class Polarization
    {
        x = 0,
        y = 1,
        z = 2
    };

    using PolarizationSet = std::vector<Polarization>;

    // Throws std::invalid_argument if the set is empty or repeats a polarisation.
    void validate_polarizations(const PolarizationSet &pols);

    // Throws SingularityError for coincident points.
    std::complex<double> scalar_green(const Eigen::Vector3d &r, const Eigen::Vector3d &r_src, double k);

    // E = G J. G(r, r') = G(r', r) bit-for-bit, and G is symmetric.
    // Throws SingularityError for coincident points.
    GreensDyad dyadic_green(const Eigen::Vector3d &r, const Eigen::Vector3d &r_src, double k);

    struct NearFieldScenario
    {
        PlanarArray tx;
        PlanarArray rx;
        double separation = 1.0; // D in wavelengths
        PolarizationSet tx_pols{Polarization::x};
        PolarizationSet rx_pols{Polarization::x};
    };

    // Two identical N x N arrays on an L x L aperture, transmitter in z = 0 and receiver directly
    // opposite in z = D. Throws std::invalid_argument for D <= 0 or invalid polarisation sets.
    NearFieldScenario coaxial_scenario(double aperture, std::size_t side_count, double separation,
                                       PolarizationSet tx_pols = {Polarization::x},
                                       PolarizationSet rx_pols = {Polarization::x});

    // Polarisation-resolved classical channel. Block (a, b) holds G_{rx_pols[a], tx_pols[b]}(r_m, r'_n)
    // at rows a * N_r + m and columns b * N_t + n; overall (N_r |rx_pols|) x (N_t |tx_pols|).
    ChannelMatrix classical_channel(const NearFieldScenario &sc);

    // Rydberg receive channel for a single transmit polarisation i:
    //   h_R(r, r') = exp(-j k |r - r'|) * || G(r, r') e_i ||,
    // the total field amplitude with the scalar-kernel phase. Receive polarisations are ignored
    // since the atomic sensor does not resolve them. The matrix is N_r x N_t.
    // Throws UnsupportedError unless exactly one transmit polarisation is given; the combining rule
    // for simultaneously driven transmit polarisations is not defined by the model.
    ChannelMatrix rydberg_channel(const NearFieldScenario &sc);
}

#endif
