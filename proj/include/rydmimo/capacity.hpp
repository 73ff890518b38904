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

#ifndef rydmimo_capacity_H
#define rydmimo_capacity_H

#include "rydmimo/channel.hpp"
#include "rydmimo/ffchannel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>

namespace rydmimo
{
    struct SnrSpec
    {
        double gamma = 10.0;      // total linear SNR
        std::size_t tx_count = 1; // N_t; power is split equally across transmit ports
    };

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

    // log2 det(I + (gamma / N_t) H H^H) via a Cholesky factorisation of the smaller Gram matrix.
    // Throws std::invalid_argument for non-finite entries or an invalid SnrSpec.
    double det_capacity(const Eigen::MatrixXcd &h, SnrSpec snr);
    inline double det_capacity(const ChannelMatrix &h, SnrSpec snr) { return det_capacity(h.h, snr); }

    struct ErgodicResult
    {
        double mean = 0.0;
        double std_error = 0.0; // sample standard deviation / sqrt(trials)
        std::size_t trials = 0;
    };

    // Order-independent reduction: recursive halving, so the result depends only on the values.
    double pairwise_sum(std::span<const double> values);

    // Monte Carlo mean of det_capacity over spec.trials Kronecker realisations. Per-trial values are
    // stored by index and reduced pairwise, so the result is bit-identical for any thread count.
    // snr.tx_count must equal spec.tx_count.
    ErgodicResult ergodic_capacity(const ChannelEnsembleSpec &spec, SnrSpec snr, std::size_t threads = 1);

    enum class NormalizationMode
    {
        unit_mean_power_self, // scale H so its mean |h_ij|^2 is 1
        reference_channel     // scale by the constant that gives the reference unit mean power
    };

    struct NormalizationPolicy
    {
        NormalizationMode mode = NormalizationMode::unit_mean_power_self;
        std::optional<Eigen::MatrixXcd> reference; // required iff mode == reference_channel
    };

    // Amplitude factor the policy applies to h. Throws DegenerateChannelError for zero power and
    // std::invalid_argument if the reference is missing or supplied in self mode.
    double normalization_scale(const Eigen::MatrixXcd &h, const NormalizationPolicy &policy);

    ChannelMatrix normalize(const ChannelMatrix &h, const NormalizationPolicy &policy);
}

#endif
