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

#include "rydmimo/capacity.hpp"
#include "rydmimo/errors.hpp"
#include "rydmimo/parallel.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

// Reference BLAS/LAPACK entry points, provided here by OpenBLAS.
extern "C"
{
    void zherk_(const char *uplo, const char *trans, const int *n, const int *k, const double *alpha, const void *a,
                const int *lda, const double *beta, void *c, const int *ldc);
    void zpotrf_(const char *uplo, const int *n, void *a, const int *lda, int *info);
    void openblas_set_num_threads(int num_threads);
}

namespace rydmimo
{
    namespace
    {
        // Trials are already spread over worker threads; a single-threaded BLAS keeps every call's
        // summation order fixed, so results do not depend on the worker count.
        void pin_blas_threads()
        {
            static std::once_flag once;
            std::call_once(once, [] { openblas_set_num_threads(1); });
        }

        int blas_dim(Eigen::Index n)
        {
            if (n > std::numeric_limits<int>::max())
                throw std::invalid_argument("det_capacity: matrix too large for BLAS");
            return static_cast<int>(n);
        }
    }

    double det_capacity(const Eigen::MatrixXcd &h, SnrSpec snr)
    {
        if (!std::isfinite(snr.gamma) || snr.gamma <= 0.0)
            throw std::invalid_argument("det_capacity: SNR must be positive");
        if (snr.tx_count == 0)
            throw std::invalid_argument("det_capacity: transmit count must be at least 1");
        if (!h.allFinite())
            throw std::invalid_argument("det_capacity: channel has non-finite entries");
        if (h.size() == 0)
            return 0.0;

        pin_blas_threads();
        const double scale = snr.gamma / static_cast<double>(snr.tx_count);
        const bool wide = h.rows() <= h.cols();
        const int n = blas_dim(wide ? h.rows() : h.cols());
        const int k = blas_dim(wide ? h.cols() : h.rows());
        const int lda = blas_dim(h.rows());

        // Lower triangle of I + scale * (H H^H or H^H H, whichever is smaller), then its Cholesky factor.
        Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(n, n);
        const double one = 1.0;
        zherk_("L", wide ? "N" : "C", &n, &k, &scale, h.data(), &lda, &one, gram.data(), &n);
        int info = 0;
        zpotrf_("L", &n, gram.data(), &n, &info);
        if (info != 0)
            throw NumericalError("det_capacity: Cholesky factorisation failed");

        double log_det = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            log_det += std::log(gram(i, i).real());
        return 2.0 * log_det / std::numbers::ln2;
    }

    double pairwise_sum(std::span<const double> values)
    {
        if (values.size() <= 8)
        {
            double s = 0.0;
            for (double v : values)
                s += v;
            return s;
        }
        const std::size_t half = values.size() / 2;
        return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
    }

    ErgodicResult ergodic_capacity(const ChannelEnsembleSpec &spec, SnrSpec snr, std::size_t threads)
    {
        if (snr.tx_count != spec.tx_count)
            throw std::invalid_argument("ergodic_capacity: SNR transmit count differs from the ensemble's");

        const KroneckerSampler sampler(spec);
        std::vector<double> values(spec.trials);
        parallel_for(spec.trials, threads, [&](std::size_t t)
                     { values[t] = det_capacity(sampler.capacity_factor(t), snr); });

        ErgodicResult out;
        out.trials = spec.trials;
        out.mean = pairwise_sum(values) / static_cast<double>(spec.trials);
        if (spec.trials > 1)
        {
            std::vector<double> sq(values.size());
            for (std::size_t i = 0; i < values.size(); ++i)
                sq[i] = (values[i] - out.mean) * (values[i] - out.mean);
            const double var = pairwise_sum(sq) / static_cast<double>(spec.trials - 1);
            out.std_error = std::sqrt(var / static_cast<double>(spec.trials));
        }
        return out;
    }

    double normalization_scale(const Eigen::MatrixXcd &h, const NormalizationPolicy &policy)
    {
        const Eigen::MatrixXcd *basis = &h;
        if (policy.mode == NormalizationMode::reference_channel)
        {
            if (!policy.reference)
                throw std::invalid_argument("normalize: reference-channel mode needs a reference matrix");
            basis = &*policy.reference;
        }
        else if (policy.reference)
        {
            throw std::invalid_argument("normalize: a reference matrix is only valid in reference-channel mode");
        }

        if (basis->size() == 0)
            throw DegenerateChannelError("normalize: channel is empty");
        const double mean_power = basis->squaredNorm() / static_cast<double>(basis->size());
        if (!std::isfinite(mean_power))
            throw std::invalid_argument("normalize: channel has non-finite entries");
        if (mean_power == 0.0)
            throw DegenerateChannelError("normalize: channel has zero power");
        return 1.0 / std::sqrt(mean_power);
    }

    ChannelMatrix normalize(const ChannelMatrix &h, const NormalizationPolicy &policy)
    {
        return {normalization_scale(h.h, policy) * h.h, h.origin};
    }
}
