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

#include "rydmimo/ffchannel.hpp"
#include "rydmimo/errors.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace rydmimo
{
    void gauss_legendre(std::size_t n, std::vector<double> &nodes, std::vector<double> &weights)
    {
        if (n == 0)
            throw std::invalid_argument("gauss_legendre: node count must be at least 1");

        const int order = static_cast<int>(n);
        const std::vector<double> positive = boost::math::legendre_p_zeros<double>(order);

        nodes.clear();
        weights.clear();
        nodes.reserve(n);
        weights.reserve(n);
        auto weight = [order](double x)
        {
            const double dp = boost::math::legendre_p_prime(order, x);
            return 2.0 / ((1.0 - x * x) * dp * dp);
        };

        // legendre_p_zeros returns the non-negative roots ascending, including 0 for odd orders.
        for (auto it = positive.rbegin(); it != positive.rend(); ++it)
        {
            if (*it == 0.0)
                continue;
            nodes.push_back(-*it);
            weights.push_back(weight(*it));
        }
        for (double x : positive)
        {
            nodes.push_back(x);
            weights.push_back(weight(x));
        }
    }

    SphereQuadrature::SphereQuadrature(QuadratureSpec spec) : spec_(spec)
    {
        if (spec.theta_nodes == 0 || spec.phi_nodes == 0)
            throw std::invalid_argument("SphereQuadrature: node counts must be at least 1");

        std::vector<double> u, wu;
        gauss_legendre(spec.theta_nodes, u, wu);

        const double dphi = 2.0 * std::numbers::pi / static_cast<double>(spec.phi_nodes);
        directions_.reserve(spec.theta_nodes * spec.phi_nodes);
        weights_.reserve(spec.theta_nodes * spec.phi_nodes);
        for (std::size_t i = 0; i < u.size(); ++i)
        {
            const double theta = std::acos(u[i]);
            for (std::size_t j = 0; j < spec.phi_nodes; ++j)
            {
                directions_.push_back({theta, dphi * static_cast<double>(j)});
                weights_.push_back(wu[i] * dphi);
            }
        }
    }

    namespace
    {
        // Patterns are bounded by 1, so anything this small is rounding noise (e.g. cos(acos(0))).
        constexpr double zero_power = 1e-20;
    }

    std::complex<double> correlation(const ElementPattern &pm, const ElementPattern &pn, const SphereQuadrature &quad)
    {
        std::complex<double> cross{0.0, 0.0};
        double power_m = 0.0;
        double power_n = 0.0;
        const auto &dirs = quad.directions();
        const auto &w = quad.weights();
        for (std::size_t i = 0; i < dirs.size(); ++i)
        {
            const auto em = pattern_value(pm, dirs[i]);
            const auto en = pattern_value(pn, dirs[i]);
            cross += w[i] * (em * std::conj(en));
            power_m += w[i] * (em * std::conj(em)).real();
            power_n += w[i] * (en * std::conj(en)).real();
        }
        if (!(power_m > zero_power) || !(power_n > zero_power))
            throw DegeneratePatternError("correlation: pattern has zero power on the quadrature grid");

        const double denom = power_m == power_n ? power_m : std::sqrt(power_m) * std::sqrt(power_n);
        return cross / denom;
    }

    std::complex<double> correlation(const ElementPattern &pm, const ElementPattern &pn, QuadratureSpec quad)
    {
        return correlation(pm, pn, SphereQuadrature(quad));
    }

    CorrelationMatrix correlation_matrix(const PlanarArray &arr, PatternKind kind, QuadratureSpec quad)
    {
        const SphereQuadrature rule(quad);
        const auto n = static_cast<Eigen::Index>(arr.size());
        const auto q = static_cast<Eigen::Index>(rule.size());

        // Samples scaled by sqrt(w) so that one Gram product yields every numerator at once.
        Eigen::MatrixXcd samples(n, q);
        for (Eigen::Index j = 0; j < q; ++j)
        {
            const auto &dir = rule.directions()[static_cast<std::size_t>(j)];
            const double sw = std::sqrt(rule.weights()[static_cast<std::size_t>(j)]);
            for (Eigen::Index m = 0; m < n; ++m)
                samples(m, j) = sw * pattern_value(arr.element(static_cast<std::size_t>(m), kind), dir);
        }

        Eigen::MatrixXcd gram(n, n);
        gram.setZero();
        gram.selfadjointView<Eigen::Upper>().rankUpdate(samples);

        Eigen::VectorXd power(n);
        for (Eigen::Index m = 0; m < n; ++m)
        {
            power(m) = gram(m, m).real();
            if (!(power(m) > zero_power))
                throw DegeneratePatternError("correlation_matrix: element " + std::to_string(m) +
                                             " has zero power on the quadrature grid");
        }

        CorrelationMatrix out{Eigen::MatrixXcd(n, n), quad};
        for (Eigen::Index m = 0; m < n; ++m)
        {
            out.r(m, m) = 1.0;
            for (Eigen::Index k = m + 1; k < n; ++k)
            {
                const auto v = gram(m, k) / (std::sqrt(power(m)) * std::sqrt(power(k)));
                out.r(m, k) = v;
                out.r(k, m) = std::conj(v);
            }
        }
        return out;
    }

    CorrelationMatrix dual_polarized(const CorrelationMatrix &single)
    {
        const auto n = single.r.rows();
        CorrelationMatrix out{Eigen::MatrixXcd::Zero(2 * n, 2 * n), single.quad};
        out.r.topLeftCorner(n, n) = single.r;
        out.r.bottomRightCorner(n, n) = single.r;
        return out;
    }

    double hannan_efficiency(double element_area, EfficiencyKind kind)
    {
        if (!std::isfinite(element_area) || element_area <= 0.0)
            throw std::invalid_argument("hannan_efficiency: element area must be positive");
        const double factor = kind == EfficiencyKind::atomic ? 4.0 * std::numbers::pi : std::numbers::pi;
        return std::min(1.0, factor * element_area);
    }

    namespace
    {
        struct ClampedEigen
        {
            Eigen::MatrixXcd vectors;
            Eigen::VectorXd root;
        };

        ClampedEigen clamped_eigen(const Eigen::MatrixXcd &r, double psd_tolerance)
        {
            if (r.rows() != r.cols() || r.rows() == 0)
                throw std::invalid_argument("hermitian_sqrt: matrix must be square and non-empty");
            if (!r.allFinite())
                throw std::invalid_argument("hermitian_sqrt: matrix has non-finite entries");

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(r);
            if (solver.info() != Eigen::Success)
                throw NumericalError("hermitian_sqrt: eigendecomposition failed");

            const double scale = r.diagonal().real().cwiseAbs().maxCoeff();
            const double min_eig = solver.eigenvalues().minCoeff();
            if (min_eig < -psd_tolerance * scale)
                throw NumericalError("hermitian_sqrt: matrix is not positive semidefinite (min eigenvalue " +
                                     std::to_string(min_eig) + ")");

            return {solver.eigenvectors(), solver.eigenvalues().cwiseMax(0.0).cwiseSqrt()};
        }
    }

    Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd &r, double psd_tolerance)
    {
        const auto eig = clamped_eigen(r, psd_tolerance);
        return eig.vectors * eig.root.asDiagonal() * eig.vectors.adjoint();
    }

    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9E3779B97F4A7C15ULL;
            x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
            x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
            return x ^ (x >> 31);
        }
    }

    std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial_index)
    {
        return splitmix64(splitmix64(seed) ^ splitmix64(trial_index + 0x632BE59BD9B4E019ULL));
    }

    KroneckerSampler::KroneckerSampler(const ChannelEnsembleSpec &spec) : spec_(spec)
    {
        if (spec.tx_count == 0)
            throw std::invalid_argument("KroneckerSampler: transmit count must be at least 1");
        if (spec.trials == 0)
            throw std::invalid_argument("KroneckerSampler: trial count must be at least 1");
        if (!std::isfinite(spec.efficiency) || spec.efficiency < 0.0)
            throw std::invalid_argument("KroneckerSampler: efficiency must be finite and non-negative");
        auto eig = clamped_eigen(spec.correlation.r, 1e-6);
        basis_ = std::move(eig.vectors);
        root_ = std::move(eig.root);
        sqrt_r_ = basis_ * root_.asDiagonal() * basis_.adjoint();
    }

    Eigen::MatrixXcd KroneckerSampler::eigen_core(std::uint64_t trial_index) const
    {
        std::mt19937_64 engine(trial_stream_seed(spec_.seed, trial_index));
        boost::random::normal_distribution<double> normal(0.0, std::sqrt(0.5));

        const auto rows = static_cast<Eigen::Index>(spec_.tx_count);
        const auto cols = basis_.rows();
        Eigen::MatrixXcd core(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i)
            {
                const double re = normal(engine);
                const double im = normal(engine);
                core(i, j) = {re, im};
            }
        return core;
    }

    Eigen::MatrixXcd KroneckerSampler::white_core(std::uint64_t trial_index) const
    {
        return eigen_core(trial_index) * basis_.adjoint();
    }

    Eigen::MatrixXcd KroneckerSampler::capacity_factor(std::uint64_t trial_index) const
    {
        return eigen_core(trial_index) * (std::sqrt(spec_.efficiency) * root_).asDiagonal();
    }

    ChannelMatrix KroneckerSampler::sample(std::uint64_t trial_index) const
    {
        return {capacity_factor(trial_index) * basis_.adjoint(), ChannelOrigin::far_field_random};
    }

    ChannelMatrix sample_channel(const ChannelEnsembleSpec &spec, std::uint64_t trial_index)
    {
        return KroneckerSampler(spec).sample(trial_index);
    }
}
