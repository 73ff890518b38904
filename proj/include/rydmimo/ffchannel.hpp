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

#ifndef rydmimo_ffchannel_H
#define rydmimo_ffchannel_H

#include "rydmimo/arraygeom.hpp"
#include "rydmimo/channel.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

// Far-field stochastic channels in an isotropic scattering environment: pattern correlation
// integrals over the full sphere, Hannan-type efficiency limits for dense arrays, and Kronecker
// synthesis H = sqrt(e) * H_w * R^(1/2) with an i.i.d. circularly-symmetric Gaussian core.
namespace rydmimo
{
    struct QuadratureSpec
    {
        std::size_t theta_nodes = 64; // Gauss-Legendre nodes in cos(theta)
        std::size_t phi_nodes = 128;  // periodic trapezoid nodes in phi
    };

    // Tensor-product rule on the unit sphere: sum_i w_i f(dir_i) ~ int f sin(theta) dtheta dphi.
    class SphereQuadrature
    {
    public:
        explicit SphereQuadrature(QuadratureSpec spec = {});

        const QuadratureSpec &spec() const { return spec_; }
        std::size_t size() const { return weights_.size(); }
        const std::vector<Direction> &directions() const { return directions_; }
        const std::vector<double> &weights() const { return weights_; }

    private:
        QuadratureSpec spec_;
        std::vector<Direction> directions_;
        std::vector<double> weights_;
    };

    // Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
    void gauss_legendre(std::size_t n, std::vector<double> &nodes, std::vector<double> &weights);

    // Normalised pattern correlation between two elements over the full sphere.
    // Returns exactly 1 when both patterns are identical.
    // Throws DegeneratePatternError if either pattern integrates to zero power.
    std::complex<double> correlation(const ElementPattern &pm, const ElementPattern &pn, const SphereQuadrature &quad);
    std::complex<double> correlation(const ElementPattern &pm, const ElementPattern &pn, QuadratureSpec quad = {});

    struct CorrelationMatrix
    {
        Eigen::MatrixXcd r; // Hermitian, unit diagonal
        QuadratureSpec quad;
    };

    // Pairwise correlation of every element of the array with a common pattern kind.
    CorrelationMatrix correlation_matrix(const PlanarArray &arr, PatternKind kind, QuadratureSpec quad = {});

    // Two co-located orthogonal ports per element: block-diagonal [R 0; 0 R] with zero cross-polar
    // correlation. Port order is all first-polarisation ports, then all second-polarisation ports.
    CorrelationMatrix dual_polarized(const CorrelationMatrix &single);

    enum class EfficiencyKind
    {
        dipole, // e = pi S / lambda^2
        atomic  // e = 4 pi S / lambda^2 (unit directivity of an electrically small receiver)
    };

    struct EfficiencyModel
    {
        EfficiencyKind kind = EfficiencyKind::dipole;
        double element_area = 1.0; // S in wavelengths^2
    };

    // Dense-array efficiency limit capped at 1. Throws std::invalid_argument for S <= 0.
    double hannan_efficiency(double element_area, EfficiencyKind kind);
    inline double hannan_efficiency(const EfficiencyModel &m) { return hannan_efficiency(m.element_area, m.kind); }

    // Hermitian square root with eigenvalues clamped at zero. Throws NumericalError when the smallest
    // eigenvalue is below -psd_tolerance times the largest diagonal entry.
    Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd &r, double psd_tolerance = 1e-6);

    struct ChannelEnsembleSpec
    {
        CorrelationMatrix correlation;
        double efficiency = 1.0;
        std::size_t tx_count = 1;
        std::uint64_t seed = 0;
        std::size_t trials = 1;
    };

    // Seed of the independent random stream used for one trial of an ensemble.
    std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial_index);

    // Draws Kronecker channel realisations. The matrix is N_t x N_r: rows index transmit ports and the
    // receive correlation acts from the right, so E[H^H H] = N_t * e * R. Capacity is unaffected by the
    // orientation since det(I + c H H^H) = det(I + c H^H H).
    //
    // With R = U diag(lambda) U^H, each trial draws an i.i.d. CN(0, 1) matrix G and sets H_w = G U^H,
    // which is again i.i.d. CN(0, 1). Then H = sqrt(e) H_w R^(1/2) = sqrt(e) G diag(sqrt(lambda)) U^H,
    // and capacity_factor() returns sqrt(e) G diag(sqrt(lambda)), which has the same H H^H at a fraction
    // of the cost.
    class KroneckerSampler
    {
    public:
        explicit KroneckerSampler(const ChannelEnsembleSpec &spec);

        const ChannelEnsembleSpec &spec() const { return spec_; }
        const Eigen::MatrixXcd &sqrt_correlation() const { return sqrt_r_; }

        // Identical (seed, trial_index) gives a bit-identical matrix.
        ChannelMatrix sample(std::uint64_t trial_index) const;

        // The i.i.d. CN(0, 1) core H_w of a trial, N_t x N_r.
        Eigen::MatrixXcd white_core(std::uint64_t trial_index) const;

        // N_t x N_r matrix F with F F^H equal to H H^H of sample(trial_index), up to rounding.
        Eigen::MatrixXcd capacity_factor(std::uint64_t trial_index) const;

    private:
        Eigen::MatrixXcd eigen_core(std::uint64_t trial_index) const;

        ChannelEnsembleSpec spec_;
        Eigen::MatrixXcd basis_;    // eigenvectors U of R
        Eigen::VectorXd root_;      // clamped sqrt(lambda)
        Eigen::MatrixXcd sqrt_r_;   // U diag(root) U^H
    };

    ChannelMatrix sample_channel(const ChannelEnsembleSpec &spec, std::uint64_t trial_index);
}

#endif
