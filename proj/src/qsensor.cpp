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

#include "rydmimo/qsensor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydmimo::qsensor
{
    RotatedHamiltonian build_rotated_hamiltonian(RabiFrequency omega, FieldOrientation orient)
    {
        const auto w = omega.omega;
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw std::invalid_argument("build_rotated_hamiltonian: Rabi frequency must be finite");
        if (!std::isfinite(orient.theta) || !std::isfinite(orient.phi))
            throw std::invalid_argument("build_rotated_hamiltonian: orientation must be finite");
        if (orient.theta < 0.0 || orient.theta > std::numbers::pi)
            throw std::invalid_argument("build_rotated_hamiltonian: theta must lie in [0, pi]");
        if (orient.phi < 0.0 || orient.phi >= 2.0 * std::numbers::pi)
            throw std::invalid_argument("build_rotated_hamiltonian: phi must lie in [0, 2 pi)");

        const double c = std::cos(orient.theta);
        const double s = std::sin(orient.theta);
        const std::complex<double> e_minus = std::polar(1.0, -orient.phi);
        const std::complex<double> e_plus = std::polar(1.0, orient.phi);

        // Upper-right S-P coupling block; the lower-left block is its adjoint, so the result is
        // Hermitian by construction and the diagonal S-S and P-P blocks stay exactly zero.
        Eigen::Matrix2cd b;
        b << -0.5 * w * c, 0.5 * w * s * e_minus,
            0.5 * w * s * e_plus, 0.5 * w * c;

        RotatedHamiltonian h;
        h.matrix.topRightCorner<2, 2>() = b;
        h.matrix.bottomLeftCorner<2, 2>() = b.adjoint();
        return h;
    }

    std::array<double, 4> eigenvalues(const RotatedHamiltonian &h)
    {
        const Eigen::Matrix4cd &m = h.matrix;
        if (!m.allFinite())
            throw std::invalid_argument("eigenvalues: Hamiltonian has non-finite entries");

        const double scale = m.cwiseAbs().maxCoeff();
        const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
        if (asym > 1e-12 * scale)
            throw std::invalid_argument("eigenvalues: Hamiltonian is not Hermitian");

        std::array<double, 4> out{0.0, 0.0, 0.0, 0.0};
        if (scale == 0.0)
            return out;

        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("eigenvalues: eigensolver did not converge");
        for (int i = 0; i < 4; ++i)
            out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        std::sort(out.begin(), out.end());
        return out;
    }

    double at_splitting(const RotatedHamiltonian &h)
    {
        const auto ev = eigenvalues(h);
        return ev.back() - ev.front();
    }

    double field_from_splitting(double delta_at, TransitionDipole mu)
    {
        if (!std::isfinite(mu.mu) || mu.mu == 0.0)
            throw std::invalid_argument("field_from_splitting: transition dipole must be finite and non-zero");
        if (!std::isfinite(delta_at) || delta_at < 0.0)
            throw std::invalid_argument("field_from_splitting: splitting must be finite and non-negative");
        return hbar * delta_at / std::abs(mu.mu);
    }

    double rabi_from_field(double field, TransitionDipole mu)
    {
        if (!std::isfinite(field) || !std::isfinite(mu.mu))
            throw std::invalid_argument("rabi_from_field: inputs must be finite");
        return std::abs(mu.mu * field / hbar);
    }
}
