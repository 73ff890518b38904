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

#ifndef rydmimo_qsensor_H
#define rydmimo_qsensor_H

#include <Eigen/Dense>

#include <array>
#include <complex>

// Two-level S1/2 <-> P1/2 Rydberg sensor (four magnetic sublevels) driven by an RF field of
// arbitrary direction. The Autler-Townes splitting is the only observable used for
// communication, and it depends on |Omega| alone, which is why the atomic receiver is
// treated downstream as an isotropic, polarisation-blind scalar sensor.
namespace rydmimo::qsensor
{
    // Reduced Planck constant in J s (CODATA 2018, exact in SI).
    inline constexpr double hbar = 1.054571817e-34;

    // Rabi frequency in rad/s. Complex values are allowed; only |omega| is observable.
    struct RabiFrequency
    {
        std::complex<double> omega{0.0, 0.0};
    };

    // Direction of the RF electric field relative to the quantisation (z) axis.
    // theta in [0, pi] is measured from +z, phi in [0, 2 pi) from +x in the xy plane.
    struct FieldOrientation
    {
        double theta = 0.0;
        double phi = 0.0;
    };

    // 4x4 interaction Hamiltonian in units of hbar rad/s.
    // Basis order is part of the public contract:
    //   0: |S1/2, -1/2>   1: |S1/2, +1/2>   2: |P1/2, -1/2>   3: |P1/2, +1/2>
    struct RotatedHamiltonian
    {
        Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();
    };

    // Transition dipole moment in C m.
    struct TransitionDipole
    {
        double mu = 0.0;
    };

    // Hamiltonian for a field at orientation (theta, phi). The pi transitions (Delta m_j = 0) carry
    // Omega cos(theta), the sigma transitions carry Omega sin(theta) with phase exp(+-j phi).
    // At theta = 0 this is exactly the z-polarised Hamiltonian.
    // Throws std::invalid_argument for non-finite input or angles outside their ranges.
    RotatedHamiltonian build_rotated_hamiltonian(RabiFrequency omega, FieldOrientation orient);

    // Eigenvalues sorted ascending, {-|Omega|/2, -|Omega|/2, +|Omega|/2, +|Omega|/2} for any orientation.
    // Throws std::invalid_argument if the matrix is not Hermitian to 1e-12 (relative to its largest entry).
    std::array<double, 4> eigenvalues(const RotatedHamiltonian &h);

    // Autler-Townes splitting (largest minus smallest eigenvalue), equal to |Omega|.
    double at_splitting(const RotatedHamiltonian &h);

    // Field amplitude in V/m from a measured splitting: E = hbar * delta_at / |mu|.
    double field_from_splitting(double delta_at, TransitionDipole mu);

    // Inverse of field_from_splitting: Omega = |mu E / hbar|.
    double rabi_from_field(double field, TransitionDipole mu);
}

#endif
