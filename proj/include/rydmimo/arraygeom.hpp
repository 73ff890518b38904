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

#ifndef rydmimo_arraygeom_H
#define rydmimo_arraygeom_H

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

// Lengths are in free-space wavelengths throughout, so the wavenumber is 2 pi.
namespace rydmimo
{
    inline constexpr double wavenumber = 2.0 * std::numbers::pi;

    enum class PatternKind
    {
        isotropic, // Rydberg cell: E = exp(j k.r')
        dipole     // classical element: E = cos(theta) exp(j k.r'), theta from the array normal
    };

    // Spherical direction, theta in [0, pi] from +z, phi in [0, 2 pi) from +x.
    struct Direction
    {
        double theta = 0.0;
        double phi = 0.0;
    };

    struct ElementPattern
    {
        PatternKind kind = PatternKind::isotropic;
        Eigen::Vector3d position = Eigen::Vector3d::Zero(); // reference point r'
    };

    // Unit propagation vector (sin t cos p, sin t sin p, cos t) scaled by the wavenumber.
    Eigen::Vector3d wave_vector(Direction dir);

    // Far-field pattern sample. The steering phase uses exp(+j k.r'); the opposite sign convention
    // conjugates correlation phases but leaves |r_mn| and every capacity unchanged.
    std::complex<double> pattern_value(const ElementPattern &p, Direction dir);

    // N x N elements centred on the z = plane_z plane, uniform pitch d = L / N along x and y.
    // Element (ix, iy) is stored at index ix * N + iy.
    class PlanarArray
    {
    public:
        PlanarArray(std::size_t side_count, double aperture, double plane_z);

        std::size_t side_count() const { return side_count_; }
        std::size_t size() const { return positions_.size(); }
        double aperture() const { return aperture_; }
        double plane_z() const { return plane_z_; }
        double pitch() const { return aperture_ / static_cast<double>(side_count_); }
        double element_area() const { return pitch() * pitch(); } // S = (L/N)^2, in wavelengths^2

        const std::vector<Eigen::Vector3d> &positions() const { return positions_; }
        const Eigen::Vector3d &position(std::size_t i) const { return positions_.at(i); }
        ElementPattern element(std::size_t i, PatternKind kind) const { return {kind, position(i)}; }

    private:
        std::size_t side_count_;
        double aperture_;
        double plane_z_;
        std::vector<Eigen::Vector3d> positions_;
    };

    // Throws std::invalid_argument if N == 0 or L is not a positive finite number.
    PlanarArray uniform_planar_array(double aperture, std::size_t side_count, double plane_z = 0.0);
}

#endif
