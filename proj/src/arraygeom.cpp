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

#include "rydmimo/arraygeom.hpp"

#include <cmath>
#include <stdexcept>

namespace rydmimo
{
    Eigen::Vector3d wave_vector(Direction dir)
    {
        const double st = std::sin(dir.theta);
        return wavenumber * Eigen::Vector3d(st * std::cos(dir.phi), st * std::sin(dir.phi), std::cos(dir.theta));
    }

    std::complex<double> pattern_value(const ElementPattern &p, Direction dir)
    {
        const std::complex<double> steer = std::polar(1.0, wave_vector(dir).dot(p.position));
        if (p.kind == PatternKind::dipole)
            return std::cos(dir.theta) * steer;
        return steer;
    }

    PlanarArray::PlanarArray(std::size_t side_count, double aperture, double plane_z)
        : side_count_(side_count), aperture_(aperture), plane_z_(plane_z)
    {
        if (side_count == 0)
            throw std::invalid_argument("PlanarArray: side count must be at least 1");
        if (!std::isfinite(aperture) || aperture <= 0.0)
            throw std::invalid_argument("PlanarArray: aperture must be positive");
        if (!std::isfinite(plane_z))
            throw std::invalid_argument("PlanarArray: plane offset must be finite");

        const double d = pitch();
        const double half = 0.5 * static_cast<double>(side_count - 1);
        positions_.reserve(side_count * side_count);
        for (std::size_t ix = 0; ix < side_count; ++ix)
            for (std::size_t iy = 0; iy < side_count; ++iy)
                positions_.emplace_back((static_cast<double>(ix) - half) * d,
                                        (static_cast<double>(iy) - half) * d,
                                        plane_z);
    }

    PlanarArray uniform_planar_array(double aperture, std::size_t side_count, double plane_z)
    {
        return PlanarArray(side_count, aperture, plane_z);
    }
}
