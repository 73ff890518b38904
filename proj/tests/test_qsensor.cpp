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

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace rydmimo::qsensor;
using cd = std::complex<double>;

namespace
{
    constexpr double pi = std::numbers::pi;
}

TEST_CASE("z-polarised field couples only equal m_j sublevels")
{
    const double omega = 1.7;
    const auto h = build_rotated_hamiltonian({cd(omega, 0.0)}, {0.0, 0.0});

    Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
    expected(0, 2) = -omega / 2;
    expected(1, 3) = omega / 2;
    expected(2, 0) = -omega / 2;
    expected(3, 1) = omega / 2;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(h.matrix(i, j) == expected(i, j));
}

TEST_CASE("reduction at theta = 0 holds for complex Rabi frequencies and any phi")
{
    const cd omega(0.3, -1.2);
    const auto h = build_rotated_hamiltonian({omega}, {0.0, 4.0});
    CHECK(h.matrix(0, 2) == -omega / 2.0);
    CHECK(h.matrix(1, 3) == omega / 2.0);
    CHECK(h.matrix(2, 0) == -std::conj(omega) / 2.0);
    CHECK(h.matrix(3, 1) == std::conj(omega) / 2.0);
    CHECK(h.matrix(0, 3) == cd(0.0, 0.0));
    CHECK(h.matrix(1, 2) == cd(0.0, 0.0));
}

TEST_CASE("field in the xy plane drives only sigma transitions")
{
    const double omega = 2.0;
    const auto h = build_rotated_hamiltonian({cd(omega, 0.0)}, {pi / 2, 0.0});
    CHECK(std::abs(h.matrix(0, 2)) < 1e-16);
    CHECK(std::abs(h.matrix(1, 3)) < 1e-16);
    CHECK(std::abs(h.matrix(0, 3)) == doctest::Approx(omega / 2).epsilon(1e-15));
    CHECK(std::abs(h.matrix(1, 2)) == doctest::Approx(omega / 2).epsilon(1e-15));
}

TEST_CASE("entries at a generic orientation match a direct scalar evaluation")
{
    const cd omega(1.3, 0.4);
    const double theta = pi / 3, phi = 1.1;
    const auto h = build_rotated_hamiltonian({omega}, {theta, phi});

    const cd j(0.0, 1.0);
    const cd h02 = 0.5 * (-omega * std::cos(theta));
    const cd h03 = 0.5 * (omega * std::sin(theta) * std::exp(-j * phi));
    const cd h12 = 0.5 * (omega * std::sin(theta) * std::exp(j * phi));
    const cd h13 = 0.5 * (omega * std::cos(theta));
    CHECK(std::abs(h.matrix(0, 2) - h02) < 1e-15);
    CHECK(std::abs(h.matrix(0, 3) - h03) < 1e-15);
    CHECK(std::abs(h.matrix(1, 2) - h12) < 1e-15);
    CHECK(std::abs(h.matrix(1, 3) - h13) < 1e-15);
    CHECK(std::abs(h.matrix(0, 2)) == doctest::Approx(std::abs(omega) * std::abs(std::cos(theta)) / 2));
    CHECK(std::abs(h.matrix(0, 3)) == doctest::Approx(std::abs(omega) * std::abs(std::sin(theta)) / 2));
}

TEST_CASE("structure: Hermitian, traceless, zero diagonal blocks")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> th(0.0, pi), ph(0.0, 2 * pi), om(-5.0, 5.0);
    for (int i = 0; i < 200; ++i)
    {
        const auto h = build_rotated_hamiltonian({cd(om(rng), om(rng))}, {th(rng), ph(rng)});
        CHECK((h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(h.matrix.trace() == cd(0.0, 0.0));
        CHECK(h.matrix.topLeftCorner<2, 2>().cwiseAbs().maxCoeff() == 0.0);
        CHECK(h.matrix.bottomRightCorner<2, 2>().cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("invalid orientations and Rabi frequencies are rejected")
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(build_rotated_hamiltonian({cd(nan, 0.0)}, {0.1, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(build_rotated_hamiltonian({cd(1.0, inf)}, {0.1, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(build_rotated_hamiltonian({cd(1.0, 0.0)}, {nan, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(build_rotated_hamiltonian({cd(1.0, 0.0)}, {-0.1, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(build_rotated_hamiltonian({cd(1.0, 0.0)}, {pi + 1e-9, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(build_rotated_hamiltonian({cd(1.0, 0.0)}, {0.1, 2 * pi}), std::invalid_argument);
    CHECK_NOTHROW(build_rotated_hamiltonian({cd(1.0, 0.0)}, {pi, 0.0}));
}

TEST_CASE("eigenvalues of the z-polarised Hamiltonian with unit Rabi frequency")
{
    const auto ev = eigenvalues(build_rotated_hamiltonian({cd(1.0, 0.0)}, {0.0, 0.0}));
    CHECK(ev[0] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(ev[2] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ev[3] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("zero Rabi frequency gives a zero spectrum and zero splitting")
{
    const auto h = build_rotated_hamiltonian({cd(0.0, 0.0)}, {1.0, 2.0});
    for (double v : eigenvalues(h))
        CHECK(v == 0.0);
    CHECK(at_splitting(h) == 0.0);
}

TEST_CASE("random orientations: spectrum is +-|Omega|/2 against an independent general eigensolver")
{
    const double omega = 2 * pi * 1e6;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> th(0.0, pi), ph(0.0, 2 * pi);
    for (int i = 0; i < 100; ++i)
    {
        const auto h = build_rotated_hamiltonian({cd(omega, 0.0)}, {th(rng), ph(rng)});

        // Oracle 1: non-Hermitian complex Schur route.
        Eigen::ComplexEigenSolver<Eigen::Matrix4cd> general(h.matrix, false);
        std::array<double, 4> ref{};
        for (int k = 0; k < 4; ++k)
            ref[static_cast<std::size_t>(k)] = general.eigenvalues()(k).real();
        std::sort(ref.begin(), ref.end());

        // Oracle 2: H^2 = |Omega|^2 / 4 * I, so every eigenvalue squares to |Omega|^2 / 4.
        const Eigen::Matrix4cd sq = h.matrix * h.matrix;
        CHECK((sq - (omega * omega / 4) * Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-12 * omega * omega);

        const auto ev = eigenvalues(h);
        for (std::size_t k = 0; k < 4; ++k)
        {
            const double expected = (k < 2 ? -0.5 : 0.5) * omega;
            CHECK(std::abs(ev[k] - expected) <= 1e-10 * std::abs(expected));
            CHECK(std::abs(ref[k] - expected) <= 1e-10 * std::abs(expected));
        }
    }
}

TEST_CASE("non-Hermitian input is rejected")
{
    RotatedHamiltonian h;
    h.matrix(0, 2) = 1.0;
    CHECK_THROWS_AS(eigenvalues(h), std::invalid_argument);
    h.matrix(2, 0) = cd(1.0, 1e-6);
    CHECK_THROWS_AS(eigenvalues(h), std::invalid_argument);
    h.matrix(2, 0) = 1.0;
    CHECK_NOTHROW(eigenvalues(h));
}

TEST_CASE("Autler-Townes splitting equals |Omega| for every orientation")
{
    CHECK(at_splitting(build_rotated_hamiltonian({cd(1.0, 0.0)}, {0.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(at_splitting(build_rotated_hamiltonian({cd(1.0, 0.0)}, {2.2, 5.0})) == doctest::Approx(1.0).epsilon(1e-14));

    const double omega = 2 * pi * 5e6;
    const double split = at_splitting(build_rotated_hamiltonian({cd(omega, 0.0)}, {0.7, 2.9}));
    CHECK(std::abs(split - omega) <= 1e-10 * omega);

    // Only the modulus of a complex Rabi frequency is observable.
    const cd complex_omega = std::polar(3.0, 0.8);
    CHECK(at_splitting(build_rotated_hamiltonian({complex_omega}, {1.1, 0.4})) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("field retrieval from splitting")
{
    CHECK(field_from_splitting(1.0, {hbar}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(field_from_splitting(0.0, {1e-29}) == 0.0);
    CHECK(field_from_splitting(2.0, {-hbar}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(field_from_splitting(1.0, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(field_from_splitting(-1.0, {1e-29}), std::invalid_argument);
}

TEST_CASE("field -> Rabi -> field round trip")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> field(1e-6, 1e2);
    const TransitionDipole mu{1.7e-28};
    for (int i = 0; i < 1000; ++i)
    {
        const double e = field(rng);
        const double back = field_from_splitting(rabi_from_field(e, mu), mu);
        CHECK(std::abs(back - e) <= 1e-12 * e);
    }
}
