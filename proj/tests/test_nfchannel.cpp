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

#include "rydmimo/errors.hpp"
#include "rydmimo/nfchannel.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace rydmimo;

namespace
{
    constexpr double pi = std::numbers::pi;
    const double k = wavenumber;

    double max_rel_error(const Eigen::Matrix3cd &a, const Eigen::Matrix3cd &ref)
    {
        return (a - ref).cwiseAbs().maxCoeff() / ref.cwiseAbs().maxCoeff();
    }
}

TEST_CASE("scalar kernel at one and half a wavelength")
{
    const Eigen::Vector3d o = Eigen::Vector3d::Zero();
    const auto g1 = scalar_green(Eigen::Vector3d(0, 0, 1), o, k);
    CHECK(g1.real() == doctest::Approx(1 / (4 * pi)).epsilon(1e-15));
    CHECK(std::abs(g1.imag()) < 1e-16);

    const auto gh = scalar_green(Eigen::Vector3d(0.5, 0, 0), o, k);
    CHECK(std::abs(gh) == doctest::Approx(1 / (2 * pi)).epsilon(1e-15));
    CHECK(std::abs(std::abs(std::arg(gh)) - pi) < 1e-12);

    const Eigen::Vector3d far(3.1, -7.0, 40.0);
    CHECK(std::abs(scalar_green(2 * far, o, k)) == doctest::Approx(0.5 * std::abs(scalar_green(far, o, k))).epsilon(1e-14));
    CHECK_THROWS_AS(scalar_green(far, far, k), SingularityError);
}

TEST_CASE("closed-form dyad matches finite differences of the scalar kernel")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> kr(pi, 100 * pi);
    for (int i = 0; i < 40; ++i)
    {
        Eigen::Vector3d dir(unit(rng), unit(rng), unit(rng));
        dir.normalize();
        const Eigen::Vector3d src(unit(rng), unit(rng), unit(rng));
        const Eigen::Vector3d obs = src + (kr(rng) / k) * dir;
        const auto g = dyadic_green(obs, src, k);
        const auto fd = oracle::finite_difference_dyad(obs, src, k, 1.0 / 200);
        CAPTURE(obs);
        CHECK(max_rel_error(g, fd) < 1e-6);
    }
}

TEST_CASE("dyad is reciprocal and symmetric")
{
    const Eigen::Vector3d a(0.3, -1.1, 0.0), b(2.0, 0.4, 3.3);
    const auto gab = dyadic_green(a, b, k);
    const auto gba = dyadic_green(b, a, k);
    CHECK(gab == gba);
    CHECK(gab == gab.transpose());
    CHECK_THROWS_AS(dyadic_green(a, a, k), SingularityError);
}

TEST_CASE("far zone on axis the dyad is transverse")
{
    const double kr = 200 * pi;
    const Eigen::Vector3d obs(0, 0, kr / k);
    const auto g = dyadic_green(obs, Eigen::Vector3d::Zero(), k);
    const auto g0 = scalar_green(obs, Eigen::Vector3d::Zero(), k);
    CHECK(std::abs(g(2, 2) / g0) < 3.0 / kr);
    CHECK(std::abs(g(0, 0) / g0 - 1.0) < 2.0 / kr);
    CHECK(std::abs(g(1, 1) / g0 - 1.0) < 2.0 / kr);
    CHECK(std::abs(g(0, 1)) == 0.0);
}

TEST_CASE("polarisation sets are validated")
{
    CHECK_THROWS_AS(validate_polarizations({}), std::invalid_argument);
    CHECK_THROWS_AS(validate_polarizations({Polarization::x, Polarization::x}), std::invalid_argument);
    CHECK_NOTHROW(validate_polarizations({Polarization::z, Polarization::x}));
    CHECK_THROWS_AS(coaxial_scenario(5.0, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(coaxial_scenario(5.0, 2, 1.0, {}), std::invalid_argument);
}

TEST_CASE("single element pair gives G_xx")
{
    const auto sc = coaxial_scenario(1.0, 1, 2.3);
    const auto h = classical_channel(sc);
    REQUIRE(h.h.rows() == 1);
    REQUIRE(h.h.cols() == 1);
    CHECK(h.h(0, 0) == dyadic_green(sc.rx.position(0), sc.tx.position(0), k)(0, 0));
    CHECK(h.origin == ChannelOrigin::near_field_classical);
}

TEST_CASE("cross-polar coupling vanishes on axis")
{
    const auto sc = coaxial_scenario(1.0, 1, 1.7, {Polarization::x}, {Polarization::y});
    const auto co = classical_channel(coaxial_scenario(1.0, 1, 1.7));
    const auto cross = classical_channel(sc);
    CHECK(std::abs(cross.h(0, 0)) < 1e-12 * std::abs(co.h(0, 0)));
}

TEST_CASE("dual-polarised block channel recomposes from per-pair dyads")
{
    const auto sc = coaxial_scenario(1.0, 2, 0.8, {Polarization::x, Polarization::y}, {Polarization::x, Polarization::y});
    const auto h = classical_channel(sc);
    REQUIRE(h.h.rows() == 8);
    REQUIRE(h.h.cols() == 8);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
        {
            const auto g = dyadic_green(sc.rx.position(m), sc.tx.position(n), k);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    CHECK(h.h(a * 4 + m, b * 4 + n) == g(a, b));
        }

    // declared order drives block order
    const auto swapped = classical_channel(coaxial_scenario(1.0, 2, 0.8, {Polarization::y}, {Polarization::z, Polarization::x}));
    const auto g = dyadic_green(sc.rx.position(1), sc.tx.position(2), k);
    CHECK(swapped.h(1, 2) == g(2, 1));
    CHECK(swapped.h(4 + 1, 2) == g(0, 1));
}

TEST_CASE("Rydberg element: total field amplitude with the scalar phase")
{
    const auto sc = coaxial_scenario(5.0, 4, 1.0);
    const auto hr = rydberg_channel(sc);
    const auto hc = classical_channel(sc);
    CHECK(hr.origin == ChannelOrigin::near_field_rydberg);
    REQUIRE(hr.h.rows() == 16);
    REQUIRE(hr.h.cols() == 16);
    for (int m = 0; m < 16; ++m)
        for (int n = 0; n < 16; ++n)
        {
            const double dist = (sc.rx.position(m) - sc.tx.position(n)).norm();
            const auto g = dyadic_green(sc.rx.position(m), sc.tx.position(n), k);
            CHECK(std::abs(hr.h(m, n)) >= std::abs(hc.h(m, n)));
            CHECK(std::abs(hr.h(m, n)) == doctest::Approx(g.col(0).norm()).epsilon(1e-14));
            const double phase_err = std::remainder(std::arg(hr.h(m, n)) + k * dist, 2 * pi);
            CHECK(std::abs(phase_err) < 1e-12);
        }
}

TEST_CASE("Rydberg element uses the column of the transmit polarisation")
{
    const auto sc = coaxial_scenario(2.0, 2, 0.6, {Polarization::z});
    const auto hr = rydberg_channel(sc);
    const auto g = dyadic_green(sc.rx.position(3), sc.tx.position(0), k);
    CHECK(std::abs(hr.h(3, 0)) == doctest::Approx(g.col(2).norm()).epsilon(1e-14));
}

TEST_CASE("Rydberg channel with several transmit polarisations is unsupported")
{
    const auto sc = coaxial_scenario(2.0, 2, 1.0, {Polarization::x, Polarization::y});
    CHECK_THROWS_AS(rydberg_channel(sc), UnsupportedError);
}

TEST_CASE("far separation: Rydberg and classical elements converge")
{
    const auto pair = coaxial_scenario(1.0, 1, 100.0);
    const double ratio = std::abs(rydberg_channel(pair).h(0, 0)) / std::abs(classical_channel(pair).h(0, 0));
    CHECK(std::abs(ratio - 1.0) < 1e-3);

    const auto sc = coaxial_scenario(5.0, 10, 100.0);
    const Eigen::MatrixXcd hr = rydberg_channel(sc).h;
    const Eigen::MatrixXcd hc = classical_channel(sc).h;
    // best global phase alignment of the classical matrix onto the Rydberg one
    const std::complex<double> inner = (hc.adjoint() * hr).trace();
    const Eigen::MatrixXcd aligned = hc * std::polar(1.0, std::arg(inner));
    CHECK((hr - aligned).norm() / hc.norm() < 1e-2);
}
