// SPDX-License-Identifier: Apache-2.0
//
// mmwsim - statistical mmWave multiuser MIMO channel simulator
// Copyright (C) 2026 The mmwsim authors
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

#include "doctest.h"

#include "mmwsim/errors.hpp"
#include "mmwsim/propagation.hpp"
#include "support/testkit.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace mmwsim;

namespace
{

PathLossParams carrier_referenced(double n, double b)
{
    PathLossParams p;
    p.path_loss_exponent = n;
    p.system_param_b = b;
    p.carrier_frequency = 73e9;
    p.reference_frequency = 73e9;
    return p;
}

} // namespace

TEST_CASE("path loss: free-space term at 1 m and 73 GHz")
{
    for (double n : {1.0, 2.0, 3.5})
        CHECK(std::abs(path_loss_db(carrier_referenced(n, 0.3), 1.0, 0.0) - (-69.71)) < 0.01);
    CHECK(path_loss_db(carrier_referenced(2.0, 0.0), 1.0, 0.0) ==
          doctest::Approx(-69.71402191260583).epsilon(1e-12));
}

TEST_CASE("path loss: distance term and shadowing")
{
    CHECK(path_loss_db(carrier_referenced(2.0, 0.0), 10.0, 0.0) == doctest::Approx(-89.71402191260583).epsilon(1e-12));
    CHECK(path_loss_db(carrier_referenced(2.0, 0.0), 10.0, 3.0) == doctest::Approx(-92.71402191260583).epsilon(1e-12));
}

TEST_CASE("path loss: bracket is 1 at the reference frequency, scales otherwise")
{
    for (double b : {0.0, 0.01, 0.5, 1.0})
        CHECK(carrier_referenced(2.0, b).exponent_scaling() == doctest::Approx(1.0).epsilon(1e-15));
    PathLossParams p = carrier_referenced(2.59, 0.01);
    p.reference_frequency = 39.5e9;
    CHECK(p.exponent_scaling() == doctest::Approx(1.0084810126582278).epsilon(1e-12));
}

TEST_CASE("path loss: errors")
{
    CHECK_THROWS_AS(path_loss_db(carrier_referenced(2.0, 0.0), 0.0, 0.0), ParameterError);
    CHECK_THROWS_AS(path_loss_db(carrier_referenced(2.0, 0.0), -3.0, 0.0), ParameterError);
    CHECK_THROWS_AS(path_loss_db(carrier_referenced(0.0, 0.0), 3.0, 0.0), ParameterError);
    PathLossParams p = carrier_referenced(2.0, 0.0);
    p.shadow_std = -1.0;
    CHECK_THROWS_AS(path_loss_db(p, 3.0, 0.0), ParameterError);
}

TEST_CASE("LOS probability: hand-evaluated values")
{
    CHECK(los_probability(Scenario::open_square, 10.0) == 1.0);
    CHECK(std::abs(los_probability(Scenario::open_square, 39.0) - 0.692) < 0.001);
    CHECK(los_probability(Scenario::open_square, 39.0) == doctest::Approx(0.6920438303142924).epsilon(1e-12));
    CHECK(los_probability(Scenario::shopping_mall, 1.0) == 1.0);
    CHECK(los_probability(Scenario::shopping_mall, 1.2) == 1.0);
    CHECK(los_probability(Scenario::shopping_mall, 5.9) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(los_probability(Scenario::shopping_mall, 20.0) == doctest::Approx(0.005861004444394937).epsilon(1e-10));
}

TEST_CASE("LOS probability: the middle branch owns d = 6.5")
{
    CHECK(los_probability(Scenario::shopping_mall, 6.5) == doctest::Approx(0.32379017711599134).epsilon(1e-12));
    CHECK(los_probability(Scenario::shopping_mall, std::nextafter(6.5, 7.0)) ==
          doctest::Approx(0.10361285667711723).epsilon(1e-9));
}

TEST_CASE("LOS probability: errors")
{
    CHECK_THROWS_AS(los_probability(Scenario::open_square, 0.0), ParameterError);
    CHECK_THROWS_AS(los_probability(Scenario::shopping_mall, -1.0), ParameterError);
}

TEST_CASE("LOS state sampling")
{
    RandomStream s(1);
    for (int i = 0; i < 10000; ++i)
    {
        const LosState st = sample_los_state(s, Scenario::shopping_mall, 0.5);
        REQUIRE_FALSE(st.blocked);
        REQUIRE(st.phase >= 0.0);
        REQUIRE(st.phase < 2.0 * std::numbers::pi);
        REQUIRE(st.shadow_db == 0.0);
    }

    constexpr int n = 1000000;
    int blocked_open = 0, blocked_mall = 0;
    RandomStream a(2), b(3);
    for (int i = 0; i < n; ++i)
    {
        blocked_open += sample_los_state(a, Scenario::open_square, 20.0).blocked;
        blocked_mall += sample_los_state(b, Scenario::shopping_mall, 20.0).blocked;
    }
    CHECK(blocked_open == 0);
    CHECK(std::abs(blocked_mall / static_cast<double>(n) - (1.0 - 0.005861004444394937)) < 0.001);
    CHECK_THROWS_AS(sample_los_state(a, Scenario::open_square, 0.0), ParameterError);
}

TEST_CASE("cluster count: clamp and clamped-Poisson probabilities")
{
    constexpr int n = 1000000;
    for (double rate : {0.9, 1.9})
    {
        RandomStream s(rate < 1.0 ? 4 : 5);
        int ones = 0;
        for (int i = 0; i < n; ++i)
        {
            const auto k = sample_cluster_count(s, rate);
            REQUIRE(k >= 1);
            ones += k == 1;
        }
        // Oracle: P(max(1, X) = 1) = P(X = 0) + P(X = 1)
        const double expected = testkit::poisson_pmf(0, rate) + testkit::poisson_pmf(1, rate);
        CHECK(std::abs(ones / static_cast<double>(n) - expected) < 0.002);
    }
    CHECK(std::abs(testkit::poisson_pmf(0, 0.9) + testkit::poisson_pmf(1, 0.9) - 0.7725) < 1e-4);
    CHECK(std::abs(testkit::poisson_pmf(0, 1.9) + testkit::poisson_pmf(1, 1.9) - 0.4339) < 0.0005);

    // Tiny rate: the Poisson draw is almost always 0, clamped to 1
    RandomStream s(6);
    for (int i = 0; i < 1000; ++i)
        REQUIRE(sample_cluster_count(s, 1e-9) == 1);
}

TEST_CASE("cluster synthesis: mean cluster count at rate 0.9")
{
    PathLossParams pl;
    ClusterModel model;
    model.rate = 0.9;
    constexpr int scenes = 100000;
    double total = 0.0;
    for (int i = 0; i < scenes; ++i)
    {
        RandomStream s = RandomStream::derive(8, {static_cast<std::uint64_t>(i)});
        total += static_cast<double>(synthesize_clusters(s, pl, model, 7.0, 1.68, 20.7).size());
    }
    // E[max(1, X)] = rate + P(X = 0)
    CHECK(std::abs(total / scenes - (0.9 + std::exp(-0.9))) < 0.01);
}

TEST_CASE("cluster synthesis: per-ray structure")
{
    PathLossParams pl;
    pl.shadow_std = 5.0;
    ClusterModel model;
    const double d = 20.7;
    double sq = 0.0;
    std::size_t rays = 0;
    for (std::uint64_t i = 0; rays < 100000; ++i)
    {
        RandomStream s = RandomStream::derive(9, {i});
        const auto clusters = synthesize_clusters(s, pl, model, 7.0, 1.68, d);
        std::size_t link_rays = 0;
        for (const Cluster &cl : clusters)
            link_rays += cl.rays.size();
        for (const Cluster &cl : clusters)
        {
            REQUIRE(cl.rays.size() >= 1);
            REQUIRE(cl.rays.size() <= 30);
            REQUIRE(cl.central_distance >= d);
            REQUIRE(cl.central_distance <= 1.5 * d);
            for (const Ray &ray : cl.rays)
            {
                REQUIRE(ray.distance >= cl.central_distance);
                REQUIRE(ray.delay == doctest::Approx(ray.distance / speed_of_light));
                REQUIRE(ray.loss_db == doctest::Approx(path_loss_db(pl, ray.distance, cl.shadow_draw)));
                REQUIRE(std::abs(ray.complex_gain) == doctest::Approx(1.0 / std::sqrt(double(link_rays))));
                // Angular deviation of the ray AOA from the cluster mean, wrapped to (-pi, pi]
                double dev = ray.aoa.azimuth - cl.central_aoa.azimuth;
                dev = std::remainder(dev, 2.0 * std::numbers::pi);
                sq += dev * dev;
                ++rays;
            }
        }
    }
    const double spread = std::sqrt(sq / static_cast<double>(rays));
    CHECK(std::abs(spread / (5.0 * std::numbers::pi / 180.0) - 1.0) < 0.05);
}

TEST_CASE("cluster synthesis: a cluster's draws do not depend on other clusters")
{
    PathLossParams pl;
    ClusterModel model;
    RandomStream a = RandomStream::derive(10, {1});
    RandomStream b = RandomStream::derive(10, {1});
    const auto c1 = synthesize_clusters(a, pl, model, 7.0, 1.68, 20.0);
    const auto c2 = synthesize_clusters(b, pl, model, 7.0, 1.68, 20.0);
    REQUIRE(c1.size() == c2.size());
    for (std::size_t i = 0; i < c1.size(); ++i)
    {
        CHECK(c1[i].central_aod.azimuth == c2[i].central_aod.azimuth);
        CHECK(c1[i].rays.size() == c2[i].rays.size());
    }
}

TEST_CASE("curve export writes distance_m,value")
{
    const auto path = std::string("test_curve_export.csv");
    write_curve_csv(path, los_probability_curve(Scenario::shopping_mall, 1.0, 20.0, 5));
    std::ifstream in(path);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "distance_m,value");
    CHECK(first == "1,1");
    CHECK_THROWS_AS(los_probability_curve(Scenario::open_square, 0.0, 10.0, 5), ParameterError);
}

TEST_CASE("invariants: propagation")
{
    for (auto check : {testkit::los_probability_shape(), testkit::los_probability_scenario_ordering(),
                       testkit::path_loss_decreasing(), testkit::path_loss_bracket_identity(),
                       testkit::ray_phase_uniformity()})
    {
        INFO(check.detail);
        CHECK(check.ok);
    }
}
