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
#include "mmwsim/metrics.hpp"
#include "mmwsim/random.hpp"
#include "support/testkit.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace mmwsim;

TEST_CASE("spread: identity, rank deficiency, diagonal")
{
    CHECK(singular_spread(ComplexMatrix(ComplexMatrix::Identity(2, 2))).ratio == 1.0);

    ComplexMatrix dup(3, 2);
    dup << std::complex<double>(1, 2), std::complex<double>(1, 2), 3.0, 3.0, std::complex<double>(0, -1),
        std::complex<double>(0, -1);
    const SpreadSample s = singular_spread(dup);
    CHECK(s.ratio == 0.0);
    CHECK(std::isinf(s.condition_number));

    ComplexMatrix diag = ComplexMatrix::Zero(4, 2);
    diag(0, 0) = 2.0;
    diag(1, 1) = 1.0;
    const SpreadSample d = singular_spread(diag, 17);
    CHECK(d.ratio == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d.condition_number == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d.snapshot_index == 17);
}

TEST_CASE("spread: random 8 x 2 against the Gram eigen-decomposition")
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 100; ++t)
    {
        const ComplexMatrix H = testkit::random_complex_matrix(rng, 8, 2);
        const double oracle = testkit::gram_eigen_ratio(H);
        CHECK(std::abs(singular_spread(H).ratio - oracle) <= 1e-10 * oracle);
    }
}

TEST_CASE("singular values match a dense SVD")
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t)
    {
        const ComplexMatrix H = testkit::random_complex_matrix(rng, 30 + t, 1 + t % 10);
        const auto sv = singular_values(H);
        Eigen::BDCSVD<ComplexMatrix> svd(H);
        for (std::size_t k = 0; k < sv.size(); ++k)
            CHECK(std::abs(sv[k] - svd.singularValues()(static_cast<Eigen::Index>(k))) <=
                  1e-12 * svd.singularValues()(0));
    }
}

TEST_CASE("spread: error paths")
{
    CHECK_THROWS_AS(singular_spread(ComplexMatrix(ComplexMatrix::Zero(4, 2))), DegenerateError);
    ComplexMatrix bad = ComplexMatrix::Identity(3, 2);
    bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(singular_spread(bad), ParameterError);
    CHECK_THROWS_AS(singular_spread(ComplexMatrix(2, 3)), ParameterError);
    CHECK_THROWS_AS(singular_spread(ComplexMatrix()), ParameterError);
}

TEST_CASE("empirical CDF: single point and counting definition")
{
    const std::vector<double> one{0.5};
    const EmpiricalCdf c1(one);
    CHECK(c1(0.4999) == 0.0);
    CHECK(c1(0.5) == 1.0);
    CHECK(c1(7.0) == 1.0);

    const std::vector<double> three{0.3, 0.1, 0.2};
    const EmpiricalCdf c3(three, 3);
    CHECK(c3(0.2) == doctest::Approx(2.0 / 3.0));
    CHECK(c3(0.0999) == 0.0);
    CHECK(c3.grid_x().front() == 0.1);
    CHECK(c3.grid_x().back() == 0.3);
    CHECK(c3.grid_f().back() == 1.0);
    CHECK(c3.sorted_samples() == std::vector<double>{0.1, 0.2, 0.3});
}

TEST_CASE("empirical CDF: DKW bound on uniform samples")
{
    RandomStream s(3);
    std::vector<double> x(100000);
    for (auto &v : x)
        v = s.next_uniform();
    const EmpiricalCdf cdf(x);
    // Exact supremum over the sample points
    double sup = 0.0;
    const auto &sorted = cdf.sorted_samples();
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        sup = std::max({sup, (i + 1) / n - sorted[i], sorted[i] - i / n});
    CHECK(sup < 0.006);
    CHECK(cdf.grid_x().size() == default_cdf_grid_points);
    for (std::size_t k = 1; k < cdf.grid_f().size(); ++k)
        REQUIRE(cdf.grid_f()[k] >= cdf.grid_f()[k - 1]);
}

TEST_CASE("empirical CDF: errors")
{
    CHECK_THROWS_AS(EmpiricalCdf(std::vector<double>{}), ParameterError);
    CHECK_THROWS_AS(EmpiricalCdf(std::vector<double>{1.0, std::numeric_limits<double>::infinity()}), ParameterError);
}

TEST_CASE("summary: nearest-rank order statistics")
{
    const Summary s = summarize(std::vector<double>{3.0, 1.0, 2.0});
    CHECK(s.median == 2.0);
    CHECK(s.mean == 2.0);
    CHECK(s.p10 == 1.0);
    CHECK(s.p90 == 3.0);

    const Summary c = summarize(std::vector<double>(17, 0.25));
    CHECK(c.p10 == 0.25);
    CHECK(c.p50 == 0.25);
    CHECK(c.p90 == 0.25);

    RandomStream r(4);
    std::vector<double> g(100000);
    for (auto &v : g)
        v = draw_normal(r, 0.0, 1.0);
    CHECK(std::abs(summarize(g).median) < 0.01);
    CHECK_THROWS_AS(summarize(std::vector<double>{}), ParameterError);
}

TEST_CASE("invariants: metrics")
{
    for (auto check : {testkit::spread_scale_invariance(), testkit::spread_unitary_invariance(),
                       testkit::spread_bounds_on_monte_carlo(), testkit::duplicate_column_forces_zero()})
    {
        INFO(check.detail);
        CHECK(check.ok);
    }
}
