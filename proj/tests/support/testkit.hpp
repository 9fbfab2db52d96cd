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

// Test-only oracles and the invariant checks shared by the unit suites and
// the acceptance runner. Nothing here is used by the library itself.

#ifndef MMWSIM_TESTKIT_HPP
#define MMWSIM_TESTKIT_HPP

#include "mmwsim/config.hpp"
#include "mmwsim/metrics.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace mmwsim::testkit
{

// ---- statistics oracles --------------------------------------------------

double normal_cdf(double x, double mean, double std_dev);
double laplace_cdf(double x, double mean, double std_dev);
double poisson_pmf(std::uint64_t k, double rate);

// sup_x |F_n(x) - F(x)|
double ks_statistic(std::vector<double> samples, const std::function<double(double)> &cdf);
// Asymptotic one-sample KS critical value
double ks_critical(std::size_t n, double alpha);

double chi_square_statistic(std::span<const double> observed, std::span<const double> expected);
double chi_square_critical(std::size_t dof, double alpha);

double pearson_correlation(std::span<const double> a, std::span<const double> b);

// ---- linear algebra oracles ----------------------------------------------

ComplexMatrix random_complex_matrix(std::mt19937_64 &rng, Eigen::Index rows, Eigen::Index cols);
ComplexMatrix random_unitary(std::mt19937_64 &rng, Eigen::Index n);
// sigma_min / sigma_max from a full dense SVD (divide and conquer)
double dense_svd_ratio(const ComplexMatrix &H);
// sigma_min / sigma_max from the eigenvalues of the Gram matrix H^H H
double gram_eigen_ratio(const ComplexMatrix &H);

// ---- invariant checks ----------------------------------------------------

struct Check
{
    bool ok = false;
    std::string detail;
};

struct NamedCheck
{
    std::string module;
    std::string name;
    std::function<Check()> run;
};

// Configuration used by checks that need the full pipeline: configs/default.cfg.
ScenarioConfig default_config();

Check draw_counter_increments();
Check stream_determinism();
Check sampler_goodness_of_fit(std::size_t n = 100000);
Check stream_independence(std::size_t n = 100000);

Check steering_unit_modulus();
Check steering_self_inner_product();
Check subpath_distance_monotone();
Check placement_uniformity(std::size_t n = 100000);

Check los_probability_shape();
Check los_probability_scenario_ordering();
Check path_loss_decreasing();
Check path_loss_bracket_identity();
Check ray_phase_uniformity(std::size_t n_rays = 100000);

Check channel_linearity();
Check los_dominance();
Check blocked_link_is_nlos_sum();
Check user_permutation();

Check spread_scale_invariance();
Check spread_unitary_invariance();
Check spread_bounds_on_monte_carlo();
Check duplicate_column_forces_zero();

// Median at 'snapshots' vs 2*'snapshots' differs by < 2 standard errors.
Check monte_carlo_convergence(const ScenarioConfig &config);
Check end_to_end_determinism(const ScenarioConfig &config);

std::vector<NamedCheck> all_invariants();

// Distribution-free standard error of the sample median from the order
// statistics at n/2 -+ sqrt(n)/2.
double median_standard_error(std::vector<double> samples);

} // namespace mmwsim::testkit

#endif
