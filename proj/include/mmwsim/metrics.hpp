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

#ifndef MMWSIM_METRICS_HPP
#define MMWSIM_METRICS_HPP

#include "mmwsim/channel.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mmwsim
{

struct SpreadSample
{
    double ratio = 0.0;            // sigma_min / sigma_max in [0, 1]
    std::size_t snapshot_index = 0;
    double condition_number = 1.0; // sigma_max / sigma_min, infinite when rank deficient
};

// Singular values of a tall (rows >= cols) complex matrix, descending.
//
// Householder QR, then one-sided Jacobi on the triangular factor: plane rotations are applied to pairs of columns until every
// pair is orthogonal to working precision. This diagonalizes H^H H without
// forming it, so sigma_min keeps absolute accuracy ~eps * sigma_max; exactly
// repeated columns give sigma_min at roundoff level rather than sqrt(eps).
std::vector<double> singular_values(const ComplexMatrix &H);

SpreadSample singular_spread(const ComplexMatrix &H, std::size_t snapshot_index = 0);
SpreadSample singular_spread(const ChannelMatrix &H, std::size_t snapshot_index = 0);

inline constexpr std::size_t default_cdf_grid_points = 512;

class EmpiricalCdf
{
public:
    EmpiricalCdf(std::span<const double> samples, std::size_t grid_points = default_cdf_grid_points);

    // Right-continuous: fraction of samples <= x.
    double operator()(double x) const;

    const std::vector<double> &sorted_samples() const { return sorted_; }
    const std::vector<double> &grid_x() const { return grid_x_; }
    const std::vector<double> &grid_f() const { return grid_f_; }

private:
    std::vector<double> sorted_;
    std::vector<double> grid_x_;
    std::vector<double> grid_f_;
};

EmpiricalCdf empirical_cdf(std::span<const double> samples, std::size_t grid_points = default_cdf_grid_points);

struct Summary
{
    std::size_t count = 0;
    double mean = 0.0;
    double median = 0.0;
    double p10 = 0.0;
    double p50 = 0.0;
    double p90 = 0.0;
};

// Nearest-rank percentile: the ceil(p/100 * n)-th smallest sample.
double nearest_rank_percentile(std::span<const double> sorted, double percent);

Summary summarize(std::span<const double> samples);

} // namespace mmwsim

#endif
