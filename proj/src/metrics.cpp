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

#include "mmwsim/metrics.hpp"

#include "mmwsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

namespace mmwsim
{

std::vector<double> singular_values(const ComplexMatrix &H)
{
    if (H.size() == 0)
        throw ParameterError("Matrix must be non-empty.");
    if (H.rows() < H.cols())
        throw ParameterError("Singular spread expects at least as many rows as columns.");
    if (!H.allFinite())
        throw ParameterError("Matrix contains non-finite entries.");

    const Eigen::Index n = H.cols();
    // Tall inputs are first reduced to their n x n triangular QR factor, which
    // has the same singular values.
    ComplexMatrix W;
    if (H.rows() > n)
        W = Eigen::HouseholderQR<ComplexMatrix>(H).matrixQR().topRows(n).triangularView<Eigen::Upper>();
    else
        W = H;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps; ++sweep)
    {
        bool rotated = false;
        for (Eigen::Index p = 0; p + 1 < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q)
            {
                const double alpha = W.col(p).squaredNorm();
                const double beta = W.col(q).squaredNorm();
                if (alpha == 0.0 || beta == 0.0)
                    continue;
                const std::complex<double> gamma = W.col(p).dot(W.col(q)); // h_p^H h_q
                const double g = std::abs(gamma);
                if (g <= eps * std::sqrt(alpha * beta))
                    continue;
                rotated = true;

                // Remove the phase of gamma, then a real symmetric Jacobi rotation
                const std::complex<double> unphase = std::conj(gamma) / g; // exp(-j arg gamma)
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                const ComplexVector hp = W.col(p);
                const ComplexVector hq = unphase * W.col(q);
                W.col(p) = c * hp - s * hq;
                W.col(q) = s * hp + c * hq;
            }
        if (!rotated)
            break;
    }

    std::vector<double> sv(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k)
        sv[static_cast<std::size_t>(k)] = W.col(k).norm();
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

SpreadSample singular_spread(const ComplexMatrix &H, std::size_t snapshot_index)
{
    const std::vector<double> sv = singular_values(H);
    const double largest = sv.front();
    if (largest == 0.0)
        throw DegenerateError("Zero channel matrix: singular value spread is undefined.");

    SpreadSample sample;
    sample.snapshot_index = snapshot_index;
    // Values below the numerical rank threshold are treated as exact zeros
    const double cutoff = static_cast<double>(std::max(H.rows(), H.cols())) *
                          std::numeric_limits<double>::epsilon() * largest;
    sample.ratio = sv.back() < cutoff ? 0.0 : std::clamp(sv.back() / largest, 0.0, 1.0);
    sample.condition_number = sample.ratio > 0.0 ? 1.0 / sample.ratio : std::numeric_limits<double>::infinity();
    return sample;
}

SpreadSample singular_spread(const ChannelMatrix &H, std::size_t snapshot_index)
{
    return singular_spread(H.entries, snapshot_index);
}

EmpiricalCdf::EmpiricalCdf(std::span<const double> samples, std::size_t grid_points)
{
    if (samples.empty())
        throw ParameterError("Empirical CDF needs at least one sample.");
    if (grid_points == 0)
        throw ParameterError("Empirical CDF grid needs at least one point.");
    if (!std::all_of(samples.begin(), samples.end(), [](double x) { return std::isfinite(x); }))
        throw ParameterError("Empirical CDF samples must be finite.");

    sorted_.assign(samples.begin(), samples.end());
    std::sort(sorted_.begin(), sorted_.end());

    const double lo = sorted_.front();
    const double hi = sorted_.back();
    grid_x_.resize(grid_points);
    grid_f_.resize(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i)
    {
        const double x = grid_points == 1 ? hi
                                          : lo + (hi - lo) * static_cast<double>(i) /
                                                     static_cast<double>(grid_points - 1);
        grid_x_[i] = i + 1 == grid_points ? hi : x;
        grid_f_[i] = (*this)(grid_x_[i]);
    }
}

double EmpiricalCdf::operator()(double x) const
{
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

EmpiricalCdf empirical_cdf(std::span<const double> samples, std::size_t grid_points)
{
    return EmpiricalCdf(samples, grid_points);
}

double nearest_rank_percentile(std::span<const double> sorted, double percent)
{
    if (sorted.empty())
        throw ParameterError("Percentile of an empty sample.");
    if (!(percent >= 0.0 && percent <= 100.0))
        throw ParameterError("Percentile must lie in [0, 100].");
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(percent / 100.0 * n));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

Summary summarize(std::span<const double> samples)
{
    if (samples.empty())
        throw ParameterError("Cannot summarize an empty sample.");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());

    Summary s;
    s.count = sorted.size();
    // Fixed summation order (input order) keeps the mean reproducible
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(s.count);
    s.p10 = nearest_rank_percentile(sorted, 10.0);
    s.p50 = nearest_rank_percentile(sorted, 50.0);
    s.p90 = nearest_rank_percentile(sorted, 90.0);
    s.median = s.p50;
    return s;
}

} // namespace mmwsim
