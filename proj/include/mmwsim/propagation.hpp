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

#ifndef MMWSIM_PROPAGATION_HPP
#define MMWSIM_PROPAGATION_HPP

#include "mmwsim/geometry.hpp"
#include "mmwsim/random.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmwsim
{

inline constexpr double speed_of_light = 2.998e8; // m/s

enum class Scenario
{
    open_square,
    shopping_mall,
};

std::string to_string(Scenario scenario);
Scenario parse_scenario(std::string_view name);

// Close-in path loss with frequency-dependent exponent. The exponent, b, f0 and
// the shadowing deviation are scenario inputs; there are no built-in values.
struct PathLossParams
{
    double path_loss_exponent = 2.0;       // n
    double system_param_b = 0.0;           // b
    double reference_frequency = 73.0e9;   // f0, Hz
    double shadow_std = 0.0;               // sigma, dB
    double carrier_frequency = 73.0e9;     // Hz

    void validate() const;
    double wavelength() const { return speed_of_light / carrier_frequency; }
    // 1 - b + b c / (lambda f0)
    double exponent_scaling() const;
};

// Link gain in dB (negative for loss):
//   -20 log10(4 pi / lambda) - 10 n [1 - b + b c / (lambda f0)] log10(r) - X
double path_loss_db(const PathLossParams &params, double distance, double shadow_draw_db);

// Amplitude factor sqrt(10^(gain_db / 10)).
double db_to_amplitude(double gain_db);

double los_probability(Scenario scenario, double distance);

struct LosState
{
    double probability = 1.0;
    bool blocked = false;
    double phase = 0.0;    // eta, radians
    double distance = 0.0; // meters
    double shadow_db = 0.0;
    AngularPair departure{}; // direct-path direction at the base station
};

// Draw order: blockage, phase, shadowing.
LosState sample_los_state(RandomStream &stream, Scenario scenario, double distance, double shadow_std = 0.0);

std::uint64_t sample_cluster_count(RandomStream &stream, double rate);

struct Ray
{
    AngularPair aoa;
    AngularPair aod;
    double delay = 0.0;    // seconds
    std::complex<double> complex_gain;
    double distance = 0.0; // meters
    double loss_db = 0.0;
};

struct Cluster
{
    AngularPair central_aoa;
    AngularPair central_aod;
    double central_distance = 0.0; // meters
    double shadow_draw = 0.0;      // dB
    std::vector<Ray> rays;
};

// Statistical description of the clusters of one link.
struct ClusterModel
{
    double rate = 1.9;                   // Poisson rate of the cluster count
    double angle_std = 5.0 * std::numbers::pi / 180.0; // per-ray Laplacian spread, radians
    std::int64_t max_rays = 30;          // rays per cluster ~ U{1..max_rays}
    double distance_scale_min = 1.0;     // r_i = d * U[min, max]
    double distance_scale_max = 1.5;

    void validate() const;
};

// Draws the cluster count from 'stream' and everything else from one sub-stream
// per cluster (stream.split(cluster index)). Ray gains have i.i.d. uniform
// phases and common amplitude 1/sqrt(total ray count).
std::vector<Cluster> synthesize_clusters(RandomStream &stream, const PathLossParams &params,
                                         const ClusterModel &model, double h_bs, double h_user, double d);

// (distance, value) pairs on a linear grid, for plotting.
std::vector<std::pair<double, double>> los_probability_curve(Scenario scenario, double d_min, double d_max,
                                                             std::size_t points);
std::vector<std::pair<double, double>> path_loss_curve(const PathLossParams &params, double d_min, double d_max,
                                                       std::size_t points);

// CSV with header "distance_m,value".
void write_curve_csv(const std::string &path, const std::vector<std::pair<double, double>> &curve);

} // namespace mmwsim

#endif
