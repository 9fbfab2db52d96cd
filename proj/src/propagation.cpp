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

#include "mmwsim/propagation.hpp"

#include "mmwsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace mmwsim
{

namespace
{
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double half_pi = 0.5 * std::numbers::pi;

bool positive(double x)
{
    return std::isfinite(x) && x > 0.0;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points)
{
    if (points < 2 || !positive(lo) || !(hi > lo) || !std::isfinite(hi))
        throw ParameterError("Curve grid needs at least two points over a positive increasing range.");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    return grid;
}
} // namespace

std::string to_string(Scenario scenario)
{
    switch (scenario)
    {
    case Scenario::open_square:
        return "open_square";
    case Scenario::shopping_mall:
        return "shopping_mall";
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view name)
{
    if (name == "open_square")
        return Scenario::open_square;
    if (name == "shopping_mall")
        return Scenario::shopping_mall;
    throw ConfigError("Unknown scenario '" + std::string(name) + "' (expected open_square or shopping_mall).");
}

void PathLossParams::validate() const
{
    if (!positive(path_loss_exponent))
        throw ParameterError("Path loss exponent must be positive.");
    if (!std::isfinite(system_param_b))
        throw ParameterError("Path loss parameter b must be finite.");
    if (!positive(reference_frequency) || !positive(carrier_frequency))
        throw ParameterError("Frequencies must be positive.");
    if (!std::isfinite(shadow_std) || shadow_std < 0.0)
        throw ParameterError("Shadow fading deviation must be non-negative.");
}

double PathLossParams::exponent_scaling() const
{
    return 1.0 - system_param_b + system_param_b * speed_of_light / (wavelength() * reference_frequency);
}

double path_loss_db(const PathLossParams &params, double distance, double shadow_draw_db)
{
    params.validate();
    if (!positive(distance))
        throw ParameterError("Path loss distance must be positive.");
    const double lambda = params.wavelength();
    return -20.0 * std::log10(4.0 * std::numbers::pi / lambda) -
           10.0 * params.path_loss_exponent * params.exponent_scaling() * std::log10(distance) - shadow_draw_db;
}

double db_to_amplitude(double gain_db)
{
    return std::pow(10.0, gain_db / 20.0);
}

double los_probability(Scenario scenario, double distance)
{
    if (!positive(distance))
        throw ParameterError("LOS probability distance must be positive.");

    double p = 0.0;
    switch (scenario)
    {
    case Scenario::open_square:
    {
        const double decay = std::exp(-distance / 39.0);
        p = std::min(20.0 / distance, 1.0) * (1.0 - decay) + decay;
        break;
    }
    case Scenario::shopping_mall:
        // The third branch keeps the second branch's exponent; at exactly 6.5 m
        // the second branch applies.
        if (distance <= 1.2)
            p = 1.0;
        else if (distance <= 6.5)
            p = std::exp(-(distance - 1.2) / 4.7);
        else
            p = 0.32 * std::exp(-(distance - 1.2) / 4.7);
        break;
    }
    return std::clamp(p, 0.0, 1.0);
}

LosState sample_los_state(RandomStream &stream, Scenario scenario, double distance, double shadow_std)
{
    LosState los;
    los.distance = distance;
    los.probability = los_probability(scenario, distance);
    los.blocked = draw_bernoulli(stream, 1.0 - los.probability);
    los.phase = draw_uniform(stream, 0.0, two_pi);
    los.shadow_db = draw_normal(stream, 0.0, shadow_std);
    return los;
}

std::uint64_t sample_cluster_count(RandomStream &stream, double rate)
{
    return std::max<std::uint64_t>(1, draw_poisson(stream, rate));
}

void ClusterModel::validate() const
{
    if (!positive(rate))
        throw ParameterError("Cluster rate must be positive.");
    if (!positive(angle_std))
        throw ParameterError("Ray angle spread must be positive.");
    if (max_rays < 1)
        throw ParameterError("Clusters need at least one ray.");
    if (!positive(distance_scale_min) || !(distance_scale_max >= distance_scale_min) ||
        !std::isfinite(distance_scale_max))
        throw ParameterError("Cluster distance scale range must be positive and ordered.");
}

std::vector<Cluster> synthesize_clusters(RandomStream &stream, const PathLossParams &params,
                                         const ClusterModel &model, double h_bs, double h_user, double d)
{
    params.validate();
    model.validate();
    if (!positive(d))
        throw ParameterError("Link distance must be positive.");

    const std::uint64_t n_clusters = sample_cluster_count(stream, model.rate);

    std::vector<Cluster> clusters(n_clusters);
    std::size_t total_rays = 0;
    for (std::uint64_t i = 0; i < n_clusters; ++i)
    {
        RandomStream cs = stream.split(i);
        Cluster &cl = clusters[i];

        const double aoa_az = draw_uniform(cs, 0.0, two_pi);
        const double aod_az = draw_uniform(cs, -half_pi, half_pi);
        const double aoa_el = draw_uniform(cs, -half_pi, half_pi);
        const double aod_el = draw_uniform(cs, -half_pi, half_pi);
        // Keep the unwrapped means for the ray draws; the stored central angles are normalized
        cl.central_aoa = AngularPair::make(aoa_az, aoa_el);
        cl.central_aod = AngularPair::make(aod_az, aod_el);

        const double scale = model.distance_scale_max > model.distance_scale_min
                                 ? draw_uniform(cs, model.distance_scale_min, model.distance_scale_max)
                                 : model.distance_scale_min;
        cl.central_distance = d * scale;
        cl.shadow_draw = draw_normal(cs, 0.0, params.shadow_std);

        const auto n_rays = static_cast<std::size_t>(draw_uniform_int(cs, 1, model.max_rays));
        cl.rays.resize(n_rays);
        for (Ray &ray : cl.rays)
        {
            const double ray_aoa_az = draw_laplacian(cs, {aoa_az, model.angle_std});
            const double ray_aoa_el = draw_laplacian(cs, {aoa_el, model.angle_std});
            const double ray_aod_az = draw_laplacian(cs, {aod_az, model.angle_std});
            const double ray_aod_el = draw_laplacian(cs, {aod_el, model.angle_std});
            ray.aoa = AngularPair::make(ray_aoa_az, ray_aoa_el);
            ray.aod = AngularPair::make(ray_aod_az, ray_aod_el);
            ray.distance = subpath_distance(cl.central_distance, ray.aod, h_bs, h_user, d);
            ray.delay = ray.distance / speed_of_light;
            ray.loss_db = path_loss_db(params, ray.distance, cl.shadow_draw);
            ray.complex_gain = std::polar(1.0, draw_uniform(cs, 0.0, two_pi));
        }
        total_rays += n_rays;
    }

    const double amplitude = 1.0 / std::sqrt(static_cast<double>(total_rays));
    for (Cluster &cl : clusters)
        for (Ray &ray : cl.rays)
            ray.complex_gain *= amplitude;
    return clusters;
}

std::vector<std::pair<double, double>> los_probability_curve(Scenario scenario, double d_min, double d_max,
                                                             std::size_t points)
{
    std::vector<std::pair<double, double>> curve;
    for (double d : linear_grid(d_min, d_max, points))
        curve.emplace_back(d, los_probability(scenario, d));
    return curve;
}

std::vector<std::pair<double, double>> path_loss_curve(const PathLossParams &params, double d_min, double d_max,
                                                       std::size_t points)
{
    std::vector<std::pair<double, double>> curve;
    for (double d : linear_grid(d_min, d_max, points))
        curve.emplace_back(d, path_loss_db(params, d, 0.0));
    return curve;
}

void write_curve_csv(const std::string &path, const std::vector<std::pair<double, double>> &curve)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw OutputError("Cannot open '" + path + "' for writing.");
    out << "distance_m,value\n";
    char buf[64];
    for (const auto &[d, v] : curve)
    {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", d, v);
        out << buf;
    }
    if (!out)
        throw OutputError("Write failed for '" + path + "'.");
}

} // namespace mmwsim
