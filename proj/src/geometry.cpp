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

#include "mmwsim/geometry.hpp"

#include "mmwsim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mmwsim
{

namespace
{
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double half_pi = 0.5 * std::numbers::pi;

bool finite(const Position3D &p)
{
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}
} // namespace

double wrap_azimuth(double angle)
{
    double a = std::fmod(angle, two_pi);
    if (a < 0.0)
        a += two_pi;
    return a < two_pi ? a : 0.0;
}

double clamp_elevation(double angle)
{
    return std::clamp(angle, -half_pi, half_pi);
}

AngularPair AngularPair::make(double azimuth, double elevation)
{
    return {wrap_azimuth(azimuth), clamp_elevation(elevation)};
}

void UpaGeometry::validate() const
{
    if (rows == 0 || cols == 0)
        throw ParameterError("UPA must have at least one row and one column.");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw ParameterError("UPA element spacing must be positive.");
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw ParameterError("Carrier wavelength must be positive.");
}

ComplexVector steering_vector(const UpaGeometry &geom, const AngularPair &angles)
{
    geom.validate();
    const double k = two_pi / geom.wavelength * geom.spacing;
    const double u = k * std::sin(angles.azimuth) * std::cos(angles.elevation);
    const double v = k * std::sin(angles.elevation);

    // Separable phase: exp(j(col u + row v)) = exp(j col u) exp(j row v)
    std::vector<std::complex<double>> col_phase(geom.cols);
    for (std::size_t c = 0; c < geom.cols; ++c)
        col_phase[c] = std::polar(1.0, u * static_cast<double>(c));

    ComplexVector a(static_cast<Eigen::Index>(geom.size()));
    for (std::size_t r = 0; r < geom.rows; ++r)
    {
        const std::complex<double> row_phase = std::polar(1.0, v * static_cast<double>(r));
        for (std::size_t c = 0; c < geom.cols; ++c)
            a[static_cast<Eigen::Index>(r * geom.cols + c)] = row_phase * col_phase[c];
    }
    return a;
}

std::vector<Position3D> place_users(RandomStream &stream, std::size_t n_users, double ring_center_distance,
                                    double ring_radius, double h_user)
{
    if (n_users == 0)
        throw ConfigError("At least one user is required.");
    if (!std::isfinite(ring_center_distance) || !std::isfinite(ring_radius) || !std::isfinite(h_user))
        throw ConfigError("Ring parameters must be finite.");
    if (ring_radius < 0.0)
        throw ConfigError("Ring radius must be non-negative.");
    if (ring_radius >= ring_center_distance)
        throw ConfigError("Ring radius must be smaller than the distance of the ring center from the base station.");

    std::vector<Position3D> users;
    users.reserve(n_users);
    for (std::size_t i = 0; i < n_users; ++i)
    {
        const double r = ring_radius * std::sqrt(stream.next_uniform());
        const double psi = two_pi * stream.next_uniform();
        users.push_back({ring_center_distance + r * std::cos(psi), r * std::sin(psi), h_user});
    }
    return users;
}

double subpath_distance(double r_i, const AngularPair &departure, double h_bs, double h_user, double d)
{
    if (!(r_i > 0.0) || !std::isfinite(r_i))
        throw ParameterError("Cluster central distance must be positive.");
    if (!(d > 0.0) || !std::isfinite(d))
        throw ParameterError("Link distance must be positive.");

    const double vertical = h_bs - h_user + r_i * std::sin(departure.azimuth);
    const double horizontal = d - r_i * std::cos(departure.azimuth) * std::cos(departure.elevation);
    return r_i + std::hypot(vertical, horizontal);
}

double los_distance(const Position3D &a, const Position3D &b)
{
    if (!finite(a) || !finite(b))
        throw ParameterError("Positions must be finite.");
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double dz = b.z - a.z;
    const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (dist == 0.0)
        throw DegenerateError("Coincident positions have no defined link distance.");
    return dist;
}

AngularPair direction(const Position3D &from, const Position3D &to)
{
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const double dz = to.z - from.z;
    return AngularPair::make(std::atan2(dy, dx), std::atan2(dz, std::hypot(dx, dy)));
}

} // namespace mmwsim
