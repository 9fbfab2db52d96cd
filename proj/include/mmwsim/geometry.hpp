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

#ifndef MMWSIM_GEOMETRY_HPP
#define MMWSIM_GEOMETRY_HPP

#include "mmwsim/random.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace mmwsim
{

using ComplexVector = Eigen::VectorXcd;

struct Position3D
{
    double x = 0.0; // meters
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Position3D &) const = default;
};

// Azimuth is wrapped to [0, 2pi), elevation clamped to [-pi/2, pi/2] by make().
struct AngularPair
{
    double azimuth = 0.0;
    double elevation = 0.0;

    static AngularPair make(double azimuth, double elevation);
};

double wrap_azimuth(double angle);
double clamp_elevation(double angle);

// Uniform planar array in the local yz-plane. Element (row, col) has index
// row * cols + col; rows stack vertically, columns run horizontally.
struct UpaGeometry
{
    std::size_t rows = 1;
    std::size_t cols = 1;
    double spacing = 0.0;    // meters
    double wavelength = 0.0; // meters

    void validate() const;
    std::size_t size() const { return rows * cols; }
};

// Unit-modulus, unnormalized array response with the phase reference at element (0, 0):
//   a[row * cols + col] = exp(j * 2pi/lambda * spacing * (col * sin(az) * cos(el) + row * sin(el)))
ComplexVector steering_vector(const UpaGeometry &geom, const AngularPair &angles);

// Users uniform over the closed disk of radius ring_radius centered at
// (ring_center_distance, 0, h_user). The base station sits at (0, 0, h_bs).
std::vector<Position3D> place_users(RandomStream &stream, std::size_t n_users, double ring_center_distance,
                                    double ring_radius, double h_user);

// Propagation distance of a cluster subpath:
//   r_i + sqrt((h_bs - h_user + r_i sin(az_D))^2 + (d - r_i cos(az_D) cos(el_D))^2)
// The azimuth enters the height term as written in the cluster model; this does
// not follow a standard spherical convention and is kept verbatim.
double subpath_distance(double r_i, const AngularPair &departure, double h_bs, double h_user, double d);

double los_distance(const Position3D &a, const Position3D &b);

// Direction of the straight line from -> to, as seen from 'from'.
AngularPair direction(const Position3D &from, const Position3D &to);

} // namespace mmwsim

#endif
