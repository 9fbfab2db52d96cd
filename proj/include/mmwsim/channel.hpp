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

#ifndef MMWSIM_CHANNEL_HPP
#define MMWSIM_CHANNEL_HPP

#include "mmwsim/geometry.hpp"
#include "mmwsim/propagation.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace mmwsim
{

using ComplexMatrix = Eigen::MatrixXcd;

struct UserLink
{
    Position3D position;
    LosState los;
    std::vector<Cluster> clusters;
    ComplexVector channel;
};

// Multiuser channel, one column per user antenna (users in order).
struct ChannelMatrix
{
    ComplexMatrix entries;
    std::size_t n_bs = 0;
    std::size_t n_users = 0;
    std::size_t per_user_antennas = 1;
};

// Narrowband downlink channel of a single-antenna user, n_BS entries:
//
//   h = sum_{i,l} alpha_il sqrt(L(r_il)) conj(a(aod_il))
//     + [not blocked] sqrt(K n_BS) exp(j eta) sqrt(L(d)) conj(a(aod_LOS))
//
// All rays are summed coherently; delay taps only carry through the stored ray
// delays. L(d) uses the LOS state's own shadowing draw. K is fixed at 1.
ComplexVector assemble_user_channel(const UpaGeometry &geom, const std::vector<Cluster> &clusters,
                                    const LosState &los, const PathLossParams &params);

ChannelMatrix assemble_multiuser_matrix(std::span<const UserLink> links);
ChannelMatrix assemble_multiuser_matrix(std::span<const ComplexVector> channels);

} // namespace mmwsim

#endif
