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

#include "mmwsim/channel.hpp"

#include "mmwsim/errors.hpp"

#include <cmath>
#include <string>

namespace mmwsim
{

namespace
{

std::complex<double> mul(std::complex<double> a, std::complex<double> b)
{
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

// h += coeff * conj(a(angles)) without materializing the steering vector. The
// per-element phases are generated by recurrence from one sincos per axis.
void add_conjugate_steering(ComplexVector &h, const UpaGeometry &geom, const AngularPair &angles,
                            std::complex<double> coeff, std::vector<std::complex<double>> &col_phase)
{
    const double k = 2.0 * std::numbers::pi / geom.wavelength * geom.spacing;
    const double u = k * std::sin(angles.azimuth) * std::cos(angles.elevation);
    const double v = k * std::sin(angles.elevation);

    const std::complex<double> col_step = std::polar(1.0, -u);
    const std::complex<double> row_step = std::polar(1.0, -v);
    col_phase.resize(geom.cols);
    col_phase[0] = 1.0;
    for (std::size_t c = 1; c < geom.cols; ++c)
        col_phase[c] = mul(col_phase[c - 1], col_step);

    std::complex<double> row_coeff = coeff;
    for (std::size_t r = 0; r < geom.rows; ++r)
    {
        std::complex<double> *out = h.data() + r * geom.cols;
        for (std::size_t c = 0; c < geom.cols; ++c)
            out[c] += mul(row_coeff, col_phase[c]);
        row_coeff = mul(row_coeff, row_step);
    }
}

} // namespace

ComplexVector assemble_user_channel(const UpaGeometry &geom, const std::vector<Cluster> &clusters,
                                    const LosState &los, const PathLossParams &params)
{
    geom.validate();
    const auto n = static_cast<Eigen::Index>(geom.size());
    ComplexVector h = ComplexVector::Zero(n);

    std::vector<std::complex<double>> scratch;
    for (const Cluster &cl : clusters)
        for (const Ray &ray : cl.rays)
            add_conjugate_steering(h, geom, ray.aod, ray.complex_gain * db_to_amplitude(ray.loss_db), scratch);

    if (!los.blocked)
    {
        constexpr double user_antennas = 1.0;
        const double gain = std::sqrt(user_antennas * static_cast<double>(n)) *
                            db_to_amplitude(path_loss_db(params, los.distance, los.shadow_db));
        add_conjugate_steering(h, geom, los.departure, std::polar(gain, los.phase), scratch);
    }
    return h;
}

ChannelMatrix assemble_multiuser_matrix(std::span<const ComplexVector> channels)
{
    if (channels.empty())
        throw ParameterError("Multiuser matrix needs at least one user.");
    const Eigen::Index rows = channels.front().size();
    if (rows == 0)
        throw ParameterError("User channels must not be empty.");

    ChannelMatrix H;
    H.n_bs = static_cast<std::size_t>(rows);
    H.n_users = channels.size();
    H.entries.resize(rows, static_cast<Eigen::Index>(channels.size()));
    for (std::size_t j = 0; j < channels.size(); ++j)
    {
        if (channels[j].size() != rows)
            throw ParameterError("User " + std::to_string(j) + " has " + std::to_string(channels[j].size()) +
                                 " channel entries, expected " + std::to_string(rows) + ".");
        H.entries.col(static_cast<Eigen::Index>(j)) = channels[j];
    }
    return H;
}

ChannelMatrix assemble_multiuser_matrix(std::span<const UserLink> links)
{
    std::vector<ComplexVector> channels;
    channels.reserve(links.size());
    for (const UserLink &link : links)
        channels.push_back(link.channel);
    return assemble_multiuser_matrix(std::span<const ComplexVector>(channels));
}

} // namespace mmwsim
