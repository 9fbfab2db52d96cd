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

#ifndef MMWSIM_RANDOM_HPP
#define MMWSIM_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mmwsim
{

// Seeded source of uniform variates. Every scalar draw consumes exactly one
// 64-bit engine output, so position() counts draws and equal seeds give equal
// sequences regardless of which distributions were requested.
//
// A stream has a single owner. Independent streams for snapshots, users and
// clusters are obtained with derive()/split() instead of sharing one stream.
class RandomStream
{
public:
    explicit RandomStream(std::uint64_t seed);

    // Stream keyed by (seed, keys...). The mapping is a fixed hash, so the
    // draws of one entity do not depend on how many other entities exist.
    static RandomStream derive(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

    // Child stream keyed by this stream's seed and an index. Does not advance this stream.
    RandomStream split(std::uint64_t index) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return position_; }

    std::uint64_t next_bits();
    double next_uniform();      // [0, 1), 53-bit resolution
    double next_open_uniform(); // (0, 1)

private:
    std::uint64_t seed_;
    std::uint64_t position_ = 0;
    std::mt19937_64 engine_;
};

// Laplace distribution described by mean and standard deviation (scale = std_dev / sqrt(2)).
struct LaplacianSpec
{
    double mean = 0.0;
    double std_dev = 0.0;

    void validate() const;
    double scale() const;
};

std::uint64_t draw_poisson(RandomStream &stream, double rate);
double draw_laplacian(RandomStream &stream, const LaplacianSpec &spec);
double draw_uniform(RandomStream &stream, double low, double high);
// Integer uniform on the closed range [low, high].
std::int64_t draw_uniform_int(RandomStream &stream, std::int64_t low, std::int64_t high);
double draw_normal(RandomStream &stream, double mean, double std_dev);
bool draw_bernoulli(RandomStream &stream, double p);

// 64-bit finalizer used for stream derivation.
std::uint64_t mix64(std::uint64_t x);

} // namespace mmwsim

#endif
