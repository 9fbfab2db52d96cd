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

#include "mmwsim/random.hpp"

#include "mmwsim/errors.hpp"

#include <boost/math/distributions/poisson.hpp>
#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <string>

namespace mmwsim
{

std::uint64_t mix64(std::uint64_t x)
{
    // splitmix64 finalizer
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed)
    : seed_(seed), engine_(seed)
{
}

RandomStream RandomStream::derive(std::uint64_t seed, std::initializer_list<std::uint64_t> keys)
{
    std::uint64_t h = mix64(seed);
    std::uint64_t slot = 1;
    for (std::uint64_t k : keys)
        h = mix64(h ^ mix64(k + 0xA0761D6478BD642FULL * slot++));
    return RandomStream(h);
}

RandomStream RandomStream::split(std::uint64_t index) const
{
    return derive(seed_, {index});
}

std::uint64_t RandomStream::next_bits()
{
    ++position_;
    return engine_();
}

double RandomStream::next_uniform()
{
    return static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
}

double RandomStream::next_open_uniform()
{
    return (static_cast<double>(next_bits() >> 11) + 0.5) * 0x1.0p-53;
}

void LaplacianSpec::validate() const
{
    if (!std::isfinite(mean))
        throw ParameterError("Laplacian mean must be finite.");
    if (!(std_dev > 0.0) || !std::isfinite(std_dev))
        throw ParameterError("Laplacian standard deviation must be positive and finite.");
}

double LaplacianSpec::scale() const
{
    return std_dev / std::sqrt(2.0);
}

std::uint64_t draw_poisson(RandomStream &stream, double rate)
{
    if (!std::isfinite(rate) || !(rate > 0.0))
        throw ParameterError("Poisson rate must be positive and finite, got " + std::to_string(rate) + ".");

    const double u = stream.next_uniform();
    if (rate < 10.0)
    {
        // Sequential inversion of the CDF
        double pmf = std::exp(-rate);
        double cdf = pmf;
        std::uint64_t k = 0;
        while (u >= cdf && k < 1000)
        {
            ++k;
            pmf *= rate / static_cast<double>(k);
            cdf += pmf;
            if (pmf == 0.0)
                break;
        }
        return k;
    }

    using namespace boost::math::policies;
    using poisson_up = boost::math::poisson_distribution<double, policy<discrete_quantile<integer_round_up>>>;
    // Inversion with u in (0,1) to keep the quantile finite
    const double v = u > 0.0 ? u : 0x1.0p-54;
    return static_cast<std::uint64_t>(boost::math::quantile(poisson_up(rate), v));
}

double draw_laplacian(RandomStream &stream, const LaplacianSpec &spec)
{
    spec.validate();
    const double b = spec.scale();
    const double u = stream.next_open_uniform();
    if (u < 0.5)
        return spec.mean + b * std::log(2.0 * u);
    return spec.mean - b * std::log(2.0 * (1.0 - u));
}

double draw_uniform(RandomStream &stream, double low, double high)
{
    if (!std::isfinite(low) || !std::isfinite(high) || !(low < high))
        throw ParameterError("Uniform range requires finite low < high.");
    const double x = low + (high - low) * stream.next_uniform();
    // Rounding can land exactly on the upper bound for very narrow ranges
    return x < high ? x : std::nextafter(high, low);
}

std::int64_t draw_uniform_int(RandomStream &stream, std::int64_t low, std::int64_t high)
{
    if (low > high)
        throw ParameterError("Integer uniform range requires low <= high.");
    const auto span = static_cast<std::uint64_t>(high - low) + 1;
    const auto offset = static_cast<std::uint64_t>(stream.next_uniform() * static_cast<double>(span));
    return low + static_cast<std::int64_t>(offset < span ? offset : span - 1);
}

double draw_normal(RandomStream &stream, double mean, double std_dev)
{
    if (!std::isfinite(std_dev) || std_dev < 0.0)
        throw ParameterError("Normal standard deviation must be non-negative and finite.");
    const double u = stream.next_open_uniform();
    if (std_dev == 0.0)
        return mean;
    return mean - std_dev * std::sqrt(2.0) * boost::math::erfc_inv(2.0 * u);
}

bool draw_bernoulli(RandomStream &stream, double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw ParameterError("Bernoulli probability must lie in [0, 1].");
    return stream.next_uniform() < p;
}

} // namespace mmwsim
