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

#ifndef MMWSIM_EXPERIMENT_HPP
#define MMWSIM_EXPERIMENT_HPP

#include "mmwsim/channel.hpp"
#include "mmwsim/config.hpp"
#include "mmwsim/metrics.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mmwsim
{

// Stream keys. Each snapshot, and each user within it, draws from its own
// stream derived from (seed, snapshot, [user,] key).
enum class StreamKey : std::uint64_t
{
    placement = 1,
    los = 2,
    clusters = 3,
};

RandomStream snapshot_stream(std::uint64_t seed, std::size_t snapshot, StreamKey key);
RandomStream user_stream(std::uint64_t seed, std::size_t snapshot, std::size_t user, StreamKey key);

struct SnapshotRealization
{
    std::vector<UserLink> links;
    ChannelMatrix matrix;
};

// One channel realization: user placement, blockage, clusters (independent per
// user) and the assembled multiuser matrix.
SnapshotRealization simulate_snapshot(const ScenarioConfig &config, std::size_t snapshot_index);

struct RunOptions
{
    unsigned threads = 1;
};

struct RunResult
{
    ScenarioConfig config;
    std::vector<SpreadSample> samples;             // snapshot order, degenerate snapshots excluded
    std::vector<std::size_t> degenerate_snapshots; // zero channel matrix, ratio undefined
    std::optional<EmpiricalCdf> cdf;               // empty when every snapshot was degenerate
    std::optional<Summary> summary;
    double wall_time_s = 0.0;

    std::vector<double> ratios() const;
};

RunResult run_experiment(const ScenarioConfig &config, const RunOptions &options = {});
std::vector<RunResult> run_experiments(std::span<const ScenarioConfig> configs, const RunOptions &options = {});

} // namespace mmwsim

#endif
