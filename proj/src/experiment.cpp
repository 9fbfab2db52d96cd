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

#include "mmwsim/experiment.hpp"

#include "mmwsim/errors.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

namespace mmwsim
{

RandomStream snapshot_stream(std::uint64_t seed, std::size_t snapshot, StreamKey key)
{
    return RandomStream::derive(seed, {snapshot, static_cast<std::uint64_t>(key)});
}

RandomStream user_stream(std::uint64_t seed, std::size_t snapshot, std::size_t user, StreamKey key)
{
    return RandomStream::derive(seed, {snapshot, user, static_cast<std::uint64_t>(key)});
}

SnapshotRealization simulate_snapshot(const ScenarioConfig &config, std::size_t snapshot_index)
{
    config.validate();
    const UpaGeometry geom = config.array_geometry();
    const PathLossParams path_loss = config.effective_path_loss();
    const ClusterModel cluster_model = config.cluster_model();
    const Position3D bs{0.0, 0.0, config.h_bs};

    RandomStream placement = snapshot_stream(config.seed, snapshot_index, StreamKey::placement);
    const std::vector<Position3D> users =
        place_users(placement, config.n_users, config.ring_center_distance, config.ring_radius, config.h_user);

    SnapshotRealization snap;
    snap.links.reserve(users.size());
    for (std::size_t u = 0; u < users.size(); ++u)
    {
        UserLink link;
        link.position = users[u];
        const double d = los_distance(bs, link.position);

        RandomStream los_stream = user_stream(config.seed, snapshot_index, u, StreamKey::los);
        link.los = sample_los_state(los_stream, config.scenario, d, path_loss.shadow_std);
        link.los.departure = direction(bs, link.position);

        RandomStream cluster_stream = user_stream(config.seed, snapshot_index, u, StreamKey::clusters);
        link.clusters = synthesize_clusters(cluster_stream, path_loss, cluster_model, config.h_bs, config.h_user, d);

        link.channel = assemble_user_channel(geom, link.clusters, link.los, path_loss);
        snap.links.push_back(std::move(link));
    }
    snap.matrix = assemble_multiuser_matrix(std::span<const UserLink>(snap.links));
    return snap;
}

std::vector<double> RunResult::ratios() const
{
    std::vector<double> r;
    r.reserve(samples.size());
    for (const SpreadSample &s : samples)
        r.push_back(s.ratio);
    return r;
}

RunResult run_experiment(const ScenarioConfig &config, const RunOptions &options)
{
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    const std::size_t n = config.snapshots;
    std::vector<std::optional<SpreadSample>> slots(n);

    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < n; i += stride)
        {
            const SnapshotRealization snap = simulate_snapshot(config, i);
            try
            {
                slots[i] = singular_spread(snap.matrix, i);
            }
            catch (const DegenerateError &)
            {
                slots[i].reset();
            }
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
    if (threads == 1)
    {
        work(0, 1);
    }
    else
    {
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&, t] {
                    try
                    {
                        work(t, threads);
                    }
                    catch (...)
                    {
                        errors[t] = std::current_exception();
                    }
                });
        }
        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    // Ordered merge by snapshot index
    RunResult result;
    result.config = config;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (slots[i])
            result.samples.push_back(*slots[i]);
        else
            result.degenerate_snapshots.push_back(i);
    }
    if (!result.samples.empty())
    {
        const std::vector<double> r = result.ratios();
        result.cdf.emplace(r);
        result.summary = summarize(r);
    }
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<RunResult> run_experiments(std::span<const ScenarioConfig> configs, const RunOptions &options)
{
    for (const ScenarioConfig &c : configs)
        c.validate();
    std::vector<RunResult> results;
    results.reserve(configs.size());
    for (const ScenarioConfig &c : configs)
        results.push_back(run_experiment(c, options));
    return results;
}

} // namespace mmwsim
