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

#include "mmwsim/config.hpp"
#include "mmwsim/errors.hpp"
#include "mmwsim/experiment.hpp"
#include "mmwsim/output.hpp"
#include "mmwsim/propagation.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_config = 1;
constexpr int exit_runtime = 2;

struct RunArgs
{
    std::string config;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> snapshots;
    std::optional<double> cluster_rate;
    std::string out = "out";
    bool emit_svg = false;
    unsigned threads = 1;
};

std::vector<mmwsim::ScenarioConfig> resolve_configs(const RunArgs &args)
{
    mmwsim::ScenarioConfig base = mmwsim::load_config(args.config);
    if (args.seed)
        base.seed = *args.seed;
    if (args.snapshots)
        base.snapshots = *args.snapshots;
    if (args.cluster_rate)
        base.cluster_rate = *args.cluster_rate;
    if (args.preset.empty())
    {
        base.validate();
        return {base};
    }
    return mmwsim::preset(mmwsim::parse_preset(args.preset), base);
}

int cmd_run(const RunArgs &args)
{
    std::vector<mmwsim::ScenarioConfig> configs;
    try
    {
        configs = resolve_configs(args);
    }
    catch (const mmwsim::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }

    try
    {
        std::vector<mmwsim::RunResult> results;
        for (const auto &c : configs)
        {
            results.push_back(mmwsim::run_experiment(c, {args.threads}));
            const auto &r = results.back();
            std::fprintf(stderr, "%-40s samples=%zu degenerate=%zu median=%.4f time=%.1fs\n", c.curve_id().c_str(),
                         r.samples.size(), r.degenerate_snapshots.size(), r.summary ? r.summary->median : 0.0,
                         r.wall_time_s);
        }
        mmwsim::EmitOptions opts;
        opts.svg = args.emit_svg;
        if (!args.preset.empty())
            opts.title = "CDF of sigma_min / sigma_max (" + args.preset + ")";
        const auto manifest = mmwsim::emit_outputs(results, args.out, opts);
        for (const auto &f : manifest.files)
            std::cout << f.sha256 << "  " << f.file << "\n";
    }
    catch (const mmwsim::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime;
    }
    return exit_ok;
}

int cmd_curves(const std::string &config_path, const std::string &out, double d_min, double d_max, std::size_t points)
{
    mmwsim::ScenarioConfig config;
    try
    {
        if (!config_path.empty())
            config = mmwsim::load_config(config_path);
        config.validate();
    }
    catch (const mmwsim::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    try
    {
        std::filesystem::create_directories(out);
        for (auto s : {mmwsim::Scenario::open_square, mmwsim::Scenario::shopping_mall})
        {
            const std::string path = out + "/los_probability_" + mmwsim::to_string(s) + ".csv";
            mmwsim::write_curve_csv(path, mmwsim::los_probability_curve(s, d_min, d_max, points));
            std::cout << path << "\n";
        }
        const std::string path = out + "/path_loss.csv";
        mmwsim::write_curve_csv(path, mmwsim::path_loss_curve(config.effective_path_loss(), d_min, d_max, points));
        std::cout << path << "\n";
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime;
    }
    return exit_ok;
}

int cmd_dump(const RunArgs &args, std::size_t snapshot)
{
    std::vector<mmwsim::ScenarioConfig> configs;
    try
    {
        configs = resolve_configs(args);
    }
    catch (const mmwsim::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    try
    {
        std::filesystem::create_directories(args.out);
        for (const auto &c : configs)
        {
            const auto snap = mmwsim::simulate_snapshot(c, snapshot);
            const std::string stem = args.out + "/" + c.curve_id() + "_s" + std::to_string(snapshot);
            mmwsim::write_channel_dump(stem + "_channel.txt", snap.matrix, c.seed, snapshot);
            mmwsim::write_scene_json(stem + "_scene.json", c, snapshot, snap);
            try
            {
                std::printf("%s ratio=%.17g\n", stem.c_str(), mmwsim::singular_spread(snap.matrix, snapshot).ratio);
            }
            catch (const mmwsim::DegenerateError &)
            {
                std::printf("%s ratio=undefined (zero channel)\n", stem.c_str());
            }
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime;
    }
    return exit_ok;
}

void add_common(CLI::App *cmd, RunArgs &args)
{
    cmd->add_option("--config", args.config, "Scenario config file (key = value)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--preset", args.preset, "Experiment grid")
        ->check(CLI::IsMember({"fig3_scenarios", "fig4_ied", "fig5_array"}));
    cmd->add_option("--seed", args.seed, "Override the config seed");
    cmd->add_option("--snapshots", args.snapshots, "Override the number of Monte Carlo snapshots");
    cmd->add_option("--cluster-rate", args.cluster_rate, "Poisson rate of the cluster count (0.9 or 1.9)");
    cmd->add_option("--out", args.out, "Output directory");
    cmd->add_option("--threads", args.threads, "Worker threads (results do not depend on it)");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"mmwsim: statistical 73 GHz multiuser MIMO channel simulator"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto *run = app.add_subcommand("run", "Run Monte Carlo experiments and write CDFs, summary and manifest");
    add_common(run, run_args);
    run->add_flag("--emit-svg", run_args.emit_svg, "Also write figure.svg");

    RunArgs dump_args;
    std::size_t dump_snapshot = 0;
    auto *dump = app.add_subcommand("dump", "Write the channel matrix and scene draws of one snapshot");
    add_common(dump, dump_args);
    dump->add_option("--snapshot", dump_snapshot, "Snapshot index");

    std::string curves_config;
    std::string curves_out = "curves";
    double d_min = 0.5, d_max = 100.0;
    std::size_t points = 200;
    auto *curves = app.add_subcommand("curves", "Export LOS probability and path loss curves (distance_m,value)");
    curves->add_option("--config", curves_config, "Config file providing path loss parameters")
        ->check(CLI::ExistingFile);
    curves->add_option("--out", curves_out, "Output directory");
    curves->add_option("--d-min", d_min, "Smallest distance in meters");
    curves->add_option("--d-max", d_max, "Largest distance in meters");
    curves->add_option("--points", points, "Number of grid points");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    if (*run)
        return cmd_run(run_args);
    if (*dump)
        return cmd_dump(dump_args, dump_snapshot);
    return cmd_curves(curves_config, curves_out, d_min, d_max, points);
}
