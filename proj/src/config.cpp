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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace mmwsim
{

namespace
{

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_real(const std::string &key, const std::string &value)
{
    std::size_t used = 0;
    double x = 0.0;
    try
    {
        x = std::stod(value, &used);
    }
    catch (const std::exception &)
    {
        used = 0;
    }
    if (used == 0 || used != value.size() || !std::isfinite(x))
        throw ConfigError("Key '" + key + "': expected a finite number, got '" + value + "'.");
    return x;
}

std::uint64_t parse_unsigned(const std::string &key, const std::string &value)
{
    std::uint64_t x = 0;
    const auto *end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, x);
    if (ec != std::errc() || ptr != end)
        throw ConfigError("Key '" + key + "': expected a non-negative integer, got '" + value + "'.");
    return x;
}

std::string fmt17(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string spacing_tag(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", x);
    std::string s = buf;
    for (char &ch : s)
        if (ch == '.')
            ch = 'p';
    return s;
}

using Setter = std::function<void(ScenarioConfig &, const std::string &, const std::string &)>;

const std::map<std::string, Setter> &setters()
{
    static const std::map<std::string, Setter> table = {
        {"scenario", [](ScenarioConfig &c, const std::string &, const std::string &v) { c.scenario = parse_scenario(v); }},
        {"upa_rows", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.upa_rows = parse_unsigned(k, v); }},
        {"upa_cols", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.upa_cols = parse_unsigned(k, v); }},
        {"antenna_spacing_wavelengths", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.antenna_spacing_wavelengths = parse_real(k, v); }},
        {"n_users", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.n_users = parse_unsigned(k, v); }},
        {"carrier_frequency", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.carrier_frequency = parse_real(k, v); }},
        {"h_bs", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.h_bs = parse_real(k, v); }},
        {"h_user", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.h_user = parse_real(k, v); }},
        {"ring_center_distance", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.ring_center_distance = parse_real(k, v); }},
        {"ring_radius", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.ring_radius = parse_real(k, v); }},
        {"cluster_rate", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.cluster_rate = parse_real(k, v); }},
        {"cluster_distance_scale_min", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.cluster_distance_scale_min = parse_real(k, v); }},
        {"cluster_distance_scale_max", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.cluster_distance_scale_max = parse_real(k, v); }},
        {"path_loss.path_loss_exponent", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.path_loss.path_loss_exponent = parse_real(k, v); }},
        {"path_loss.system_param_b", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.path_loss.system_param_b = parse_real(k, v); }},
        {"path_loss.reference_frequency", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.path_loss.reference_frequency = parse_real(k, v); }},
        {"path_loss.shadow_std", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.path_loss.shadow_std = parse_real(k, v); }},
        {"snapshots", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.snapshots = parse_unsigned(k, v); }},
        {"seed", [](ScenarioConfig &c, const std::string &k, const std::string &v) { c.seed = parse_unsigned(k, v); }},
    };
    return table;
}

} // namespace

void ScenarioConfig::validate() const
{
    auto require = [](bool ok, const char *what) {
        if (!ok)
            throw ConfigError(what);
    };
    auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };

    require(upa_rows > 0 && upa_cols > 0, "upa_rows and upa_cols must be positive.");
    require(positive(antenna_spacing_wavelengths), "antenna_spacing_wavelengths must be positive.");
    require(n_users > 0, "n_users must be positive.");
    require(n_users <= upa_rows * upa_cols, "n_users must not exceed the number of BS antennas.");
    require(positive(carrier_frequency), "carrier_frequency must be positive.");
    require(positive(h_bs) && positive(h_user), "h_bs and h_user must be positive.");
    require(positive(ring_center_distance), "ring_center_distance must be positive.");
    require(std::isfinite(ring_radius) && ring_radius >= 0.0, "ring_radius must be non-negative.");
    require(ring_radius < ring_center_distance, "ring_radius must be smaller than ring_center_distance.");
    require(positive(cluster_rate), "cluster_rate must be positive.");
    require(positive(cluster_distance_scale_min) && std::isfinite(cluster_distance_scale_max) &&
                cluster_distance_scale_max >= cluster_distance_scale_min,
            "cluster distance scale range must be positive and ordered.");
    require(snapshots > 0, "snapshots must be positive.");
    try
    {
        effective_path_loss().validate();
    }
    catch (const ParameterError &e)
    {
        throw ConfigError(std::string("path_loss: ") + e.what());
    }
}

UpaGeometry ScenarioConfig::array_geometry() const
{
    const double lambda = speed_of_light / carrier_frequency;
    return {upa_rows, upa_cols, antenna_spacing_wavelengths * lambda, lambda};
}

ClusterModel ScenarioConfig::cluster_model() const
{
    ClusterModel m;
    m.rate = cluster_rate;
    m.distance_scale_min = cluster_distance_scale_min;
    m.distance_scale_max = cluster_distance_scale_max;
    return m;
}

PathLossParams ScenarioConfig::effective_path_loss() const
{
    PathLossParams p = path_loss;
    p.carrier_frequency = carrier_frequency;
    return p;
}

std::string ScenarioConfig::curve_id() const
{
    return to_string(scenario) + "_" + std::to_string(upa_rows) + "x" + std::to_string(upa_cols) + "_da" +
           spacing_tag(antenna_spacing_wavelengths) + "_nu" + std::to_string(n_users);
}

ScenarioConfig parse_config(std::string_view text, const ScenarioConfig &base)
{
    ScenarioConfig config = base;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty())
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("Line " + std::to_string(line_no) + ": expected 'key = value'.");
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        const std::string value = trim(std::string_view(stripped).substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end())
            throw ConfigError("Line " + std::to_string(line_no) + ": unknown key '" + key + "'.");
        if (value.empty())
            throw ConfigError("Line " + std::to_string(line_no) + ": missing value for '" + key + "'.");
        it->second(config, key, value);
    }
    return config;
}

ScenarioConfig load_config(const std::string &path, const ScenarioConfig &base)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("Cannot read config file '" + path + "'.");
    std::ostringstream text;
    text << in.rdbuf();
    try
    {
        return parse_config(text.str(), base);
    }
    catch (const ConfigError &e)
    {
        throw ConfigError(path + ": " + e.what());
    }
}

std::string serialize_config(const ScenarioConfig &c)
{
    std::ostringstream out;
    out << "scenario = " << to_string(c.scenario) << "\n"
        << "upa_rows = " << c.upa_rows << "\n"
        << "upa_cols = " << c.upa_cols << "\n"
        << "antenna_spacing_wavelengths = " << fmt17(c.antenna_spacing_wavelengths) << "\n"
        << "n_users = " << c.n_users << "\n"
        << "carrier_frequency = " << fmt17(c.carrier_frequency) << "\n"
        << "h_bs = " << fmt17(c.h_bs) << "\n"
        << "h_user = " << fmt17(c.h_user) << "\n"
        << "ring_center_distance = " << fmt17(c.ring_center_distance) << "\n"
        << "ring_radius = " << fmt17(c.ring_radius) << "\n"
        << "cluster_rate = " << fmt17(c.cluster_rate) << "\n"
        << "cluster_distance_scale_min = " << fmt17(c.cluster_distance_scale_min) << "\n"
        << "cluster_distance_scale_max = " << fmt17(c.cluster_distance_scale_max) << "\n"
        << "path_loss.path_loss_exponent = " << fmt17(c.path_loss.path_loss_exponent) << "\n"
        << "path_loss.system_param_b = " << fmt17(c.path_loss.system_param_b) << "\n"
        << "path_loss.reference_frequency = " << fmt17(c.path_loss.reference_frequency) << "\n"
        << "path_loss.shadow_std = " << fmt17(c.path_loss.shadow_std) << "\n"
        << "snapshots = " << c.snapshots << "\n"
        << "seed = " << c.seed << "\n";
    return out.str();
}

PresetName parse_preset(std::string_view name)
{
    if (name == "fig3_scenarios")
        return PresetName::fig3_scenarios;
    if (name == "fig4_ied")
        return PresetName::fig4_ied;
    if (name == "fig5_array")
        return PresetName::fig5_array;
    throw ConfigError("Unknown preset '" + std::string(name) + "' (expected fig3_scenarios, fig4_ied or fig5_array).");
}

std::string to_string(PresetName name)
{
    switch (name)
    {
    case PresetName::fig3_scenarios:
        return "fig3_scenarios";
    case PresetName::fig4_ied:
        return "fig4_ied";
    case PresetName::fig5_array:
        return "fig5_array";
    }
    return "unknown";
}

std::vector<ScenarioConfig> preset(PresetName name, const ScenarioConfig &base)
{
    static constexpr std::size_t user_counts[] = {2, 5, 10};
    std::vector<ScenarioConfig> grid;

    switch (name)
    {
    case PresetName::fig3_scenarios:
        for (Scenario s : {Scenario::shopping_mall, Scenario::open_square})
            for (std::size_t nu : user_counts)
            {
                ScenarioConfig c = base;
                c.scenario = s;
                c.upa_rows = 20;
                c.upa_cols = 8;
                c.antenna_spacing_wavelengths = 0.5;
                c.n_users = nu;
                grid.push_back(c);
            }
        break;
    case PresetName::fig4_ied:
        for (double da : {0.5, 4.0, 6.0})
            for (std::size_t nu : user_counts)
            {
                ScenarioConfig c = base;
                c.scenario = Scenario::shopping_mall;
                c.upa_rows = 5;
                c.upa_cols = 8;
                c.antenna_spacing_wavelengths = da;
                c.n_users = nu;
                grid.push_back(c);
            }
        break;
    case PresetName::fig5_array:
        for (std::size_t rows : {5, 10, 15, 20})
            for (std::size_t nu : user_counts)
            {
                ScenarioConfig c = base;
                c.scenario = Scenario::shopping_mall;
                c.upa_rows = rows;
                c.upa_cols = 8;
                c.antenna_spacing_wavelengths = 0.5;
                c.n_users = nu;
                grid.push_back(c);
            }
        break;
    }
    for (const ScenarioConfig &c : grid)
        c.validate();
    return grid;
}

} // namespace mmwsim
