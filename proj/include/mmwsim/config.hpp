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

#ifndef MMWSIM_CONFIG_HPP
#define MMWSIM_CONFIG_HPP

#include "mmwsim/propagation.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mmwsim
{

// One Monte Carlo experiment. Defaults are the fixed scene of the simulations
// (73 GHz, 7 m BS, 1.68 m users, 5 m ring at 20 m). path_loss defaults are
// neutral placeholders; real runs load them from a config file.
struct ScenarioConfig
{
    Scenario scenario = Scenario::shopping_mall;
    std::size_t upa_rows = 20;
    std::size_t upa_cols = 8;
    double antenna_spacing_wavelengths = 0.5;
    std::size_t n_users = 2;
    double carrier_frequency = 73.0e9;
    double h_bs = 7.0;
    double h_user = 1.68;
    double ring_center_distance = 20.0;
    double ring_radius = 5.0;
    double cluster_rate = 1.9;
    double cluster_distance_scale_min = 1.0;
    double cluster_distance_scale_max = 1.5;
    PathLossParams path_loss;
    std::size_t snapshots = 10000;
    std::uint64_t seed = 1;

    // Throws ConfigError describing the first violated constraint.
    void validate() const;

    UpaGeometry array_geometry() const;
    ClusterModel cluster_model() const;
    // path_loss with carrier_frequency taken from this config
    PathLossParams effective_path_loss() const;

    // e.g. "shopping_mall_20x8_da0p5_nu10"
    std::string curve_id() const;
};

// Parses "key = value" lines ('#' starts a comment). Keys are the field names
// of ScenarioConfig; path loss fields are prefixed with "path_loss.".
// Keys not present keep the values of 'base'.
ScenarioConfig parse_config(std::string_view text, const ScenarioConfig &base = {});
ScenarioConfig load_config(const std::string &path, const ScenarioConfig &base = {});

// Canonical key/value text, readable by parse_config, numbers with 17 significant digits.
std::string serialize_config(const ScenarioConfig &config);

enum class PresetName
{
    fig3_scenarios,
    fig4_ied,
    fig5_array,
};

PresetName parse_preset(std::string_view name);
std::string to_string(PresetName name);

// Experiment grids. Everything not varied by the preset is taken from 'base'.
//   fig3_scenarios: {shopping_mall, open_square} x n_users {2, 5, 10}; 20x8 UPA, 0.5 lambda
//   fig4_ied:       spacing {0.5, 4, 6} lambda x n_users {2, 5, 10}; 5x8 UPA, shopping mall
//   fig5_array:     UPA {5, 10, 15, 20}x8 x n_users {2, 5, 10}; 0.5 lambda, shopping mall
std::vector<ScenarioConfig> preset(PresetName name, const ScenarioConfig &base = {});

} // namespace mmwsim

#endif
