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

#ifndef MMWSIM_OUTPUT_HPP
#define MMWSIM_OUTPUT_HPP

#include "mmwsim/experiment.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mmwsim
{

struct ManifestEntry
{
    std::string file; // relative to the output directory
    std::uint64_t bytes = 0;
    std::string sha256;
};

struct Manifest
{
    std::vector<ManifestEntry> files;
};

struct EmitOptions
{
    bool svg = false;
    std::string title = "CDF of sigma_min / sigma_max";
};

// Writes cdf_<curve-id>.csv per result, summary.json, optionally figure.svg,
// and manifest.json (hashes of the other files). Refuses (DegenerateError)
// when any result has no samples; nothing is written in that case.
Manifest emit_outputs(std::span<const RunResult> results, const std::filesystem::path &out_dir,
                      const EmitOptions &options = {});

std::string sha256_hex(std::string_view data);
std::string file_sha256(const std::filesystem::path &path);

// CDF CSV: header "x,F", one grid point per line, 17 significant digits.
std::string cdf_csv(const EmpiricalCdf &cdf);
std::vector<std::pair<double, double>> read_cdf_csv(const std::filesystem::path &path);

// Hex digest of the canonical config text.
std::string config_hash(const ScenarioConfig &config);

// Text matrix dump:
//   # mmwsim channel rows=<R> cols=<C> seed=<S> snapshot=<I>
//   then R lines of C interleaved "re im" pairs, row-major, 17 significant digits.
void write_channel_dump(const std::filesystem::path &path, const ChannelMatrix &H, std::uint64_t seed,
                        std::size_t snapshot);
ChannelMatrix read_channel_dump(const std::filesystem::path &path);

// JSON description of every random draw of a snapshot (positions, LOS state,
// clusters and rays) plus the array and path-loss parameters, for replay by
// an external reference implementation.
void write_scene_json(const std::filesystem::path &path, const ScenarioConfig &config, std::size_t snapshot,
                      const SnapshotRealization &snap);

} // namespace mmwsim

#endif
