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

#include "mmwsim/output.hpp"

#include "mmwsim/errors.hpp"

#include "json.hpp"
#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mmwsim
{

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace
{

std::string fmt17(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_file(const fs::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw OutputError("Cannot open '" + path.string() + "' for writing.");
    out << content;
    out.close();
    if (!out)
        throw OutputError("Write failed for '" + path.string() + "'.");
}

std::string read_file(const fs::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw OutputError("Cannot open '" + path.string() + "' for reading.");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json config_json(const ScenarioConfig &c)
{
    json j;
    j["scenario"] = to_string(c.scenario);
    j["upa_rows"] = c.upa_rows;
    j["upa_cols"] = c.upa_cols;
    j["antenna_spacing_wavelengths"] = c.antenna_spacing_wavelengths;
    j["n_users"] = c.n_users;
    j["carrier_frequency"] = c.carrier_frequency;
    j["h_bs"] = c.h_bs;
    j["h_user"] = c.h_user;
    j["ring_center_distance"] = c.ring_center_distance;
    j["ring_radius"] = c.ring_radius;
    j["cluster_rate"] = c.cluster_rate;
    j["cluster_distance_scale_min"] = c.cluster_distance_scale_min;
    j["cluster_distance_scale_max"] = c.cluster_distance_scale_max;
    j["path_loss"] = {{"path_loss_exponent", c.path_loss.path_loss_exponent},
                      {"system_param_b", c.path_loss.system_param_b},
                      {"reference_frequency", c.path_loss.reference_frequency},
                      {"shadow_std", c.path_loss.shadow_std}};
    j["snapshots"] = c.snapshots;
    j["seed"] = c.seed;
    return j;
}

json angles_json(const AngularPair &a)
{
    return {{"azimuth", a.azimuth}, {"elevation", a.elevation}};
}

const char *palette(std::size_t i)
{
    static constexpr std::array<const char *, 10> colors = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return colors[i % colors.size()];
}

std::string render_svg(std::span<const RunResult> results, const std::string &title)
{
    constexpr double width = 720, height = 480, left = 60, right = 260, top = 40, bottom = 50;
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto px = [&](double x) { return left + x * pw; };
    auto py = [&](double f) { return top + (1.0 - f) * ph; };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    s << "<text x=\"" << left << "\" y=\"24\" font-size=\"14\">" << title << "</text>\n";
    s << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 10; k += 2)
    {
        const double v = k / 10.0;
        s << "<text x=\"" << px(v) << "\" y=\"" << top + ph + 16 << "\" text-anchor=\"middle\">" << v << "</text>\n";
        s << "<text x=\"" << left - 6 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\">" << v << "</text>\n";
        s << "<line x1=\"" << px(v) << "\" y1=\"" << top << "\" x2=\"" << px(v) << "\" y2=\"" << top + ph
          << "\" stroke=\"#ddd\"/>\n";
    }
    s << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">sigma_min / sigma_max</text>\n";
    s << "<text x=\"16\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 16 " << top + ph / 2
      << ")\" text-anchor=\"middle\">CDF</text>\n";

    for (std::size_t i = 0; i < results.size(); ++i)
    {
        const EmpiricalCdf &cdf = *results[i].cdf;
        s << "<polyline fill=\"none\" stroke=\"" << palette(i) << "\" stroke-width=\"1.5\" points=\"" << px(0.0)
          << "," << py(0.0);
        for (std::size_t k = 0; k < cdf.grid_x().size(); ++k)
            s << " " << px(cdf.grid_x()[k]) << "," << py(cdf.grid_f()[k]);
        s << " " << px(1.0) << "," << py(1.0) << "\"/>\n";

        const double ly = top + 14 + 18.0 * static_cast<double>(i);
        s << "<line x1=\"" << left + pw + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + pw + 36 << "\" y2=\""
          << ly - 4 << "\" stroke=\"" << palette(i) << "\" stroke-width=\"2\"/>\n";
        s << "<text x=\"" << left + pw + 42 << "\" y=\"" << ly << "\">" << results[i].config.curve_id()
          << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

} // namespace

std::string sha256_hex(std::string_view data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw OutputError("SHA-256 computation failed.");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i)
    {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

std::string file_sha256(const fs::path &path)
{
    return sha256_hex(read_file(path));
}

std::string config_hash(const ScenarioConfig &config)
{
    return sha256_hex(serialize_config(config));
}

std::string cdf_csv(const EmpiricalCdf &cdf)
{
    std::string out = "x,F\n";
    for (std::size_t k = 0; k < cdf.grid_x().size(); ++k)
        out += fmt17(cdf.grid_x()[k]) + "," + fmt17(cdf.grid_f()[k]) + "\n";
    return out;
}

std::vector<std::pair<double, double>> read_cdf_csv(const fs::path &path)
{
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line) || line != "x,F")
        throw OutputError("'" + path.string() + "' is not a CDF CSV (missing 'x,F' header).");
    std::vector<std::pair<double, double>> rows;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw OutputError("Malformed CDF row in '" + path.string() + "': " + line);
        rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    return rows;
}

Manifest emit_outputs(std::span<const RunResult> results, const fs::path &out_dir, const EmitOptions &options)
{
    if (results.empty())
        throw DegenerateError("No results to emit.");
    for (const RunResult &r : results)
        if (r.samples.empty() || !r.cdf || !r.summary)
            throw DegenerateError("Run '" + r.config.curve_id() + "' has no valid samples (" +
                                  std::to_string(r.degenerate_snapshots.size()) +
                                  " degenerate snapshots); refusing to emit.");

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec)
        throw OutputError("Cannot create output directory '" + out_dir.string() + "': " + ec.message());

    std::vector<std::string> written;

    json summary;
    summary["generator"] = "mmwsim";
    summary["curves"] = json::array();
    for (const RunResult &r : results)
    {
        const std::string id = r.config.curve_id();
        const std::string csv_name = "cdf_" + id + ".csv";
        write_file(out_dir / csv_name, cdf_csv(*r.cdf));
        written.push_back(csv_name);

        json curve;
        curve["curve_id"] = id;
        curve["seed"] = r.config.seed;
        curve["scenario"] = to_string(r.config.scenario);
        curve["config_hash"] = config_hash(r.config);
        curve["config"] = config_json(r.config);
        curve["snapshots"] = r.config.snapshots;
        curve["samples"] = r.samples.size();
        curve["degenerate_snapshots"] = r.degenerate_snapshots.size();
        curve["summary"] = {{"mean", r.summary->mean},
                            {"median", r.summary->median},
                            {"p10", r.summary->p10},
                            {"p50", r.summary->p50},
                            {"p90", r.summary->p90}};
        curve["cdf_file"] = csv_name;
        summary["curves"].push_back(curve);
    }
    write_file(out_dir / "summary.json", summary.dump(2) + "\n");
    written.push_back("summary.json");

    if (options.svg)
    {
        write_file(out_dir / "figure.svg", render_svg(results, options.title));
        written.push_back("figure.svg");
    }

    Manifest manifest;
    json mj;
    mj["files"] = json::array();
    for (const std::string &name : written)
    {
        ManifestEntry e;
        e.file = name;
        e.bytes = fs::file_size(out_dir / name);
        e.sha256 = file_sha256(out_dir / name);
        mj["files"].push_back({{"file", e.file}, {"bytes", e.bytes}, {"sha256", e.sha256}});
        manifest.files.push_back(std::move(e));
    }
    write_file(out_dir / "manifest.json", mj.dump(2) + "\n");
    return manifest;
}

void write_channel_dump(const fs::path &path, const ChannelMatrix &H, std::uint64_t seed, std::size_t snapshot)
{
    std::string out = "# mmwsim channel rows=" + std::to_string(H.entries.rows()) +
                      " cols=" + std::to_string(H.entries.cols()) + " seed=" + std::to_string(seed) +
                      " snapshot=" + std::to_string(snapshot) + "\n";
    for (Eigen::Index r = 0; r < H.entries.rows(); ++r)
    {
        for (Eigen::Index c = 0; c < H.entries.cols(); ++c)
        {
            if (c > 0)
                out += " ";
            out += fmt17(H.entries(r, c).real()) + " " + fmt17(H.entries(r, c).imag());
        }
        out += "\n";
    }
    write_file(path, out);
}

ChannelMatrix read_channel_dump(const fs::path &path)
{
    std::istringstream in(read_file(path));
    std::string header;
    std::getline(in, header);
    long rows = 0, cols = 0;
    unsigned long long seed = 0, snapshot = 0;
    if (std::sscanf(header.c_str(), "# mmwsim channel rows=%ld cols=%ld seed=%llu snapshot=%llu", &rows, &cols, &seed,
                    &snapshot) != 4 ||
        rows <= 0 || cols <= 0)
        throw OutputError("'" + path.string() + "' has no valid channel dump header.");

    ChannelMatrix H;
    H.entries.resize(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c)
        {
            double re = 0.0, im = 0.0;
            if (!(in >> re >> im))
                throw OutputError("'" + path.string() + "' is truncated.");
            H.entries(r, c) = {re, im};
        }
    H.n_bs = static_cast<std::size_t>(rows);
    H.n_users = static_cast<std::size_t>(cols);
    return H;
}

void write_scene_json(const fs::path &path, const ScenarioConfig &config, std::size_t snapshot,
                      const SnapshotRealization &snap)
{
    const UpaGeometry geom = config.array_geometry();
    const PathLossParams pl = config.effective_path_loss();

    json j;
    j["seed"] = config.seed;
    j["snapshot"] = snapshot;
    j["config"] = config_json(config);
    j["array"] = {{"rows", geom.rows}, {"cols", geom.cols}, {"spacing", geom.spacing}, {"wavelength", geom.wavelength}};
    j["path_loss"] = {{"path_loss_exponent", pl.path_loss_exponent},
                      {"system_param_b", pl.system_param_b},
                      {"reference_frequency", pl.reference_frequency},
                      {"shadow_std", pl.shadow_std},
                      {"carrier_frequency", pl.carrier_frequency},
                      {"speed_of_light", speed_of_light}};
    j["base_station"] = {0.0, 0.0, config.h_bs};
    j["users"] = json::array();
    for (const UserLink &link : snap.links)
    {
        json u;
        u["position"] = {link.position.x, link.position.y, link.position.z};
        u["los"] = {{"probability", link.los.probability},
                    {"blocked", link.los.blocked},
                    {"phase", link.los.phase},
                    {"distance", link.los.distance},
                    {"shadow_db", link.los.shadow_db},
                    {"departure", angles_json(link.los.departure)}};
        u["clusters"] = json::array();
        for (const Cluster &cl : link.clusters)
        {
            json cj;
            cj["central_aoa"] = angles_json(cl.central_aoa);
            cj["central_aod"] = angles_json(cl.central_aod);
            cj["central_distance"] = cl.central_distance;
            cj["shadow_draw"] = cl.shadow_draw;
            cj["rays"] = json::array();
            for (const Ray &ray : cl.rays)
                cj["rays"].push_back({{"aoa", angles_json(ray.aoa)},
                                      {"aod", angles_json(ray.aod)},
                                      {"delay", ray.delay},
                                      {"gain", {ray.complex_gain.real(), ray.complex_gain.imag()}},
                                      {"distance", ray.distance},
                                      {"loss_db", ray.loss_db}});
            u["clusters"].push_back(cj);
        }
        j["users"].push_back(u);
    }
    write_file(path, j.dump(2) + "\n");
}

} // namespace mmwsim
