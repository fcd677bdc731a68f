// SPDX-License-Identifier: Apache-2.0
//
// vvlc: street-corner vehicular visible-light MIMO channel simulator
// Copyright 2026 The vvlc Authors
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


#include "vvlc/run.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "vvlc/config.hpp"
#include "vvlc/scatter.hpp"

namespace vvlc
{

using Json = nlohmann::ordered_json;

std::string_view to_string(Mode m)
{
    switch (m)
    {
    case Mode::snapshot:
        return "snapshot";
    case Mode::timeline:
        return "timeline";
    case Mode::monte_carlo:
        return "monte-carlo";
    }
    return "?";
}

Mode parse_mode(std::string_view text)
{
    for (Mode m : {Mode::snapshot, Mode::timeline, Mode::monte_carlo})
        if (to_string(m) == text)
            return m;
    throw ConfigError("mode", "unknown mode '" + std::string(text) + "'");
}

int exit_code(ErrorCategory category)
{
    switch (category)
    {
    case ErrorCategory::config:
        return 1;
    case ErrorCategory::geometry:
        return 2;
    case ErrorCategory::io:
        return 3;
    }
    return 1;
}

namespace
{

std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Writer
{
  public:
    explicit Writer(std::filesystem::path dir) : dir_(std::move(dir))
    {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec)
            throw IoError("cannot create output directory " + dir_.string() + ": " + ec.message());
    }

    void write(const std::string &name, const std::string &content)
    {
        auto path = dir_ / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << content;
        out.close();
        if (!out)
            throw IoError("cannot write " + path.string());
        written_.push_back(name);
    }

    const std::vector<std::string> &written() const { return written_; }

  private:
    std::filesystem::path dir_;
    std::vector<std::string> written_;
};

const Element elements[2] = {Element::primary, Element::secondary};

std::string pair_name(Element tx, Element rx)
{
    auto clean = [](std::string_view s) {
        std::string out(s);
        if (!out.empty() && out.back() == '\'')
            out.back() = 'p';
        return out;
    };
    return clean(to_string(tx, true)) + "_" + clean(to_string(rx, false));
}

std::string pair_label(Element tx, Element rx)
{
    return std::string(to_string(tx, true)) + "-" + std::string(to_string(rx, false));
}

std::string taps_csv(const ImpulseResponse &ir)
{
    std::string out = "delay_s,amplitude,family\n";
    for (const auto &t : ir.taps)
        out += format_double(t.delay) + "," + format_double(t.amplitude) + "," + std::string(to_string(t.family)) + "\n";
    return out;
}

std::string binned_csv(const ImpulseResponse &ir, double width)
{
    auto b = ir.binned(width);
    std::string out = "bin_start_s,amplitude\n";
    for (std::size_t i = 0; i < b.values.size(); ++i)
        out += format_double(b.origin + static_cast<double>(i) * b.width) + "," + format_double(b.values[i]) + "\n";
    return out;
}

Json stats_json(const ChannelStats &s)
{
    Json j;
    j["dc_gain"] = s.dc_gain;
    j["gain_db"] = s.gain_db;
    j["loss_db"] = s.loss_db;
    j["mean_excess_delay_s"] = s.mean_excess_delay;
    j["rms_delay_spread_s"] = s.rms_delay_spread;
    // JSON has no infinity; a zero spread gives an unbounded rate.
    j["max_bit_rate_bps"] = std::isfinite(s.max_bit_rate) ? Json(s.max_bit_rate) : Json(nullptr);
    return j;
}

Json distribution_json(const DistributionSummary &d)
{
    Json j;
    j["count"] = d.count;
    j["mean"] = d.mean;
    j["std"] = d.stddev;
    j["skewness"] = d.skewness;
    j["excess_kurtosis"] = d.excess_kurtosis;
    j["min"] = d.min;
    j["max"] = d.max;
    j["histogram"] = {{"edges", d.hist.edges}, {"counts", d.hist.counts}};
    return j;
}

std::string hex64(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << v;
    return os.str();
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

void write_manifest(Writer &w, const RunRequest &req, const ScenarioConfig &cfg)
{
    Json m;
    m["tool"] = "vvlc";
    m["version"] = std::string(version);
    m["mode"] = std::string(to_string(req.mode));
    m["seed"] = cfg.seed;
    m["config_hash"] = "fnv1a64:" + hex64(fnv1a64(canonical_text(cfg)));
    if (req.mode == Mode::monte_carlo)
        m["realizations"] = req.realizations;
    Json files = Json::array();
    for (const auto &f : w.written())
        files.push_back(f);
    m["files"] = files;
    m["config"] = canonical_text(cfg);
    w.write("manifest.json", dump(m));
}

void run_snapshot(Writer &w, const ScenarioConfig &cfg)
{
    Scene scene = sample_realization(build_scene(cfg), 0);
    Json doc;
    doc["time_s"] = scene.time;
    Json pairs = Json::object();
    for (Element tx : elements)
    {
        for (Element rx : elements)
        {
            auto fam = family_cirs(scene, tx, rx);
            auto total = total_cir(fam[0], fam[1], fam[2]);
            w.write("taps_" + pair_name(tx, rx) + ".csv", taps_csv(total));
            w.write("binned_" + pair_name(tx, rx) + ".csv", binned_csv(total, cfg.bin_width));

            Json p = stats_json(channel_stats(total));
            Json families = Json::object();
            for (std::size_t f = 0; f < 3; ++f)
            {
                std::size_t gated = 0, back = 0, off = 0;
                for (const auto &t : fam[f].taps)
                {
                    gated += t.gated;
                    back += t.back_facing;
                    off += t.off_wall;
                }
                families[std::string(to_string(static_cast<Family>(f)))] = {
                    {"taps", fam[f].taps.size()},
                    {"dc_gain", dc_gain(fam[f])},
                    {"gated", gated},
                    {"back_facing", back},
                    {"off_wall", off}};
            }
            p["families"] = families;
            pairs[pair_label(tx, rx)] = p;
        }
    }
    doc["pairs"] = pairs;
    w.write("stats.json", dump(doc));
}

void run_timeline(Writer &w, const ScenarioConfig &cfg)
{
    Scene scene = sample_realization(build_scene(cfg), 0);
    auto grid = time_grid(cfg.time_step, cfg.horizon);
    auto scenes = evolve_scenes(scene, grid);

    std::string rows = "t_s,total_power,min_delay_s\n";
    std::string taps = "t_s,pair,delay_s,amplitude,family\n";
    for (const auto &s : scenes)
    {
        auto m = mimo_matrix(s);
        const auto &pq = m.at(Element::primary, Element::primary);
        double min_delay = std::numeric_limits<double>::infinity();
        for (const auto &t : pq.taps)
            if (t.amplitude > 0.0)
                min_delay = std::min(min_delay, t.delay);
        rows += format_double(s.time) + "," + format_double(dc_gain(pq)) + "," +
                (std::isfinite(min_delay) ? format_double(min_delay) : std::string()) + "\n";
        for (Element tx : elements)
            for (Element rx : elements)
                for (const auto &t : m.at(tx, rx).taps)
                    taps += format_double(s.time) + "," + pair_label(tx, rx) + "," + format_double(t.delay) + "," +
                            format_double(t.amplitude) + "," + std::string(to_string(t.family)) + "\n";
    }
    w.write("timeline.csv", rows);
    w.write("timeline_taps.csv", taps);
}

void run_monte_carlo(Writer &w, const ScenarioConfig &cfg, std::int64_t count, unsigned threads)
{
    auto samples = monte_carlo(cfg, count, threads);
    std::string rows = "index,dc_gain,gain_db,loss_db,mean_excess_delay_s,rms_delay_spread_s,max_bit_rate_bps\n";
    for (std::size_t k = 0; k < samples.size(); ++k)
    {
        const auto &s = samples[k];
        rows += std::to_string(k) + "," + format_double(s.dc_gain) + "," + format_double(s.gain_db) + "," +
                format_double(s.loss_db) + "," + format_double(s.mean_excess_delay) + "," +
                format_double(s.rms_delay_spread) + "," + format_double(s.max_bit_rate) + "\n";
    }
    w.write("realizations.csv", rows);

    Json doc;
    doc["realizations"] = samples.size();
    doc["pair"] = pair_label(Element::primary, Element::primary);
    if (samples.size() >= 2)
    {
        auto summary = summarize(samples);
        doc["gain_db"] = distribution_json(summary.gain_db);
        doc["rms_delay_spread_s"] = distribution_json(summary.rms_delay_spread);
    }
    else
    {
        // A single realization has no spread to summarize.
        doc["gain_db"] = {{"count", samples.size()}, {"mean", samples.front().gain_db}};
        doc["rms_delay_spread_s"] = {{"count", samples.size()}, {"mean", samples.front().rms_delay_spread}};
    }
    w.write("summary.json", dump(doc));
}

} // namespace

ScenarioConfig load_config(const RunRequest &request)
{
    ScenarioConfig cfg;
    if (request.config_path)
        cfg = parse_config(read_file(*request.config_path));
    cfg = apply_overrides(cfg, request.overrides);
    if (request.seed)
        cfg.seed = *request.seed;
    validate(cfg);
    return cfg;
}

std::vector<ChannelStats> monte_carlo(const ScenarioConfig &config, std::int64_t count, unsigned threads)
{
    if (count < 1)
        throw ConfigError("realizations", "must be at least 1");
    Scene base = build_scene(config);
    auto n = static_cast<std::size_t>(count);
    std::vector<ChannelStats> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t k = next++; k < n; k = next++)
        {
            try
            {
                Scene s = sample_realization(base, k);
                out[k] = channel_stats(link_cir(s, Element::primary, Element::primary));
            }
            catch (...)
            {
                errors[k] = std::current_exception();
            }
        }
    };

    unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(n, 256)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();

    // Report the lowest failing index so errors are thread-count independent.
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

std::vector<std::string> run(const RunRequest &request)
{
    ScenarioConfig cfg = load_config(request);
    if (request.mode == Mode::monte_carlo && request.realizations < 1)
        throw ConfigError("realizations", "must be at least 1");
    Writer w(request.out_dir);
    switch (request.mode)
    {
    case Mode::snapshot:
        run_snapshot(w, cfg);
        break;
    case Mode::timeline:
        run_timeline(w, cfg);
        break;
    case Mode::monte_carlo:
        run_monte_carlo(w, cfg, request.realizations, request.threads);
        break;
    }
    write_manifest(w, request, cfg);
    return w.written();
}

} // namespace vvlc
