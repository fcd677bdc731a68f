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


#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "vvlc/run.hpp"

int main(int argc, char **argv)
{
    CLI::App app{"Street-corner vehicular visible-light MIMO channel simulator"};
    app.set_version_flag("--version", std::string(vvlc::version));
    app.require_subcommand(1);

    vvlc::RunRequest request;
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", config_path, "Config file (key = value lines)");
        sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
        sub->add_option("--seed", seed, "Master RNG seed (overrides the config)");
        sub->add_option("--set", request.overrides, "Override a config key: key=value (repeatable)")
            ->allow_extra_args(false);
        sub->add_option("--threads", threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    };

    auto *snapshot = app.add_subcommand("snapshot", "t = 0 MIMO tap lists and channel statistics");
    auto *timeline = app.add_subcommand("timeline", "Per-instant power, minimum delay and taps over the horizon");
    auto *mc = app.add_subcommand("monte-carlo", "Channel statistics over scatterer realizations");
    add_common(snapshot);
    add_common(timeline);
    add_common(mc);
    mc->add_option("--realizations", request.realizations, "Number of realizations")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try
    {
        for (auto *sub : {snapshot, timeline, mc})
        {
            if (sub->parsed())
            {
                request.mode = vvlc::parse_mode(sub->get_name());
                if (sub->count("--seed"))
                    request.seed = seed;
            }
        }
        if (!config_path.empty())
            request.config_path = config_path;
        request.out_dir = out_dir;
        request.threads = threads;

        auto files = vvlc::run(request);
        for (const auto &f : files)
            std::cout << (request.out_dir / f).string() << "\n";
        return 0;
    }
    catch (const vvlc::Error &e)
    {
        std::string_view category = e.category() == vvlc::ErrorCategory::config     ? "config"
                                    : e.category() == vvlc::ErrorCategory::geometry ? "geometry"
                                                                                    : "io";
        std::cerr << "vvlc: " << category << " error: " << e.what() << "\n";
        return vvlc::exit_code(e.category());
    }
    catch (const std::exception &e)
    {
        std::cerr << "vvlc: io error: " << e.what() << "\n";
        return 3;
    }
}
