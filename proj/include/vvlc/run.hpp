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


#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vvlc/metrics.hpp"

namespace vvlc
{

inline constexpr std::string_view version = "0.1.0";

enum class Mode
{
    snapshot,
    timeline,
    monte_carlo
};

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view text);

struct RunRequest
{
    Mode mode = Mode::snapshot;
    std::optional<std::filesystem::path> config_path;
    std::filesystem::path out_dir = "out";
    std::optional<std::uint64_t> seed;
    std::int64_t realizations = 1;
    std::vector<std::string> overrides;
    unsigned threads = 1;
};

/// Config file (or defaults), then overrides, then the explicit seed.
ScenarioConfig load_config(const RunRequest &request);

/// Channel statistics of pair (p, q) at t = 0 for realizations
/// [0, count), computed on `threads` workers. Results are ordered by index
/// and do not depend on the thread count.
std::vector<ChannelStats> monte_carlo(const ScenarioConfig &config, std::int64_t count, unsigned threads);

/// Executes the request and writes its files. Returns the written paths
/// relative to out_dir. Throws vvlc::Error subclasses.
std::vector<std::string> run(const RunRequest &request);

/// 0 success, 1 config, 2 geometry, 3 io.
int exit_code(ErrorCategory category);

} // namespace vvlc
