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
#include <string>
#include <string_view>
#include <vector>

#include "vvlc/scene.hpp"

namespace vvlc
{

// Config grammar
// --------------
// One `key = value` per line. `#` starts a comment anywhere on a line; blank
// lines are ignored. Keys are the ScenarioConfig field names. Angle fields
// (fov, gamma_t, gamma_r, vm_mu_1, vm_mu_2, mobile_heading_std) are in
// radians, or in degrees when written with a `_deg` suffix. Counts and the
// seed are non-negative integers. Unknown keys and repeated keys are errors.
// Unspecified keys keep their defaults.

/// Parses and validates a config document.
ScenarioConfig parse_config(std::string_view text);

/// Sets one field from `key` (with optional `_deg` suffix) and its textual
/// value, without validating the whole config.
void set_field(ScenarioConfig &config, std::string_view key, std::string_view value);

/// Applies "key=value" overrides in order, then validates.
ScenarioConfig apply_overrides(ScenarioConfig config, const std::vector<std::string> &overrides);

/// Every field in a fixed order, radians, shortest round-trip numbers.
/// parse_config(canonical_text(c)) == c.
std::string canonical_text(const ScenarioConfig &config);

/// FNV-1a 64-bit.
std::uint64_t fnv1a64(std::string_view bytes);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

} // namespace vvlc
