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
#include <algorithm>
#include <random>
#include <vector>

#include "vvlc/scene.hpp"

namespace vvlc
{

enum class Stream : std::uint64_t
{
    wall1 = 1,
    wall2 = 2,
    mobile = 3
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seeded random stream. Realization k's draws depend only on
/// (seed, k, stream), never on execution order.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng substream(std::uint64_t seed, std::uint64_t realization, Stream stream);

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

/// Stateless standard normal keyed by (seed, realization, id, step).
double step_normal(std::uint64_t seed, std::uint64_t realization, std::uint64_t id, std::uint64_t step);

/// von Mises(mu, kappa) on (-pi, pi]; kappa = 0 is uniform.
double sample_von_mises(double mu, double kappa, Rng &rng);

/// Open AoD interval accepted for a wall family at the current Tx.
struct AodInterval
{
    double lo = 0.0;
    double hi = 0.0;
};

AodInterval valid_aod_interval(const Scene &scene, Family wall);

/// Truncated von Mises AoDs mapped to points on the wall. Throws
/// ConfigError if fewer than 1% of draws fall inside the valid interval.
std::vector<Scatterer> sample_wall_scatterers(const Scene &scene, Family wall, std::int64_t count, Rng &rng);

/// Uniform on the configured disc, each with speed v_M and a uniform heading.
std::vector<Scatterer> sample_mobile_scatterers(const Scene &scene, std::int64_t count, Rng &rng);

/// Scene with realization k's N1 + N2 + N3 scatterers, in that order.
Scene sample_realization(const Scene &scene, std::uint64_t realization);

} // namespace vvlc
