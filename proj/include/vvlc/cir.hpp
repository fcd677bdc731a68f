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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "vvlc/geometry.hpp"
#include "vvlc/optics.hpp"

namespace vvlc
{

/// One resolved single-bounce ray. Zero-amplitude taps are kept and carry
/// the reason they were zeroed.
struct PathTap
{
    double delay = 0.0;     // [s]
    double amplitude = 0.0; // fraction of transmitted optical power
    Family family = Family::wall1;
    Element tx_element = Element::primary;
    Element rx_element = Element::primary;
    std::size_t scatterer = 0; // index into the scene registry

    bool gated = false;       // incidence outside the field of view
    bool back_facing = false; // a Lambertian cosine is negative
    bool off_wall = false;    // wall point has run past the corner

    bool contributes() const { return !gated && !back_facing && !off_wall; }
    bool operator==(const PathTap &) const = default;
};

/// Uniform-grid view of a tap list. Bin i covers
/// [origin + i * width, origin + (i + 1) * width).
struct BinnedCir
{
    double width = 0.0;
    double origin = 0.0;
    std::vector<double> values;
};

struct ImpulseResponse
{
    std::vector<PathTap> taps; // sorted by delay
    double time = 0.0;
    Element tx_element = Element::primary;
    Element rx_element = Element::primary;

    BinnedCir binned(double bin_width) const;
};

/// Kernel shared by the three families.
PathTap sb_tap(const LinkState &link, const Scatterer &scatterer, Element tx_elem, Element rx_elem,
               const ScenarioConfig &config);

/// Geometry of the ray that `sb_tap` evaluates.
RayGeometry ray_geometry(const LinkState &link, const Scatterer &scatterer, Element tx_elem, Element rx_elem);

/// Tap list for one family; every scatterer must belong to `family`.
/// `first_index` is the registry index of scatterers[0].
ImpulseResponse family_cir(const Scene &scene, Family family, std::span<const Scatterer> scatterers,
                           Element tx_elem, Element rx_elem, std::size_t first_index = 0);

/// Delay-sorted superposition. Throws if element pairs or times differ.
ImpulseResponse total_cir(const ImpulseResponse &sb11, const ImpulseResponse &sb12, const ImpulseResponse &sb13);

/// Per-family responses of one link, indexed by Family.
std::array<ImpulseResponse, 3> family_cirs(const Scene &scene, Element tx_elem, Element rx_elem);

/// Total response of one element pair.
ImpulseResponse link_cir(const Scene &scene, Element tx_elem, Element rx_elem);

/// 2x2 MIMO channel, entry [tx][rx] with index 0 = p/q and 1 = p'/q'.
struct MimoMatrix
{
    std::array<std::array<ImpulseResponse, 2>, 2> entries;

    const ImpulseResponse &at(Element tx, Element rx) const
    {
        return entries[tx == Element::primary ? 0 : 1][rx == Element::primary ? 0 : 1];
    }
};

MimoMatrix mimo_matrix(const Scene &scene);

/// Scene snapshots at the grid instants, advanced sequentially from `scene`.
/// The grid must be strictly increasing and not precede scene.time.
std::vector<Scene> evolve_scenes(const Scene &scene, std::span<const double> grid);

/// MIMO snapshots at the grid instants.
std::vector<MimoMatrix> evolve(const Scene &scene, std::span<const double> grid);

/// t = 0, step, 2 step, ... up to and including the horizon.
std::vector<double> time_grid(double step, double horizon);

} // namespace vvlc
