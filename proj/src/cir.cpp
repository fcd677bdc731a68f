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


#include "vvlc/cir.hpp"

#include <algorithm>
#include <sstream>

namespace vvlc
{

BinnedCir ImpulseResponse::binned(double bin_width) const
{
    if (!(bin_width > 0.0))
        throw ConfigError("bin_width", "must be positive");
    BinnedCir out;
    out.width = bin_width;
    if (taps.empty())
        return out;
    out.origin = std::floor(taps.front().delay / bin_width) * bin_width;
    auto index = [&](double delay) {
        return static_cast<std::size_t>(std::max(0.0, std::floor((delay - out.origin) / bin_width)));
    };
    out.values.assign(index(taps.back().delay) + 1, 0.0);
    for (const auto &tap : taps)
        out.values[std::min(index(tap.delay), out.values.size() - 1)] += tap.amplitude;
    return out;
}

RayGeometry ray_geometry(const LinkState &link, const Scatterer &scatterer, Element tx_elem, Element rx_elem)
{
    switch (scatterer.family)
    {
    case Family::wall1:
        return wall1_geometry(link, scatterer.aod, tx_elem, rx_elem);
    case Family::wall2:
        return wall2_geometry(link, scatterer.aod, tx_elem, rx_elem);
    case Family::mobile:
        return mobile_geometry(link, scatterer.position, tx_elem, rx_elem);
    }
    throw GeometryError("unknown scatterer family");
}

PathTap sb_tap(const LinkState &link, const Scatterer &scatterer, Element tx_elem, Element rx_elem,
               const ScenarioConfig &config)
{
    RayGeometry g = ray_geometry(link, scatterer, tx_elem, rx_elem);

    PathTap tap;
    tap.family = scatterer.family;
    tap.tx_element = tx_elem;
    tap.rx_element = rx_elem;
    tap.delay = (g.len_elem_tx + g.len_elem_rx) / config.c;

    double cos_in = std::cos(g.aoa_scatterer);
    if (std::abs(g.emission) > pi / 2.0 || cos_in < 0.0 || std::abs(g.aod_scatterer) > pi / 2.0 ||
        g.incidence > pi / 2.0)
        tap.back_facing = true;
    else if (!visibility(g.incidence, config.fov))
        tap.gated = true;
    if (scatterer.family != Family::mobile && !scatterer.active)
        tap.off_wall = true;
    if (!tap.contributes())
        return tap;

    double alpha = config.alpha;
    tap.amplitude = lambertian_intensity(g.emission, alpha) / (g.len_elem_tx * g.len_elem_tx) * cos_in *
                    scatterer.rho * lambertian_intensity(g.aod_scatterer, alpha) /
                    (g.len_elem_rx * g.len_elem_rx) * effective_area(g.incidence, radiometry(config));
    return tap;
}

namespace
{

void sort_taps(std::vector<PathTap> &taps)
{
    std::stable_sort(taps.begin(), taps.end(),
                     [](const PathTap &a, const PathTap &b) { return a.delay < b.delay; });
}

} // namespace

ImpulseResponse family_cir(const Scene &scene, Family family, std::span<const Scatterer> scatterers,
                           Element tx_elem, Element rx_elem, std::size_t first_index)
{
    ImpulseResponse ir;
    ir.time = scene.time;
    ir.tx_element = tx_elem;
    ir.rx_element = rx_elem;
    ir.taps.reserve(scatterers.size());
    LinkState link = link_state(scene);
    for (std::size_t i = 0; i < scatterers.size(); ++i)
    {
        if (scatterers[i].family != family)
            throw GeometryError("family_cir: scatterer " + std::to_string(first_index + i) + " is " +
                                std::string(to_string(scatterers[i].family)) + ", expected " +
                                std::string(to_string(family)));
        PathTap tap = sb_tap(link, scatterers[i], tx_elem, rx_elem, scene.config);
        tap.scatterer = first_index + i;
        ir.taps.push_back(tap);
    }
    sort_taps(ir.taps);
    return ir;
}

ImpulseResponse total_cir(const ImpulseResponse &sb11, const ImpulseResponse &sb12, const ImpulseResponse &sb13)
{
    for (const auto *ir : {&sb12, &sb13})
    {
        if (ir->time != sb11.time || ir->tx_element != sb11.tx_element || ir->rx_element != sb11.rx_element)
            throw GeometryError("total_cir: mismatched element pair or time stamp");
    }
    ImpulseResponse out;
    out.time = sb11.time;
    out.tx_element = sb11.tx_element;
    out.rx_element = sb11.rx_element;
    out.taps.reserve(sb11.taps.size() + sb12.taps.size() + sb13.taps.size());
    for (const auto *ir : {&sb11, &sb12, &sb13})
        out.taps.insert(out.taps.end(), ir->taps.begin(), ir->taps.end());
    sort_taps(out.taps);
    return out;
}

std::array<ImpulseResponse, 3> family_cirs(const Scene &scene, Element tx_elem, Element rx_elem)
{
    std::array<ImpulseResponse, 3> out;
    for (auto &ir : out)
    {
        ir.time = scene.time;
        ir.tx_element = tx_elem;
        ir.rx_element = rx_elem;
    }
    LinkState link = link_state(scene);
    for (std::size_t i = 0; i < scene.scatterers.size(); ++i)
    {
        const auto &s = scene.scatterers[i];
        PathTap tap = sb_tap(link, s, tx_elem, rx_elem, scene.config);
        tap.scatterer = i;
        out[static_cast<std::size_t>(s.family)].taps.push_back(tap);
    }
    for (auto &ir : out)
        sort_taps(ir.taps);
    return out;
}

ImpulseResponse link_cir(const Scene &scene, Element tx_elem, Element rx_elem)
{
    auto f = family_cirs(scene, tx_elem, rx_elem);
    return total_cir(f[0], f[1], f[2]);
}

MimoMatrix mimo_matrix(const Scene &scene)
{
    MimoMatrix m;
    const Element elems[2] = {Element::primary, Element::secondary};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = link_cir(scene, elems[i], elems[j]);
    return m;
}

std::vector<Scene> evolve_scenes(const Scene &scene, std::span<const double> grid)
{
    std::vector<Scene> out;
    out.reserve(grid.size());
    Scene current = scene;
    double prev = scene.time;
    for (std::size_t k = 0; k < grid.size(); ++k)
    {
        double t = grid[k];
        if (t < prev || (k > 0 && !(t > grid[k - 1])))
            throw GeometryError("evolve: time grid must be strictly increasing from the scene time");
        if (t > prev)
        {
            current = advance(current, t - prev);
            current.time = t; // keep grid instants exact
            prev = t;
        }
        out.push_back(current);
    }
    return out;
}

std::vector<MimoMatrix> evolve(const Scene &scene, std::span<const double> grid)
{
    std::vector<MimoMatrix> out;
    out.reserve(grid.size());
    for (const auto &s : evolve_scenes(scene, grid))
        out.push_back(mimo_matrix(s));
    return out;
}

std::vector<double> time_grid(double step, double horizon)
{
    if (!(step > 0.0))
        throw ConfigError("time_step", "must be positive");
    if (!(horizon >= 0.0))
        throw ConfigError("horizon", "must be non-negative");
    // Tolerate representation error at the last instant (4 / 0.1 = 40.000000000000004).
    auto n = static_cast<std::size_t>(std::floor(horizon / step + 1e-9));
    std::vector<double> grid(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        grid[k] = static_cast<double>(k) * step;
    return grid;
}

} // namespace vvlc
