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


#include "vvlc/geometry.hpp"

#include <sstream>

namespace vvlc
{

LinkState link_state(const Scene &scene)
{
    return {scene.h_t1(),      scene.h_t2(),      scene.h_r1(),           scene.h_r2(),
            scene.tx.heading,  scene.rx.heading,  scene.config.delta_t,   scene.config.delta_r};
}

double element_offset(double base_len, double delta, double elem_sign, double heading, double angle)
{
    if (!(base_len > 0.5 * delta))
    {
        std::ostringstream os;
        os << "element correction exceeds path (base " << base_len << " m, spacing " << delta << " m)";
        throw GeometryError(os.str());
    }
    double len = base_len - 0.5 * delta * elem_sign * std::cos(heading - angle);
    if (!(len > 0.0))
        throw GeometryError("element correction exceeds path");
    return len;
}

namespace
{

double rx_offset(double base_len, double delta, double elem_sign, double heading, double angle)
{
    // Rx side is written cos(angle - heading); same value by evenness.
    if (!(base_len > 0.5 * delta))
        throw GeometryError("element correction exceeds path");
    double len = base_len - 0.5 * delta * elem_sign * std::cos(angle - heading);
    if (!(len > 0.0))
        throw GeometryError("element correction exceeds path");
    return len;
}

void finish(RayGeometry &g, const LinkState &link, Element tx_elem, Element rx_elem)
{
    g.len_elem_tx = element_offset(g.len_tx_s, link.delta_t, element_sign(tx_elem), link.tx_heading, g.dir_tx_s);
    g.len_elem_rx = rx_offset(g.len_s_rx, link.delta_r, element_sign(rx_elem), link.rx_heading, g.aoa_rx);
    g.emission = wrap_angle(g.dir_tx_s - link.tx_heading);
    g.incidence = std::abs(wrap_angle(g.aoa_rx - link.rx_heading));
}

} // namespace

RayGeometry wall1_geometry(const LinkState &link, double aod, Element tx_elem, Element rx_elem)
{
    if (!(aod > 0.0 && aod < pi / 2.0))
        throw GeometryError("wall-1 AoD outside (0, pi/2): " + std::to_string(aod));

    RayGeometry g;
    g.family = Family::wall1;
    g.aod_tx = aod;
    g.dir_tx_s = pi - aod;
    double run = link.h_t1 / std::tan(aod);
    g.scatterer = {-link.h_t2 - run, 0.0};
    g.len_tx_s = link.h_t1 / std::sin(aod);

    g.aoa_rx = pi - std::atan2(link.h_r1, link.h_t2 + run - link.h_r2);
    if (!(g.aoa_rx > 0.0 && g.aoa_rx < pi))
        throw GeometryError("invalid coupling: wall-1 AoA outside (0, pi)");
    g.len_s_rx = link.h_r1 / std::sin(g.aoa_rx);

    g.aoa_scatterer = std::abs(pi / 2.0 - aod);
    g.aod_scatterer = std::abs(pi / 2.0 - g.aoa_rx);
    finish(g, link, tx_elem, rx_elem);
    return g;
}

RayGeometry wall2_geometry(const LinkState &link, double aod, Element tx_elem, Element rx_elem)
{
    if (!(aod > -pi / 2.0 && aod < 0.0))
        throw GeometryError("wall-2 AoD outside (-pi/2, 0): " + std::to_string(aod));

    RayGeometry g;
    g.family = Family::wall2;
    g.aod_tx = aod;
    g.dir_tx_s = -aod;
    double rise = link.h_t2 * std::tan(aod);
    g.scatterer = {0.0, -link.h_t1 - rise};
    g.len_tx_s = link.h_t2 / std::cos(aod);

    g.aoa_rx = std::atan2(link.h_r1 - link.h_t1 - rise, link.h_r2);
    if (!(g.aoa_rx > -pi / 2.0 && g.aoa_rx < pi / 2.0))
        throw GeometryError("invalid coupling: wall-2 AoA outside (-pi/2, pi/2)");
    g.len_s_rx = link.h_r2 / std::cos(g.aoa_rx);

    g.aoa_scatterer = std::abs(aod);
    g.aod_scatterer = std::abs(g.aoa_rx);
    finish(g, link, tx_elem, rx_elem);
    return g;
}

RayGeometry mobile_geometry(const LinkState &link, Vec2 position, Element tx_elem, Element rx_elem)
{
    double h_m1 = -position.y;
    double h_m2 = -position.x;

    RayGeometry g;
    g.family = Family::mobile;
    g.scatterer = position;
    g.len_tx_s = std::hypot(h_m1 - link.h_t1, h_m2 - link.h_t2);
    g.len_s_rx = std::hypot(h_m1 - link.h_r1, h_m2 - link.h_r2);
    if (!(g.len_tx_s > 0.0) || !(g.len_s_rx > 0.0))
        throw GeometryError("degenerate ray: mobile scatterer coincides with a terminal");

    g.aux_mu_t = std::atan2(link.h_t1 - h_m1, link.h_t2 - h_m2);
    g.aux_mu_r = std::atan2(link.h_r1 - h_m1, link.h_r2 - h_m2);
    g.aod_tx = (position - link.tx()).angle();
    g.dir_tx_s = g.aod_tx;
    g.aoa_rx = wrap_angle(std::atan(std::tan(g.aod_tx - g.aux_mu_t) * g.len_tx_s / g.len_s_rx) + g.aux_mu_r);

    // Bisector normal: theta_S and phi_S are both half the opening angle.
    Vec2 to_tx = (link.tx() - position) * (1.0 / g.len_tx_s);
    Vec2 to_rx = (link.rx() - position) * (1.0 / g.len_s_rx);
    double half = 0.5 * std::atan2(std::abs(cross(to_tx, to_rx)), dot(to_tx, to_rx));
    g.aoa_scatterer = half;
    g.aod_scatterer = half;
    finish(g, link, tx_elem, rx_elem);
    return g;
}

} // namespace vvlc
