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

#include "vvlc/scene.hpp"

namespace vvlc
{

/// Terminal state needed by the ray kernels: wall distances, frame headings
/// and array spacings at one instant.
struct LinkState
{
    double h_t1 = 0.0;
    double h_t2 = 0.0;
    double h_r1 = 0.0;
    double h_r2 = 0.0;
    double tx_heading = 0.0;
    double rx_heading = 0.0;
    double delta_t = 0.0;
    double delta_r = 0.0;

    Vec2 tx() const { return {-h_t2, -h_t1}; }
    Vec2 rx() const { return {-h_r2, -h_r1}; }
};

LinkState link_state(const Scene &scene);

/// One single-bounce ray between a Tx element and an Rx element.
///
/// `aod_tx` is the Tx AoD phi_T and `aoa_rx` is theta_R. `emission` and
/// `incidence` are the off-axis angles of the same ray relative to the Tx and
/// Rx headings; those feed the radiometry.
struct RayGeometry
{
    Family family = Family::wall1;
    double aod_tx = 0.0;
    double aoa_rx = 0.0;        // frame direction of Rx -> S
    double aoa_scatterer = 0.0; // theta_S, incoming angle off the local normal
    double aod_scatterer = 0.0; // phi_S, outgoing angle off the local normal
    double len_tx_s = 0.0;
    double len_s_rx = 0.0;
    double len_elem_tx = 0.0;
    double len_elem_rx = 0.0;
    double aux_mu_t = 0.0; // mobile family only
    double aux_mu_r = 0.0;

    Vec2 scatterer;         // S in the corner frame
    double dir_tx_s = 0.0;  // frame direction of Tx -> S
    double emission = 0.0;  // wrap(dir_tx_s - tx heading)
    double incidence = 0.0; // |wrap(aoa_rx - rx heading)|, in [0, pi]
};

/// base - delta/2 * sign * cos(heading - angle).
///
/// Throws GeometryError if base <= delta/2 or the result is not positive.
double element_offset(double base_len, double delta, double elem_sign, double heading, double angle);

/// Ray off W1 for Tx AoD phi in (0, pi/2), the grazing angle above the wall.
RayGeometry wall1_geometry(const LinkState &link, double aod, Element tx_elem, Element rx_elem);

/// Ray off W2 for Tx AoD phi in (-pi/2, 0), the angle off W2's normal.
RayGeometry wall2_geometry(const LinkState &link, double aod, Element tx_elem, Element rx_elem);

/// Ray off a mobile scatterer at `position`. The local normal is the
/// bisector of S->Tx and S->Rx.
RayGeometry mobile_geometry(const LinkState &link, Vec2 position, Element tx_elem, Element rx_elem);

} // namespace vvlc
