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
#include <vector>

#include "vvlc/types.hpp"

namespace vvlc
{

// Corner frame
// ------------
// Wall W1 is the line y = 0 and wall W2 is the line x = 0; the street scene
// occupies the open quadrant x < 0, y < 0 with the building corner at the
// origin. A point's distance to W1 is |y| and to W2 is |x|, so
//
//   Tx = (-h_T2, -h_T1),  Rx = (-h_R2, -h_R1),  disc centre = (-h_M2, -h_M1).
//
// Headings are measured counter-clockwise from +x. The configured tilt angles
// gamma_T, gamma_R are relative to each vehicle's own street axis: the Tx
// drives along +y (toward W1) at gamma_T = 0, the Rx drives along +x (toward
// W2) at gamma_R = pi/2.

/// All physical and numerical parameters of a run. Defaults are the
/// reference street-corner scenario; scatterer statistics are
/// calibration knobs.
struct ScenarioConfig
{
    // optics
    double alpha = 1.0;         // Lambertian mode number
    double area_rx = 1e-4;      // photodiode area [m^2]
    double fov = 80.0 * pi / 180.0; // receiver FoV half-angle [rad]
    double rho_wall = 0.4;
    double rho_vehicle = 0.8;

    // arrays and kinematics
    double delta_t = 0.5; // Tx element spacing [m]
    double delta_r = 0.5; // Rx element spacing [m]
    double gamma_t = 0.0;
    double gamma_r = pi / 2.0;
    double v_t = 7.0; // [m/s]
    double v_r = 7.0;
    double v_m = 1.0;

    // initial wall distances [m]
    double h_t1 = 40.0;
    double h_t2 = 3.0;
    double h_r1 = 3.0;
    double h_r2 = 40.0;
    double h_m1 = 8.0;
    double h_m2 = 8.0;

    // scatterer statistics
    std::int64_t n1 = 100;
    std::int64_t n2 = 100;
    std::int64_t n3 = 100;
    double vm_kappa_1 = 16.0;
    double vm_mu_1 = 1.0;
    double vm_kappa_2 = 32.0;
    double vm_mu_2 = -1.35;
    double disc_radius = 2.0;
    double mobile_heading_std = 0.0; // per-step heading random walk [rad]

    double c = 3e8;

    // discretisation
    std::uint64_t seed = 1;
    double time_step = 0.1;
    double horizon = 4.0;
    double bin_width = 1e-9;

    bool operator==(const ScenarioConfig &) const = default;
};

/// Throws ConfigError naming the first field that violates an invariant.
void validate(const ScenarioConfig &config);

/// Frame heading of the Tx/Rx implied by the configured tilt angles.
double tx_frame_heading(const ScenarioConfig &config);
double rx_frame_heading(const ScenarioConfig &config);

/// Kinematic state of a vehicle or mobile scatterer.
struct MobileState
{
    Vec2 position;
    double heading = 0.0; // [rad], counter-clockwise from +x
    double speed = 0.0;   // [m/s]

    bool operator==(const MobileState &) const = default;
};

/// Straight-line motion over dt at constant heading and speed.
MobileState moved(const MobileState &state, double dt);

/// One effective scatterer.
///
/// Wall scatterers are identified by the Tx-relative AoD that selected them;
/// their position is re-derived from the Tx array centre at every instant.
/// When the implied point runs past the corner the scatterer stays in the
/// registry but is inactive.
struct Scatterer
{
    Family family = Family::wall1;
    Vec2 position;
    double rho = 0.0;
    Vec2 normal;       // inward wall normal; zero for mobile (per-ray bisector)
    double aod = 0.0;  // wall families: AoD phi_T at the Tx
    MobileState motion; // mobile family only
    bool active = true;

    bool operator==(const Scatterer &) const = default;
};

/// Immutable snapshot of the corner scene at one time instant.
struct Scene
{
    ScenarioConfig config;
    double time = 0.0;
    std::uint64_t steps = 0;       // number of advances applied
    std::uint64_t realization = 0; // Monte Carlo index of the scatterer draw
    MobileState tx;
    MobileState rx;
    std::vector<Scatterer> scatterers;

    bool operator==(const Scene &) const = default;

    double h_t1() const { return -tx.position.y; }
    double h_t2() const { return -tx.position.x; }
    double h_r1() const { return -rx.position.y; }
    double h_r2() const { return -rx.position.x; }
};

/// Validates the config and places Tx, Rx at t = 0. The scatterer registry
/// starts empty.
Scene build_scene(const ScenarioConfig &config);

/// Position on W1 (y = 0) hit by the ray leaving `tx` at wall-1 AoD `aod`.
Vec2 wall1_point(Vec2 tx, double aod);
/// Position on W2 (x = 0) hit by the ray leaving `tx` at wall-2 AoD `aod`.
Vec2 wall2_point(Vec2 tx, double aod);

/// Re-derives wall scatterer positions and activity for the current Tx.
void place_wall_scatterers(Scene &scene);

/// Advances every moving entity by dt > 0.
///
/// Throws GeometryError ("scene geometry exhausted") if the Tx or Rx would
/// reach a wall. Mobile scatterers are mirrored back into the quadrant with
/// their heading reflected.
Scene advance(const Scene &scene, double dt);

} // namespace vvlc
