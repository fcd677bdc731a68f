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

#include "vvlc/scene.hpp"

#include <sstream>

#include "vvlc/scatter.hpp"

namespace vvlc
{

std::string_view to_string(Family f)
{
    switch (f)
    {
    case Family::wall1:
        return "SB-11";
    case Family::wall2:
        return "SB-12";
    case Family::mobile:
        return "SB-13";
    }
    return "?";
}

std::string_view to_string(Element e, bool tx_side)
{
    if (tx_side)
        return e == Element::primary ? "p" : "p'";
    return e == Element::primary ? "q" : "q'";
}

namespace
{

void require_positive(double v, const char *field)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw ConfigError(field, "non-positive distance or parameter (" + std::to_string(v) + ")");
}

void require_non_negative(double v, const char *field)
{
    if (!(v >= 0.0) || !std::isfinite(v))
        throw ConfigError(field, "must be non-negative (" + std::to_string(v) + ")");
}

void require_unit(double v, const char *field)
{
    if (!(v >= 0.0 && v <= 1.0))
        throw ConfigError(field, "reflection coefficient outside [0, 1] (" + std::to_string(v) + ")");
}

} // namespace

void validate(const ScenarioConfig &c)
{
    require_non_negative(c.alpha, "alpha");
    require_positive(c.area_rx, "area_rx");
    if (!(c.fov > 0.0 && c.fov <= pi / 2.0))
        throw ConfigError("fov", "field of view must lie in (0, pi/2]");
    require_unit(c.rho_wall, "rho_wall");
    require_unit(c.rho_vehicle, "rho_vehicle");
    // Zero spacing is the degenerate single-element array.
    require_non_negative(c.delta_t, "delta_t");
    require_non_negative(c.delta_r, "delta_r");
    if (!std::isfinite(c.gamma_t))
        throw ConfigError("gamma_t", "not finite");
    if (!std::isfinite(c.gamma_r))
        throw ConfigError("gamma_r", "not finite");
    // A static scene is allowed, so speeds may be zero.
    require_non_negative(c.v_t, "v_t");
    require_non_negative(c.v_r, "v_r");
    require_non_negative(c.v_m, "v_m");
    require_positive(c.h_t1, "h_t1");
    require_positive(c.h_t2, "h_t2");
    require_positive(c.h_r1, "h_r1");
    require_positive(c.h_r2, "h_r2");
    require_positive(c.h_m1, "h_m1");
    require_positive(c.h_m2, "h_m2");
    if (c.n1 <= 0)
        throw ConfigError("n1", "scatterer count must be positive");
    if (c.n2 <= 0)
        throw ConfigError("n2", "scatterer count must be positive");
    if (c.n3 <= 0)
        throw ConfigError("n3", "scatterer count must be positive");
    require_non_negative(c.vm_kappa_1, "vm_kappa_1");
    require_non_negative(c.vm_kappa_2, "vm_kappa_2");
    if (!std::isfinite(c.vm_mu_1))
        throw ConfigError("vm_mu_1", "not finite");
    if (!std::isfinite(c.vm_mu_2))
        throw ConfigError("vm_mu_2", "not finite");
    require_positive(c.disc_radius, "disc_radius");
    if (c.disc_radius >= c.h_m1 || c.disc_radius >= c.h_m2)
        throw ConfigError("disc_radius", "mobile-scatterer disc intersects a wall");
    require_non_negative(c.mobile_heading_std, "mobile_heading_std");
    require_positive(c.c, "c");
    require_positive(c.time_step, "time_step");
    require_positive(c.horizon, "horizon");
    require_positive(c.bin_width, "bin_width");
    if (c.h_t1 == c.h_r1 && c.h_t2 == c.h_r2)
        throw ConfigError("h_r1", "Tx and Rx coincide");
}

double tx_frame_heading(const ScenarioConfig &config) { return wrap_angle(pi / 2.0 + config.gamma_t); }

double rx_frame_heading(const ScenarioConfig &config) { return wrap_angle(config.gamma_r - pi / 2.0); }

MobileState moved(const MobileState &state, double dt)
{
    MobileState next = state;
    double step = state.speed * dt;
    next.position = state.position + Vec2{std::cos(state.heading), std::sin(state.heading)} * step;
    return next;
}

Scene build_scene(const ScenarioConfig &config)
{
    validate(config);
    Scene scene;
    scene.config = config;
    scene.tx = {{-config.h_t2, -config.h_t1}, tx_frame_heading(config), config.v_t};
    scene.rx = {{-config.h_r2, -config.h_r1}, rx_frame_heading(config), config.v_r};
    return scene;
}

Vec2 wall1_point(Vec2 tx, double aod)
{
    // Ray at grazing angle aod above W1, opening away from W2.
    return {tx.x + tx.y / std::tan(aod), 0.0};
}

Vec2 wall2_point(Vec2 tx, double aod)
{
    // Ray at angle |aod| off W2's normal, turned toward W1.
    return {0.0, tx.y + tx.x * std::tan(aod)};
}

void place_wall_scatterers(Scene &scene)
{
    for (auto &s : scene.scatterers)
    {
        if (s.family == Family::wall1)
        {
            s.position = wall1_point(scene.tx.position, s.aod);
            s.active = s.position.x < 0.0;
        }
        else if (s.family == Family::wall2)
        {
            s.position = wall2_point(scene.tx.position, s.aod);
            s.active = s.position.y < 0.0;
        }
    }
}

namespace
{

void check_terminal(const MobileState &state, const char *name, double time)
{
    if (state.position.x >= 0.0 || state.position.y >= 0.0)
    {
        std::ostringstream os;
        os << "scene geometry exhausted: " << name << " reaches a wall at t = " << time << " s (position "
           << state.position.x << ", " << state.position.y << ")";
        throw GeometryError(os.str());
    }
}

// Mirror a mobile scatterer that stepped through a wall back into the quadrant.
void reflect_into_quadrant(MobileState &m)
{
    constexpr double inset = 1e-9;
    if (m.position.x >= 0.0)
    {
        m.position.x = std::min(-m.position.x, -inset);
        m.heading = wrap_angle(pi - m.heading);
    }
    if (m.position.y >= 0.0)
    {
        m.position.y = std::min(-m.position.y, -inset);
        m.heading = wrap_angle(-m.heading);
    }
}

} // namespace

Scene advance(const Scene &scene, double dt)
{
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw GeometryError("advance: time step must be positive (dt = " + std::to_string(dt) + ")");

    Scene next = scene;
    next.time = scene.time + dt;
    next.steps = scene.steps + 1;
    next.tx = moved(scene.tx, dt);
    next.rx = moved(scene.rx, dt);
    check_terminal(next.tx, "Tx", next.time);
    check_terminal(next.rx, "Rx", next.time);

    double heading_std = scene.config.mobile_heading_std;
    for (std::size_t i = 0; i < next.scatterers.size(); ++i)
    {
        auto &s = next.scatterers[i];
        if (s.family != Family::mobile)
            continue;
        s.motion = moved(s.motion, dt);
        reflect_into_quadrant(s.motion);
        if (heading_std > 0.0)
        {
            s.motion.heading = wrap_angle(
                s.motion.heading + heading_std * step_normal(scene.config.seed, scene.realization, i, next.steps));
        }
        s.position = s.motion.position;
    }
    place_wall_scatterers(next);
    return next;
}

} // namespace vvlc
