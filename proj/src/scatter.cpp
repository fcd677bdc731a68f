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


#include "vvlc/scatter.hpp"

namespace vvlc
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t realization, Stream stream)
{
    std::uint64_t key = splitmix64(seed);
    key = splitmix64(key ^ realization);
    key = splitmix64(key ^ static_cast<std::uint64_t>(stream));
    return Rng(key);
}

double step_normal(std::uint64_t seed, std::uint64_t realization, std::uint64_t id, std::uint64_t step)
{
    std::uint64_t key = splitmix64(splitmix64(splitmix64(seed) ^ realization) ^ id);
    std::uint64_t a = splitmix64(key ^ (step << 1));
    std::uint64_t b = splitmix64(key ^ ((step << 1) | 1));
    // Box-Muller on (0, 1] x [0, 1).
    double u1 = static_cast<double>((a >> 11) + 1) * 0x1.0p-53;
    double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
}

double sample_von_mises(double mu, double kappa, Rng &rng)
{
    if (!(kappa >= 0.0))
        throw ConfigError("kappa", "von Mises concentration must be non-negative");
    if (kappa < 1e-8)
        return wrap_angle(mu + pi - 2.0 * pi * rng.uniform());

    // Best & Fisher (1979) wrapped-Cauchy envelope.
    double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
    double r = (1.0 + rho * rho) / (2.0 * rho);
    double f = 0.0;
    for (;;)
    {
        double u1 = rng.uniform();
        double u2 = rng.uniform();
        double z = std::cos(pi * u1);
        f = (1.0 + r * z) / (r + z);
        double c = kappa * (r - f);
        if (c * (2.0 - c) - u2 > 0.0)
            break;
        if (u2 > 0.0 && std::log(c / u2) + 1.0 - c >= 0.0)
            break;
    }
    double theta = std::acos(std::clamp(f, -1.0, 1.0));
    if (rng.uniform() < 0.5)
        theta = -theta;
    return wrap_angle(mu + theta);
}

AodInterval valid_aod_interval(const Scene &scene, Family wall)
{
    if (wall == Family::wall1)
        return {0.0, pi / 2.0};
    if (wall == Family::wall2)
        // Below this the W2 point would lie past the corner.
        return {-std::atan(scene.h_t1() / scene.h_t2()), 0.0};
    throw ConfigError("family", "not a wall family");
}

std::vector<Scatterer> sample_wall_scatterers(const Scene &scene, Family wall, std::int64_t count, Rng &rng)
{
    const auto &cfg = scene.config;
    AodInterval range = valid_aod_interval(scene, wall);
    bool w1 = wall == Family::wall1;
    double mu = w1 ? cfg.vm_mu_1 : cfg.vm_mu_2;
    double kappa = w1 ? cfg.vm_kappa_1 : cfg.vm_kappa_2;

    constexpr std::int64_t window = 10000;
    std::vector<Scatterer> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
    std::int64_t draws = 0;
    std::int64_t hits = 0;
    while (static_cast<std::int64_t>(out.size()) < count)
    {
        double aod = sample_von_mises(mu, kappa, rng);
        ++draws;
        if (aod > range.lo && aod < range.hi)
        {
            ++hits;
            Scatterer s;
            s.family = wall;
            s.aod = aod;
            s.rho = cfg.rho_wall;
            s.normal = w1 ? Vec2{0.0, -1.0} : Vec2{-1.0, 0.0};
            s.position = w1 ? wall1_point(scene.tx.position, aod) : wall2_point(scene.tx.position, aod);
            s.active = w1 ? s.position.x < 0.0 : s.position.y < 0.0;
            out.push_back(s);
        }
        if (draws % window == 0)
        {
            if (hits * 100 < window)
                throw ConfigError(w1 ? "vm_mu_1" : "vm_mu_2", "AoD distribution incompatible with wall");
            hits = 0;
        }
    }
    return out;
}

std::vector<Scatterer> sample_mobile_scatterers(const Scene &scene, std::int64_t count, Rng &rng)
{
    const auto &cfg = scene.config;
    if (cfg.disc_radius >= cfg.h_m1 || cfg.disc_radius >= cfg.h_m2)
        throw ConfigError("disc_radius", "mobile-scatterer disc intersects a wall");
    Vec2 centre{-cfg.h_m2, -cfg.h_m1};

    std::vector<Scatterer> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
    for (std::int64_t i = 0; i < count; ++i)
    {
        double r = cfg.disc_radius * std::sqrt(rng.uniform());
        double a = 2.0 * pi * rng.uniform();
        Scatterer s;
        s.family = Family::mobile;
        s.rho = cfg.rho_vehicle;
        s.position = centre + unit_from_angle(a) * r;
        s.motion = {s.position, 2.0 * pi * rng.uniform(), cfg.v_m};
        out.push_back(s);
    }
    return out;
}

Scene sample_realization(const Scene &scene, std::uint64_t realization)
{
    const auto &cfg = scene.config;
    Scene out = scene;
    out.realization = realization;
    out.scatterers.clear();

    Rng r1 = Rng::substream(cfg.seed, realization, Stream::wall1);
    Rng r2 = Rng::substream(cfg.seed, realization, Stream::wall2);
    Rng r3 = Rng::substream(cfg.seed, realization, Stream::mobile);
    auto w1 = sample_wall_scatterers(scene, Family::wall1, cfg.n1, r1);
    auto w2 = sample_wall_scatterers(scene, Family::wall2, cfg.n2, r2);
    auto m = sample_mobile_scatterers(scene, cfg.n3, r3);
    out.scatterers.reserve(w1.size() + w2.size() + m.size());
    out.scatterers.insert(out.scatterers.end(), w1.begin(), w1.end());
    out.scatterers.insert(out.scatterers.end(), w2.begin(), w2.end());
    out.scatterers.insert(out.scatterers.end(), m.begin(), m.end());
    return out;
}

} // namespace vvlc
