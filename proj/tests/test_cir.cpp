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


#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vvlc/metrics.hpp"
#include "vvlc/scatter.hpp"

using namespace vvlc;

namespace
{

Scatterer wall1_at(const Scene &s, double aod)
{
    Scatterer w;
    w.family = Family::wall1;
    w.aod = aod;
    w.rho = s.config.rho_wall;
    w.normal = {0.0, -1.0};
    w.position = wall1_point(s.tx.position, aod);
    return w;
}

Scatterer mobile_at(const ScenarioConfig &c, Vec2 p)
{
    Scatterer m;
    m.family = Family::mobile;
    m.position = p;
    m.rho = c.rho_vehicle;
    m.motion = {p, 0.0, c.v_m};
    return m;
}

} // namespace

TEST(SbTap, SymmetricUnitCosineAmplitude)
{
    // Co-located Tx and Rx both aimed at the scatterer along its normal, so
    // every angle is zero and both segments have length d.
    ScenarioConfig c;
    c.delta_t = c.delta_r = 0.0;
    LinkState l{10.0, 10.0, 10.0, 10.0, pi / 4.0, pi / 4.0, 0.0, 0.0};
    double d = 5.0;
    Vec2 s{-10.0 + d / std::sqrt(2.0), -10.0 + d / std::sqrt(2.0)};
    Scatterer m = mobile_at(c, s);
    PathTap t = sb_tap(l, m, Element::primary, Element::primary, c);
    EXPECT_NEAR(t.amplitude, c.area_rx * c.rho_vehicle / (pi * pi * std::pow(d, 4)), 1e-12 * t.amplitude);
    EXPECT_DOUBLE_EQ(t.delay, 2 * d / c.c);
}

TEST(SbTap, GatedOutsideFieldOfView)
{
    ScenarioConfig c;
    c.fov = 0.1; // disc centre arrives about 0.155 rad off the Rx axis
    Scene s = build_scene(c);
    PathTap t = sb_tap(link_state(s), mobile_at(c, {-8.0, -8.0}), Element::primary, Element::primary, c);
    EXPECT_TRUE(t.gated);
    EXPECT_EQ(t.amplitude, 0.0);
    EXPECT_GT(t.delay, 0.0);
}

TEST(SbTap, WallOneQuarterPiMatchesRayEvaluator)
{
    ScenarioConfig c;
    Scene s = build_scene(c);
    LinkState l = link_state(s);
    // pi/4 lands behind the Rx; a steeper AoD is in front of it.
    for (double aod : {pi / 4.0, 1.0, 1.3})
    {
        for (Element p : {Element::primary, Element::secondary})
        {
            for (Element q : {Element::primary, Element::secondary})
            {
                PathTap t = sb_tap(l, wall1_at(s, aod), p, q, c);
                oracle::Ray r = oracle::wall1_ray(l, aod, element_sign(p), element_sign(q));
                double expected = oracle::tap_amplitude(r, c.rho_wall, c);
                EXPECT_LE(oracle::rel_err(t.amplitude, expected), 1e-12) << aod;
                EXPECT_LE(oracle::rel_err(t.delay, (r.len_elem_tx + r.len_elem_rx) / c.c), 1e-12);
            }
        }
    }
    EXPECT_TRUE(sb_tap(l, wall1_at(s, pi / 4.0), Element::primary, Element::primary, c).back_facing);
    EXPECT_GT(sb_tap(l, wall1_at(s, 1.0), Element::primary, Element::primary, c).amplitude, 0.0);
}

TEST(SbTap, RealizationMatchesRayEvaluator)
{
    ScenarioConfig c;
    Scene s = sample_realization(build_scene(c), 3);
    s = advance(s, 1.3);
    LinkState l = link_state(s);
    for (const auto &sc : s.scatterers)
    {
        PathTap t = sb_tap(l, sc, Element::secondary, Element::primary, c);
        oracle::Ray r = sc.family == Family::wall1   ? oracle::wall1_ray(l, sc.aod, -1, 1)
                        : sc.family == Family::wall2 ? oracle::wall2_ray(l, sc.aod, -1, 1)
                                                     : oracle::mobile_ray(l, sc.position, -1, 1);
        double expected = sc.active ? oracle::tap_amplitude(r, sc.rho, c) : 0.0;
        EXPECT_LE(oracle::rel_err(t.amplitude, expected), 1e-12);
        EXPECT_EQ(t.amplitude == 0.0, !t.contributes() || expected == 0.0);
    }
}

TEST(FamilyCir, EmptyAndSingle)
{
    ScenarioConfig c;
    Scene s = build_scene(c);
    EXPECT_TRUE(family_cir(s, Family::mobile, {}, Element::primary, Element::primary).taps.empty());
    std::vector<Scatterer> one{mobile_at(c, {-8.0, -8.0})};
    auto ir = family_cir(s, Family::mobile, one, Element::primary, Element::secondary);
    ASSERT_EQ(ir.taps.size(), 1u);
    EXPECT_EQ(ir.taps[0], sb_tap(link_state(s), one[0], Element::primary, Element::secondary, c));
    EXPECT_THROW(family_cir(s, Family::wall1, one, Element::primary, Element::primary), GeometryError);
}

TEST(FamilyCir, SumMatchesIndividualTaps)
{
    Scene s = sample_realization(build_scene(ScenarioConfig{}), 1);
    auto fam = family_cirs(s, Element::primary, Element::primary);
    LinkState l = link_state(s);
    long double sum[3] = {0, 0, 0};
    for (const auto &sc : s.scatterers)
        sum[static_cast<int>(sc.family)] += sb_tap(l, sc, Element::primary, Element::primary, s.config).amplitude;
    for (int f = 0; f < 3; ++f)
    {
        EXPECT_EQ(fam[f].taps.size(), 100u);
        EXPECT_LE(oracle::rel_err(dc_gain(fam[f]), static_cast<double>(sum[f])), 1e-12);
        EXPECT_TRUE(std::is_sorted(fam[f].taps.begin(), fam[f].taps.end(),
                                   [](const PathTap &a, const PathTap &b) { return a.delay < b.delay; }));
    }
}

TEST(TotalCir, SuperpositionAndTags)
{
    Scene s = sample_realization(build_scene(ScenarioConfig{}), 2);
    auto fam = family_cirs(s, Element::primary, Element::primary);
    auto total = total_cir(fam[0], fam[1], fam[2]);
    EXPECT_EQ(total.taps.size(), 300u);
    double sum = dc_gain(fam[0]) + dc_gain(fam[1]) + dc_gain(fam[2]);
    EXPECT_LE(oracle::rel_err(dc_gain(total), sum), 1e-12);
    ImpulseResponse empty = fam[0];
    empty.taps.clear();
    ImpulseResponse one = fam[2];
    one.taps.resize(1);
    auto t = total_cir(empty, empty, one);
    ASSERT_EQ(t.taps.size(), 1u);
    EXPECT_EQ(t.taps[0], one.taps[0]);
    EXPECT_EQ(t.taps[0].family, Family::mobile);
}

TEST(TotalCir, MismatchedInputsRejected)
{
    ImpulseResponse a, b;
    b.rx_element = Element::secondary;
    EXPECT_THROW(total_cir(a, a, b), GeometryError);
    b = a;
    b.time = 0.1;
    EXPECT_THROW(total_cir(a, b, a), GeometryError);
}

TEST(TotalCir, MobileFamilyArrivesLast)
{
    Scene s = sample_realization(build_scene(ScenarioConfig{}), 0);
    auto fam = family_cirs(s, Element::primary, Element::primary);
    auto first = [](const ImpulseResponse &ir) {
        for (const auto &t : ir.taps)
            if (t.contributes())
                return t.delay;
        return std::numeric_limits<double>::infinity();
    };
    EXPECT_GT(first(fam[2]), first(fam[0]));
    EXPECT_GT(first(fam[2]), first(fam[1]));
}

TEST(Binning, ConservesTotal)
{
    Scene s = sample_realization(build_scene(ScenarioConfig{}), 0);
    auto ir = link_cir(s, Element::primary, Element::primary);
    for (double w : {1e-12, 1e-10, 1e-9, 5e-9, 1e-6})
    {
        auto b = ir.binned(w);
        double sum = 0.0;
        for (double v : b.values)
            sum += v;
        EXPECT_LE(oracle::rel_err(sum, dc_gain(ir)), 1e-12) << w;
        EXPECT_LE(b.origin, ir.taps.front().delay);
    }
}

TEST(Mimo, DegenerateArrayHasIdenticalEntries)
{
    ScenarioConfig c;
    c.delta_t = c.delta_r = 0.0;
    Scene s = sample_realization(build_scene(c), 0);
    auto m = mimo_matrix(s);
    const auto &ref = m.at(Element::primary, Element::primary).taps;
    for (Element p : {Element::primary, Element::secondary})
    {
        for (Element q : {Element::primary, Element::secondary})
        {
            const auto &taps = m.at(p, q).taps;
            ASSERT_EQ(taps.size(), ref.size());
            for (std::size_t i = 0; i < taps.size(); ++i)
            {
                EXPECT_EQ(taps[i].delay, ref[i].delay);
                EXPECT_EQ(taps[i].amplitude, ref[i].amplitude);
            }
        }
    }
}

TEST(Mimo, SwappingBothSignsMapsPrimaryToSecondary)
{
    Scene s = sample_realization(build_scene(ScenarioConfig{}), 0);
    auto m = mimo_matrix(s);
    // Element sign flips are a half-turn of both headings.
    Scene flipped = s;
    flipped.tx.heading = wrap_angle(s.tx.heading + pi);
    flipped.rx.heading = wrap_angle(s.rx.heading + pi);
    LinkState lf = link_state(flipped);
    LinkState l = link_state(s);
    for (const auto &sc : s.scatterers)
    {
        auto g1 = ray_geometry(l, sc, Element::secondary, Element::secondary);
        auto g2 = ray_geometry(lf, sc, Element::primary, Element::primary);
        EXPECT_NEAR(g1.len_elem_tx, g2.len_elem_tx, 1e-12 * g1.len_elem_tx);
        EXPECT_NEAR(g1.len_elem_rx, g2.len_elem_rx, 1e-12 * g1.len_elem_rx);
    }
    const auto &pq = m.at(Element::primary, Element::primary).taps;
    const auto &pq2 = m.at(Element::secondary, Element::secondary).taps;
    ASSERT_EQ(pq.size(), pq2.size());
    // Same scatterers; each delay moves by at most (delta_t + delta_r) / c.
    std::vector<double> d1(300), d2(300);
    for (const auto &t : pq)
        d1[t.scatterer] = t.delay;
    for (const auto &t : pq2)
        d2[t.scatterer] = t.delay;
    for (std::size_t i = 0; i < 300; ++i)
        EXPECT_LE(std::abs(d1[i] - d2[i]), (s.config.delta_t + s.config.delta_r) / s.config.c * (1 + 1e-9));
}

TEST(Mimo, SingleScattererGivesOneTapPerEntry)
{
    ScenarioConfig c;
    Scene s = build_scene(c);
    s.scatterers.push_back(mobile_at(c, {-8.0, -8.0}));
    auto m = mimo_matrix(s);
    for (const auto &row : m.entries)
        for (const auto &e : row)
            EXPECT_EQ(e.taps.size(), 1u);
}

TEST(Evolve, EmptyGridAndStaticScene)
{
    ScenarioConfig c;
    c.v_t = c.v_r = c.v_m = 0.0;
    Scene s = sample_realization(build_scene(c), 0);
    EXPECT_TRUE(evolve(s, {}).empty());
    auto grid = time_grid(0.5, 2.0);
    auto snaps = evolve(s, grid);
    ASSERT_EQ(snaps.size(), 5u);
    for (const auto &m : snaps)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
            {
                const auto &a = m.entries[i][j].taps;
                const auto &b = snaps.front().entries[i][j].taps;
                ASSERT_EQ(a.size(), b.size());
                for (std::size_t k = 0; k < a.size(); ++k)
                {
                    EXPECT_EQ(a[k].delay, b[k].delay);
                    EXPECT_EQ(a[k].amplitude, b[k].amplitude);
                }
            }
}

TEST(Evolve, GridArithmetic)
{
    auto grid = time_grid(0.1, 4.0);
    ASSERT_EQ(grid.size(), 41u);
    EXPECT_EQ(grid.front(), 0.0);
    EXPECT_DOUBLE_EQ(grid.back(), 4.0);
}

TEST(Evolve, RejectsNonIncreasingGrid)
{
    Scene s = sample_realization(build_scene(ScenarioConfig{}), 0);
    std::vector<double> g{0.0, 0.2, 0.2};
    EXPECT_THROW(evolve(s, g), GeometryError);
}

TEST(Evolve, PropagatesWallCrossing)
{
    Scene s = sample_realization(build_scene(ScenarioConfig{}), 0);
    std::vector<double> g{0.0, 3.0, 6.0};
    EXPECT_THROW(evolve(s, g), GeometryError);
}

TEST(Evolve, ScattererIdentitiesPersist)
{
    Scene s = sample_realization(build_scene(ScenarioConfig{}), 0);
    auto grid = time_grid(0.5, 2.0);
    auto scenes = evolve_scenes(s, grid);
    for (const auto &sn : scenes)
    {
        ASSERT_EQ(sn.scatterers.size(), s.scatterers.size());
        for (std::size_t i = 0; i < s.scatterers.size(); ++i)
        {
            EXPECT_EQ(sn.scatterers[i].family, s.scatterers[i].family);
            EXPECT_EQ(sn.scatterers[i].aod, s.scatterers[i].aod);
        }
    }
}

TEST(Evolve, PowerRisesAndDelayFallsApproachingCorner)
{
    Scene s = sample_realization(build_scene(ScenarioConfig{}), 0);
    auto grid = time_grid(0.1, 4.0);
    double prev_p = 0.0, prev_d = INFINITY;
    for (const auto &m : evolve(s, grid))
    {
        const auto &ir = m.at(Element::primary, Element::primary);
        double p = dc_gain(ir), d = INFINITY;
        for (const auto &t : ir.taps)
            if (t.amplitude > 0.0)
                d = std::min(d, t.delay);
        EXPECT_GE(p, prev_p);
        EXPECT_LE(d, prev_d);
        prev_p = p;
        prev_d = d;
    }
}

TEST(CirProperties, GateSoundness)
{
    for (std::uint64_t k = 0; k < 20; ++k)
    {
        Scene s = sample_realization(build_scene(ScenarioConfig{}), k);
        LinkState l = link_state(s);
        for (const auto &sc : s.scatterers)
        {
            auto g = ray_geometry(l, sc, Element::primary, Element::primary);
            auto t = sb_tap(l, sc, Element::primary, Element::primary, s.config);
            if (g.incidence > s.config.fov)
                EXPECT_EQ(t.amplitude, 0.0);
            EXPECT_GE(t.amplitude, 0.0);
            EXPECT_GT(t.delay, 0.0);
        }
    }
}

TEST(CirProperties, AreaScalesAmplitudesExactly)
{
    ScenarioConfig c;
    Scene s = sample_realization(build_scene(c), 0);
    Scene s2 = s;
    s2.config.area_rx = c.area_rx * 4.0; // power of two keeps scaling exact
    auto a = link_cir(s, Element::primary, Element::secondary);
    auto b = link_cir(s2, Element::primary, Element::secondary);
    ASSERT_EQ(a.taps.size(), b.taps.size());
    for (std::size_t i = 0; i < a.taps.size(); ++i)
        EXPECT_EQ(b.taps[i].amplitude, 4.0 * a.taps[i].amplitude);
}

TEST(CirProperties, SceneScaling)
{
    ScenarioConfig c;
    Scene s = sample_realization(build_scene(c), 0);
    const double k = 2.5;
    Scene big = s;
    big.config.delta_t *= k;
    big.config.delta_r *= k;
    big.tx.position = s.tx.position * k;
    big.rx.position = s.rx.position * k;
    for (auto &sc : big.scatterers)
        sc.position = sc.position * k;
    auto a = link_cir(s, Element::primary, Element::primary);
    auto b = link_cir(big, Element::primary, Element::primary);
    ASSERT_EQ(a.taps.size(), b.taps.size());
    for (std::size_t i = 0; i < a.taps.size(); ++i)
    {
        EXPECT_LE(oracle::rel_err(b.taps[i].delay, k * a.taps[i].delay), 1e-12);
        EXPECT_LE(oracle::rel_err(b.taps[i].amplitude, a.taps[i].amplitude / std::pow(k, 4)), 1e-12);
    }
}
