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


#include <gtest/gtest.h>

#include "vvlc/config.hpp"

using namespace vvlc;

TEST(Config, EmptyDocumentGivesDefaults)
{
    EXPECT_EQ(parse_config(""), ScenarioConfig{});
    EXPECT_EQ(parse_config("# only a comment\n\n   \n"), ScenarioConfig{});
}

TEST(Config, DegreeSuffix)
{
    EXPECT_DOUBLE_EQ(parse_config("fov_deg = 80").fov, 80.0 * pi / 180.0);
    EXPECT_DOUBLE_EQ(parse_config("gamma_r_deg = 90\n").gamma_r, pi / 2.0);
    EXPECT_DOUBLE_EQ(parse_config("fov = 1.2").fov, 1.2);
}

TEST(Config, ParsesValuesAndComments)
{
    auto c = parse_config("h_t1 = 25   # metres\nn3=7\nseed = 18446744073709551615\nbin_width = 2e-9\n");
    EXPECT_EQ(c.h_t1, 25.0);
    EXPECT_EQ(c.n3, 7);
    EXPECT_EQ(c.seed, 18446744073709551615ULL);
    EXPECT_EQ(c.bin_width, 2e-9);
}

TEST(Config, DomainErrorNamesField)
{
    try
    {
        parse_config("rho_wall = 1.5");
        FAIL();
    }
    catch (const ConfigError &e)
    {
        EXPECT_EQ(e.field(), "rho_wall");
    }
}

TEST(Config, SyntaxErrorsCarryLineNumber)
{
    auto line_of = [](const char *text) {
        try
        {
            parse_config(text);
        }
        catch (const ConfigError &e)
        {
            return std::string(e.what());
        }
        return std::string("accepted");
    };
    EXPECT_NE(line_of("alpha = 1\nthis is wrong\n").find("line 2"), std::string::npos);
    EXPECT_NE(line_of("\n\nalhpa = 1\n").find("line 3"), std::string::npos);
    EXPECT_NE(line_of("alhpa = 1\n").find("unknown key"), std::string::npos);
    EXPECT_NE(line_of("alpha = one\n").find("line 1"), std::string::npos);
    EXPECT_NE(line_of("alpha = 1\nalpha = 2\n").find("duplicate"), std::string::npos);
    EXPECT_NE(line_of("fov = 1\nfov_deg = 60\n").find("duplicate"), std::string::npos);
    EXPECT_NE(line_of("h_t1_deg = 3\n").find("unknown key"), std::string::npos);
    EXPECT_NE(line_of("n1 = 2.5\n").find("line 1"), std::string::npos);
    EXPECT_NE(line_of("= 3\n").find("line 1"), std::string::npos);
}

TEST(Config, OverridesApplyAfterFile)
{
    ScenarioConfig c = parse_config("v_t = 5\n");
    c = apply_overrides(c, {"v_t=6", "fov_deg=60", "n1 = 3"});
    EXPECT_EQ(c.v_t, 6.0);
    EXPECT_DOUBLE_EQ(c.fov, pi / 3.0);
    EXPECT_EQ(c.n1, 3);
    EXPECT_THROW(apply_overrides(c, {"novalue"}), ConfigError);
    EXPECT_THROW(apply_overrides(c, {"rho_vehicle=2"}), ConfigError);
}

TEST(Config, CanonicalRoundTrip)
{
    ScenarioConfig c;
    c.fov = 1.0 / 3.0;
    c.seed = 77;
    c.vm_mu_2 = -0.1234567890123456789;
    c.n2 = 13;
    EXPECT_EQ(parse_config(canonical_text(c)), c);
    EXPECT_EQ(canonical_text(c), canonical_text(parse_config(canonical_text(c))));
    EXPECT_EQ(fnv1a64(canonical_text(c)), fnv1a64(canonical_text(c)));
    ScenarioConfig d = c;
    d.seed = 78;
    EXPECT_NE(fnv1a64(canonical_text(c)), fnv1a64(canonical_text(d)));
}

TEST(Config, Fnv1aReferenceVectors)
{
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(Config, FormatDoubleRoundTrips)
{
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -94.7, 9.6756038344984e-10})
    {
        std::string s = format_double(v);
        EXPECT_EQ(std::stod(s), v) << s;
    }
    EXPECT_EQ(format_double(0.5), "0.5");
}
