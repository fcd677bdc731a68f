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


#include "vvlc/config.hpp"

#include <array>
#include <charconv>
#include <set>
#include <span>
#include <variant>

namespace vvlc
{

namespace
{

using Member = std::variant<double ScenarioConfig::*, std::int64_t ScenarioConfig::*, std::uint64_t ScenarioConfig::*>;

struct Field
{
    std::string_view name;
    Member member;
    bool angle = false;
};

std::span<const Field> fields()
{
    using C = ScenarioConfig;
    static const Field table[] = {
        {"alpha", &C::alpha},
        {"area_rx", &C::area_rx},
        {"fov", &C::fov, true},
        {"rho_wall", &C::rho_wall},
        {"rho_vehicle", &C::rho_vehicle},
        {"delta_t", &C::delta_t},
        {"delta_r", &C::delta_r},
        {"gamma_t", &C::gamma_t, true},
        {"gamma_r", &C::gamma_r, true},
        {"v_t", &C::v_t},
        {"v_r", &C::v_r},
        {"v_m", &C::v_m},
        {"h_t1", &C::h_t1},
        {"h_t2", &C::h_t2},
        {"h_r1", &C::h_r1},
        {"h_r2", &C::h_r2},
        {"h_m1", &C::h_m1},
        {"h_m2", &C::h_m2},
        {"n1", &C::n1},
        {"n2", &C::n2},
        {"n3", &C::n3},
        {"vm_kappa_1", &C::vm_kappa_1},
        {"vm_mu_1", &C::vm_mu_1, true},
        {"vm_kappa_2", &C::vm_kappa_2},
        {"vm_mu_2", &C::vm_mu_2, true},
        {"disc_radius", &C::disc_radius},
        {"mobile_heading_std", &C::mobile_heading_std, true},
        {"c", &C::c},
        {"seed", &C::seed},
        {"time_step", &C::time_step},
        {"horizon", &C::horizon},
        {"bin_width", &C::bin_width},
    };
    return table;
}

std::string_view trim(std::string_view s)
{
    const char *ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

constexpr std::string_view deg_suffix = "_deg";

// Resolves a key to its field; sets `degrees` for `_deg` spellings.
const Field &lookup(std::string_view key, bool &degrees)
{
    degrees = false;
    std::string_view base = key;
    if (key.size() > deg_suffix.size() && key.substr(key.size() - deg_suffix.size()) == deg_suffix)
    {
        base = key.substr(0, key.size() - deg_suffix.size());
        degrees = true;
    }
    for (const auto &f : fields())
    {
        if (f.name == base && (!degrees || f.angle))
            return f;
    }
    throw ConfigError(std::string(key), "unknown key");
}

template <class T>
T parse_number(std::string_view key, std::string_view text)
{
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ConfigError(std::string(key), "cannot parse value '" + std::string(text) + "'");
    return value;
}

} // namespace

void set_field(ScenarioConfig &config, std::string_view key, std::string_view value)
{
    key = trim(key);
    value = trim(value);
    bool degrees = false;
    const Field &f = lookup(key, degrees);
    std::visit(
        [&](auto member) {
            using T = std::remove_reference_t<decltype(config.*member)>;
            T v = parse_number<T>(key, value);
            if constexpr (std::is_same_v<T, double>)
            {
                if (!std::isfinite(v))
                    throw ConfigError(std::string(key), "value must be finite");
                if (degrees)
                    v = v * pi / 180.0;
            }
            config.*member = v;
        },
        f.member);
}

ScenarioConfig parse_config(std::string_view text)
{
    ScenarioConfig config;
    std::set<std::string_view> seen;
    std::size_t line_no = 0;
    while (!text.empty())
    {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");

        bool degrees = false;
        const Field *f = nullptr;
        try
        {
            f = &lookup(key, degrees);
            set_field(config, key, value);
        }
        catch (const ConfigError &e)
        {
            throw ConfigError(e.field(), "line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!seen.insert(f->name).second)
            throw ConfigError(std::string(key), "line " + std::to_string(line_no) + ": duplicate key");
    }
    validate(config);
    return config;
}

ScenarioConfig apply_overrides(ScenarioConfig config, const std::vector<std::string> &overrides)
{
    for (const auto &o : overrides)
    {
        auto eq = o.find('=');
        if (eq == std::string::npos)
            throw ConfigError("", "override '" + o + "' is not key=value");
        set_field(config, std::string_view(o).substr(0, eq), std::string_view(o).substr(eq + 1));
    }
    validate(config);
    return config;
}

std::string format_double(double value)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc())
        throw IoError("number formatting failed");
    return std::string(buf.data(), ptr);
}

std::string canonical_text(const ScenarioConfig &config)
{
    std::string out;
    for (const auto &f : fields())
    {
        out += f.name;
        out += " = ";
        std::visit(
            [&](auto member) {
                auto v = config.*member;
                if constexpr (std::is_same_v<decltype(v), double>)
                    out += format_double(v);
                else
                    out += std::to_string(v);
            },
            f.member);
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes)
    {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace vvlc
