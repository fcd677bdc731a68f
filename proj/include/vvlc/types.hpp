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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace vvlc
{

inline constexpr double pi = std::numbers::pi;

/// Planar vector in the corner frame (metres).
struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr bool operator==(const Vec2 &) const = default;

    double norm() const { return std::hypot(x, y); }
    double angle() const { return std::atan2(y, x); }
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline Vec2 unit_from_angle(double a) { return {std::cos(a), std::sin(a)}; }

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a)
{
    double w = std::remainder(a, 2.0 * pi);
    if (w <= -pi)
        w += 2.0 * pi;
    return w;
}

/// Single-bounce propagation family.
enum class Family
{
    wall1,  // SB-11, reflected by building W1
    wall2,  // SB-12, reflected by building W2
    mobile  // SB-13, reflected by a moving vehicle or pedestrian
};

std::string_view to_string(Family f);

/// Array element. `primary` is p (Tx) or q (Rx); `secondary` is p' or q'.
enum class Element
{
    primary,
    secondary
};

/// Sign applied to the half-spacing correction: +1 for p/q, -1 for p'/q'.
constexpr double element_sign(Element e) { return e == Element::primary ? 1.0 : -1.0; }

std::string_view to_string(Element e, bool tx_side);

enum class ErrorCategory
{
    config,
    geometry,
    io
};

/// Base exception; the category maps to the CLI exit status.
class Error : public std::runtime_error
{
  public:
    Error(ErrorCategory category, const std::string &what)
        : std::runtime_error(what), category_(category)
    {
    }

    ErrorCategory category() const noexcept { return category_; }

  private:
    ErrorCategory category_;
};

class ConfigError : public Error
{
  public:
    ConfigError(std::string field, const std::string &what)
        : Error(ErrorCategory::config, field.empty() ? what : field + ": " + what), field_(std::move(field))
    {
    }

    const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

class GeometryError : public Error
{
  public:
    explicit GeometryError(const std::string &what) : Error(ErrorCategory::geometry, what) {}
};

class IoError : public Error
{
  public:
    explicit IoError(const std::string &what) : Error(ErrorCategory::io, what) {}
};

} // namespace vvlc
