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

struct RadiometryParams
{
    double alpha = 1.0;
    double area_rx = 1e-4;
    double fov = 80.0 * pi / 180.0;
};

RadiometryParams radiometry(const ScenarioConfig &config);

/// Lambertian radiant intensity per unit power, (alpha+1)/(2 pi) cos^alpha.
/// Throws GeometryError for |phi| > pi/2.
double lambertian_intensity(double phi, double alpha);

/// 1 if 0 <= theta <= fov (inclusive), else 0.
int visibility(double theta, double fov);

/// A_R cos(theta) inside the field of view, 0 outside.
double effective_area(double theta, const RadiometryParams &params);

} // namespace vvlc
