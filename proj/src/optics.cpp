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


#include "vvlc/optics.hpp"

namespace vvlc
{

RadiometryParams radiometry(const ScenarioConfig &config) { return {config.alpha, config.area_rx, config.fov}; }

double lambertian_intensity(double phi, double alpha)
{
    if (!(std::abs(phi) <= pi / 2.0))
        throw GeometryError("Lambertian angle outside [-pi/2, pi/2]: " + std::to_string(phi));
    // cos(pi/2) is 6e-17 in double; std::pow keeps that tiny rather than 0.
    return (alpha + 1.0) / (2.0 * pi) * std::pow(std::cos(phi), alpha);
}

int visibility(double theta, double fov) { return (theta >= 0.0 && theta <= fov) ? 1 : 0; }

double effective_area(double theta, const RadiometryParams &params)
{
    if (!visibility(theta, params.fov))
        return 0.0;
    return params.area_rx * std::cos(theta);
}

} // namespace vvlc
