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
#include <span>
#include <vector>

#include "vvlc/cir.hpp"

namespace vvlc
{

/// Sum of tap amplitudes.
double dc_gain(const ImpulseResponse &cir);
double dc_gain(std::span<const PathTap> taps);

/// -10 log10(h0), the loss-signed convention. Throws for h0 <= 0.
double optical_gain_db(double h0);
/// 10 log10(h0), the signed convention used for reported gain.
double gain_db(double h0);

/// Power-weighted (a^2) mean delay and RMS spread. Both throw GeometryError
/// when no tap carries power.
double mean_excess_delay(const ImpulseResponse &cir);
double rms_delay_spread(const ImpulseResponse &cir);

struct DelayMoments
{
    double mean = 0.0;
    double rms = 0.0;
};

DelayMoments delay_moments(std::span<const PathTap> taps);

struct ChannelStats
{
    double dc_gain = 0.0;
    double gain_db = 0.0; // 10 log10 H(0)
    double loss_db = 0.0; // -10 log10 H(0)
    double mean_excess_delay = 0.0;
    double rms_delay_spread = 0.0;
    double max_bit_rate = 0.0; // 1 / (10 D_rms); +inf when D_rms = 0

    bool operator==(const ChannelStats &) const = default;
};

ChannelStats channel_stats(const ImpulseResponse &cir);

/// Streaming central moments; merge() combines partial results exactly
/// (up to rounding) so chunks can be reduced in any grouping.
class Moments
{
  public:
    void add(double x);
    void merge(const Moments &other);

    std::uint64_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const; // unbiased
    double stddev() const;
    double skewness() const;        // g1; 0 for zero variance
    double excess_kurtosis() const; // g2; 0 for zero variance

  private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double m3_ = 0.0;
    double m4_ = 0.0;
};

struct Histogram
{
    std::vector<double> edges; // size = counts.size() + 1
    std::vector<std::uint64_t> counts;
};

/// Freedman-Diaconis binning; a single bin when the IQR or range is zero.
Histogram histogram(std::span<const double> samples);

/// Linear-interpolation quantile of sorted data, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

struct DistributionSummary
{
    std::uint64_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    double min = 0.0;
    double max = 0.0;
    Histogram hist;
};

DistributionSummary describe(std::span<const double> samples);

struct MonteCarloSummary
{
    std::vector<ChannelStats> samples;
    DistributionSummary gain_db;
    DistributionSummary rms_delay_spread;
};

/// Throws ConfigError for fewer than two samples.
MonteCarloSummary summarize(std::vector<ChannelStats> samples);

} // namespace vvlc
