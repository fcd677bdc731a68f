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


#include "vvlc/metrics.hpp"

#include <algorithm>
#include <limits>

namespace vvlc
{

double dc_gain(std::span<const PathTap> taps)
{
    double sum = 0.0;
    for (const auto &tap : taps)
        sum += tap.amplitude;
    return sum;
}

double dc_gain(const ImpulseResponse &cir) { return dc_gain(std::span<const PathTap>(cir.taps)); }

double optical_gain_db(double h0)
{
    if (!(h0 > 0.0))
        throw GeometryError("no received power");
    return -10.0 * std::log10(h0);
}

double gain_db(double h0) { return -optical_gain_db(h0); }

DelayMoments delay_moments(std::span<const PathTap> taps)
{
    // Weighted single-pass update (West 1979).
    double wsum = 0.0;
    double mean = 0.0;
    double s = 0.0;
    for (const auto &tap : taps)
    {
        double w = tap.amplitude * tap.amplitude;
        if (w <= 0.0)
            continue;
        wsum += w;
        double d = tap.delay - mean;
        mean += (w / wsum) * d;
        s += w * d * (tap.delay - mean);
    }
    if (!(wsum > 0.0))
        throw GeometryError("no received power");
    return {mean, std::sqrt(std::max(s / wsum, 0.0))};
}

double mean_excess_delay(const ImpulseResponse &cir) { return delay_moments(cir.taps).mean; }

double rms_delay_spread(const ImpulseResponse &cir) { return delay_moments(cir.taps).rms; }

ChannelStats channel_stats(const ImpulseResponse &cir)
{
    ChannelStats s;
    s.dc_gain = dc_gain(cir);
    s.gain_db = gain_db(s.dc_gain);
    s.loss_db = optical_gain_db(s.dc_gain);
    auto d = delay_moments(cir.taps);
    s.mean_excess_delay = d.mean;
    s.rms_delay_spread = d.rms;
    s.max_bit_rate = d.rms > 0.0 ? 1.0 / (10.0 * d.rms) : std::numeric_limits<double>::infinity();
    return s;
}

void Moments::add(double x)
{
    Moments one;
    one.n_ = 1;
    one.mean_ = x;
    merge(one);
}

void Moments::merge(const Moments &o)
{
    if (o.n_ == 0)
        return;
    if (n_ == 0)
    {
        *this = o;
        return;
    }
    // Pebay (2008) pairwise update of central moment sums.
    double na = static_cast<double>(n_);
    double nb = static_cast<double>(o.n_);
    double n = na + nb;
    double d = o.mean_ - mean_;
    double d_n = d / n;
    double d2 = d * d_n * na * nb; // d^2 na nb / n

    double m4 = m4_ + o.m4_ + d2 * d_n * d_n * (na * na - na * nb + nb * nb) +
                6.0 * d_n * d_n * (na * na * o.m2_ + nb * nb * m2_) + 4.0 * d_n * (na * o.m3_ - nb * m3_);
    double m3 = m3_ + o.m3_ + d2 * d_n * (na - nb) + 3.0 * d_n * (na * o.m2_ - nb * m2_);
    double m2 = m2_ + o.m2_ + d2;

    n_ += o.n_;
    mean_ += d_n * nb;
    m2_ = m2;
    m3_ = m3;
    m4_ = m4;
}

double Moments::variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }

double Moments::stddev() const { return std::sqrt(variance()); }

double Moments::skewness() const
{
    if (n_ < 2 || !(m2_ > 0.0))
        return 0.0;
    return std::sqrt(static_cast<double>(n_)) * m3_ / std::pow(m2_, 1.5);
}

double Moments::excess_kurtosis() const
{
    if (n_ < 2 || !(m2_ > 0.0))
        return 0.0;
    return static_cast<double>(n_) * m4_ / (m2_ * m2_) - 3.0;
}

double quantile_sorted(std::span<const double> sorted, double q)
{
    if (sorted.empty())
        throw ConfigError("samples", "quantile of empty data");
    double pos = q * static_cast<double>(sorted.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(pos));
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Histogram histogram(std::span<const double> samples)
{
    Histogram h;
    if (samples.empty())
        return h;
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    double lo = sorted.front();
    double hi = sorted.back();
    double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
    std::size_t bins = 1;
    if (iqr > 0.0 && hi > lo)
    {
        double width = 2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
        bins = static_cast<std::size_t>(std::ceil((hi - lo) / width));
        bins = std::clamp<std::size_t>(bins, 1, sorted.size());
    }
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    h.edges.back() = hi;
    h.counts.assign(bins, 0);
    for (double x : sorted)
    {
        std::size_t i = bins == 1 ? 0
                                  : static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
        ++h.counts[std::min(i, bins - 1)];
    }
    return h;
}

DistributionSummary describe(std::span<const double> samples)
{
    DistributionSummary d;
    Moments m;
    for (double x : samples)
        m.add(x);
    d.count = m.count();
    d.mean = m.mean();
    d.stddev = m.stddev();
    d.skewness = m.skewness();
    d.excess_kurtosis = m.excess_kurtosis();
    if (!samples.empty())
    {
        auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
        d.min = *mn;
        d.max = *mx;
    }
    d.hist = histogram(samples);
    return d;
}

MonteCarloSummary summarize(std::vector<ChannelStats> samples)
{
    if (samples.size() < 2)
        throw ConfigError("realizations", "summary needs at least 2 samples");
    MonteCarloSummary s;
    std::vector<double> g;
    std::vector<double> r;
    g.reserve(samples.size());
    r.reserve(samples.size());
    for (const auto &c : samples)
    {
        g.push_back(c.gain_db);
        r.push_back(c.rms_delay_spread);
    }
    s.gain_db = describe(g);
    s.rms_delay_spread = describe(r);
    s.samples = std::move(samples);
    return s;
}

} // namespace vvlc
