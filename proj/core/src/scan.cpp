// Copyright 2026 The cvtele Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvtele/scan.hpp"

#include "cvtele/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <string>
#include <ostream>
#include <thread>

namespace cvtele {

namespace {

void require_steps(std::size_t n)
{
    if (n < 2) {
        throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 steps per axis");
    }
}

// Each index writes only its own slot, so any schedule gives the same output.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < count; i += threads) {
                        fn(i);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

} // namespace

double Axis::at(std::size_t i) const
{
    if (i + 1 == steps) {
        return max;
    }
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

double transmissivity_at(std::size_t i, std::size_t n)
{
    return static_cast<double>(i + 1) / static_cast<double>(n);
}

RegionGrid region_scan(const SymmetricFamilyParams& family, const ChannelParams& channel, Gain g,
                       std::size_t n, unsigned threads)
{
    require_steps(n);
    RegionGrid grid{{-1.0, 1.0, n}, {-1.0, 1.0, n}, std::vector<Region>(n * n)};
    parallel_for(n * n, threads, [&](std::size_t idx) {
        const std::size_t i = idx / n;
        const std::size_t j = idx % n;
        const TwoModeState state = family.state_at(grid.kq_axis.at(i), grid.kp_axis.at(j));
        Region label = Region::Unphysical;
        try {
            label = classify(state, channel, g);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ComplexEigenvalue) {
                throw;
            }
        }
        grid.labels[idx] = label;
    });
    return grid;
}

SurfaceGrid fidelity_surface(const TwoModeState& state, Gain g, std::size_t n, unsigned threads)
{
    require_steps(n);
    SurfaceGrid grid{n, std::vector<SurfaceCell>(n * n)};
    const double cft = classical_threshold(g);
    parallel_for(n * n, threads, [&](std::size_t idx) {
        const ChannelParams channel(transmissivity_at(idx / n, n), transmissivity_at(idx % n, n));
        const double f = mean_fidelity(state, channel, g);
        grid.cells[idx] = {channel.t_a(), channel.t_b(), f, cft, f > cft + kWitnessTolerance};
    });
    return grid;
}

std::vector<GainSample> gain_sweep(const TwoModeState& state, const ChannelParams& channel,
                                   const GainRange& range)
{
    require_steps(range.steps);
    if (!(range.g_min >= 0.0) || !(range.g_max > range.g_min)) {
        throw Error(ErrorCode::InvalidArgument, "gain range must satisfy 0 <= g_min < g_max");
    }
    const Axis axis{range.g_min, range.g_max, range.steps};
    std::vector<GainSample> out;
    out.reserve(range.steps);
    for (std::size_t i = 0; i < range.steps; ++i) {
        const Gain g(axis.at(i));
        const double f = mean_fidelity(state, channel, g);
        const double cft = classical_threshold(g);
        out.push_back({g.value(), f, cft, w_sum(state, channel, g), f > cft + kWitnessTolerance});
    }
    return out;
}

bool RobustnessGrid::all_quantum() const
{
    return std::all_of(cells.begin(), cells.end(), [](const RobustnessCell& c) { return c.quantum; });
}

RobustnessGrid robustness_sweep(const TwoModeState& state, std::size_t n, unsigned threads)
{
    require_steps(n);
    RobustnessGrid grid{n, std::vector<RobustnessCell>(n * n)};
    parallel_for(n * n, threads, [&](std::size_t idx) {
        const ChannelParams channel(transmissivity_at(idx / n, n), transmissivity_at(idx % n, n));
        const auto best = maximize_fidelity_ratio(state, channel);
        grid.cells[idx] = {channel.t_a(), channel.t_b(), best.gain, best.ratio,
                           best.ratio > 1.0 + kWitnessTolerance};
    });
    return grid;
}

void write_region_csv(std::ostream& out, const RegionGrid& grid)
{
    out << "kq_bar,kp_bar,region\n";
    for (std::size_t i = 0; i < grid.kq_axis.steps; ++i) {
        for (std::size_t j = 0; j < grid.kp_axis.steps; ++j) {
            out << fmt(grid.kq_axis.at(i)) << ',' << fmt(grid.kp_axis.at(j)) << ','
                << to_string(grid.at(i, j)) << '\n';
        }
    }
}

void write_surface_csv(std::ostream& out, const SurfaceGrid& grid)
{
    out << "ta,tb,fidelity,cft,quantum\n";
    for (const auto& c : grid.cells) {
        out << fmt(c.t_a) << ',' << fmt(c.t_b) << ',' << fmt(c.fidelity) << ',' << fmt(c.cft) << ','
            << (c.quantum ? 1 : 0) << '\n';
    }
}

void write_gain_csv(std::ostream& out, const std::vector<GainSample>& samples)
{
    out << "g,fidelity,cft,w_sum,quantum\n";
    for (const auto& s : samples) {
        out << fmt(s.g) << ',' << fmt(s.fidelity) << ',' << fmt(s.cft) << ',' << fmt(s.w_sum) << ','
            << (s.quantum ? 1 : 0) << '\n';
    }
}

void write_robustness_csv(std::ostream& out, const RobustnessGrid& grid)
{
    out << "ta,tb,best_g,ratio,quantum\n";
    for (const auto& c : grid.cells) {
        out << fmt(c.t_a) << ',' << fmt(c.t_b) << ',' << fmt(c.best_gain) << ',' << fmt(c.best_ratio)
            << ',' << (c.quantum ? 1 : 0) << '\n';
    }
}

} // namespace cvtele
