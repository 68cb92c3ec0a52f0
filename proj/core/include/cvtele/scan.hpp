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

#pragma once

#include "cvtele/fidelity.hpp"
#include "cvtele/gaussian_state.hpp"
#include "cvtele/witness.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace cvtele {

/// Symmetric family A = B = diag(Q, P), C = diag(K_Q, K_P), scanned over
/// normalised correlations K_Q / Q and K_P / P in [-1, 1].
struct SymmetricFamilyParams {
    double q = 2.0;
    double p = 2.0;

    TwoModeState state_at(double kq_bar, double kp_bar) const
    {
        return symmetric_state(q, p, kq_bar * q, kp_bar * p);
    }
};

/// Evenly spaced, strictly increasing axis.
struct Axis {
    double min;
    double max;
    std::size_t steps;

    double at(std::size_t i) const;
};

/// Labels stored row-major with the K_Q axis outermost.
struct RegionGrid {
    Axis kq_axis;
    Axis kp_axis;
    std::vector<Region> labels;

    Region at(std::size_t i, std::size_t j) const { return labels[i * kp_axis.steps + j]; }
};

/// Classifies every cell of an n x n grid over [-1, 1]^2. Unphysical cells
/// are labelled, never skipped. Throws InvalidArgument for n < 2.
RegionGrid region_scan(const SymmetricFamilyParams& family, const ChannelParams& channel, Gain g,
                       std::size_t n, unsigned threads = 1);

struct SurfaceCell {
    double t_a;
    double t_b;
    double fidelity;
    double cft;
    bool quantum;
};

/// Row-major with t_A outermost; both axes are {1/n, 2/n, ..., 1}.
struct SurfaceGrid {
    std::size_t steps;
    std::vector<SurfaceCell> cells;

    const SurfaceCell& at(std::size_t i, std::size_t j) const { return cells[i * steps + j]; }
};

/// Transmissivity axis for surface and robustness grids, open at zero.
double transmissivity_at(std::size_t i, std::size_t n);

SurfaceGrid fidelity_surface(const TwoModeState& state, Gain g, std::size_t n, unsigned threads = 1);

struct GainRange {
    double g_min = 0.0;
    double g_max = 4.0;
    std::size_t steps = 401;
};

struct GainSample {
    double g;
    double fidelity;
    double cft;
    double w_sum;
    bool quantum;
};

/// Fidelity, threshold and w_sum along an evenly spaced gain grid.
std::vector<GainSample> gain_sweep(const TwoModeState& state, const ChannelParams& channel,
                                   const GainRange& range);

struct RobustnessCell {
    double t_a;
    double t_b;
    double best_gain;
    double best_ratio;
    bool quantum;  // best_ratio > 1 + kWitnessTolerance
};

struct RobustnessGrid {
    std::size_t steps;
    std::vector<RobustnessCell> cells;

    const RobustnessCell& at(std::size_t i, std::size_t j) const { return cells[i * steps + j]; }
    bool all_quantum() const;
};

/// For every (t_A, t_B) cell, the gain maximising F / F_CFT.
RobustnessGrid robustness_sweep(const TwoModeState& state, std::size_t n, unsigned threads = 1);

// CSV writers, 9 significant digits.
void write_region_csv(std::ostream& out, const RegionGrid& grid);          // kq_bar,kp_bar,region
void write_surface_csv(std::ostream& out, const SurfaceGrid& grid);        // ta,tb,fidelity,cft,quantum
void write_gain_csv(std::ostream& out, const std::vector<GainSample>& s);  // g,fidelity,cft,w_sum,quantum
void write_robustness_csv(std::ostream& out, const RobustnessGrid& grid);  // ta,tb,best_g,ratio,quantum

} // namespace cvtele
