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

#include <cstddef>
#include <cstdint>

namespace cvtele {

/// Monte-Carlo estimate of the teleportation fidelity.
struct McEstimate {
    double fidelity_hat;
    double std_error;
    std::size_t n_samples;
    std::uint64_t seed;
    Vector2 output_mean;            // sample mean of (q_out, p_out)
    Block2 output_covariance;       // unbiased sample covariance
    Block2 covariance_std_error;    // bootstrap standard error per entry
};

struct McOptions {
    std::size_t blocks = 1000;          // independent RNG streams / bootstrap units
    int bootstrap_resamples = 200;
    unsigned threads = 1;
};

/// Simulates the homodyne protocol sample by sample: the shared modes are
/// drawn from N(0, V_t) through a symmetric square root, the input from a
/// coherent state around (2 Re alpha, 2 Im alpha); Bob applies
/// q_out = q_B - g (q_A - q_in), p_out = p_B + g (p_A + p_in).
/// The fidelity is the Gaussian overlap of the fitted output with |g alpha>.
///
/// Bit-identical for a fixed (seed, n, blocks) whatever the thread count.
/// Throws InvalidArgument for n < 1000, UnphysicalInput for unphysical
/// states and NonPositiveDefinite when V_t cannot be factored.
McEstimate mc_fidelity(const TwoModeState& state, const ChannelParams& channel, Gain g,
                       CoherentAmplitude alpha, std::size_t n, std::uint64_t seed,
                       const McOptions& options = {});

struct GridSpec {
    double half_width_sigmas = 8.0;
    std::size_t points_per_axis = 801;  // odd, so the target mean is a node
};

/// Trapezoid-rule overlap 4 pi * integral W_beta W_out dq dp, with W
/// normalised Wigner densities (the prefactor is 4 pi because vacuum
/// variance is 1). W_out has mean g x_alpha and covariance E - I.
/// Throws NonPositiveOutputCovariance if E - I has an eigenvalue below -1e-9
/// (or is singular) and InvalidArgument for an even or tiny grid.
double grid_overlap_fidelity(const TwoModeState& state, const ChannelParams& channel, Gain g,
                             CoherentAmplitude alpha, const GridSpec& grid = {});

} // namespace cvtele
