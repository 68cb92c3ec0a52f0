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

#include <optional>
#include <string_view>

namespace cvtele {

/// Variances of u = g t_A q_A - t_B q_B and v = g t_A p_A + t_B p_B, with
/// the attenuation factors carried explicitly on the pre-channel entries.
struct EprVariances {
    double var_u;
    double var_v;
};

EprVariances epr_variances(const TwoModeState& state, const ChannelParams& channel, Gain g);

/// Sufficient for beating the classical threshold when negative.
double w_sum(const TwoModeState& state, const ChannelParams& channel, Gain g);
/// Non-negative (in the canonical basis) implies classical fidelity.
double w_prod(const TwoModeState& state, const ChannelParams& channel, Gain g);
/// Full classical/quantum boundary; negative iff quantum in the canonical basis.
double w_all(const TwoModeState& state, const ChannelParams& channel, Gain g);
/// Gain-optimised robustness witness, independent of channel and gain.
double w_rob(const TwoModeState& state);
/// Basis-free robust-entanglement witness.
double w_full(const TwoModeState& state);

struct DuanResult {
    double lhs;
    double rhs;
    bool satisfied;
};

/// <(d u)^2> + <(d v)^2> < 2 (eta^2 + 1/eta^2) with u = eta q_A - q_B / eta,
/// v = eta p_A + p_B / eta. Throws InvalidEta for eta <= 0.
DuanResult duan_check(const TwoModeState& state, double eta);

struct OptimalGain {
    double value;
    bool out_of_domain;  // value < 0; the raw formula is still reported
};

/// Minimiser of w_sum over g: t_B (K_Q - K_P) / (t_A (tr A - 2)).
/// Throws InvalidArgument for t_A = 0 and DegenerateAlice when tr A = 2.
OptimalGain optimal_gain(const TwoModeState& state, const ChannelParams& channel);

struct GainSearchResult {
    double gain;
    double ratio;  // mean_fidelity / classical_threshold at `gain`
};

/// Maximises F/F_CFT over g by a log-spaced bracket scan on log g in [-6, 6]
/// refined with golden-section search (tolerance 1e-8), also trying g_min.
GainSearchResult maximize_fidelity_ratio(const TwoModeState& state, const ChannelParams& channel);

/// True iff some gain beats the classical threshold for this channel.
bool quantum_with_tuned_gain(const TwoModeState& state, const ChannelParams& channel);

enum class Region {
    Unphysical,
    Separable,
    RobustQuantum,        // I
    FragileQuantum,       // II
    EntangledFragile,     // III
    EntangledRobustable,  // V
};

/// Short labels used in CSV output: UNPHYS, SEP, I, II, III, V.
std::string_view to_string(Region region) noexcept;
std::optional<Region> parse_region(std::string_view label) noexcept;

/// Decision tree: Unphysical, then Separable (PPT), then I if w_sum < 0 and
/// w_rob < 0, II if quantum, V if w_rob < 0, III otherwise.
Region classify(const TwoModeState& state, const ChannelParams& channel, Gain g);

struct WitnessReport {
    double w_all, w_sum, w_prod, w_rob, w_full;
    double var_u, var_v;
    double fidelity;
    double cft;
    std::optional<double> eta;  // sqrt(g t_A / t_B); empty when t_B = 0
};

/// All witnesses for one configuration, evaluated in the basis given.
WitnessReport witness_report(const TwoModeState& state, const ChannelParams& channel, Gain g);

} // namespace cvtele
