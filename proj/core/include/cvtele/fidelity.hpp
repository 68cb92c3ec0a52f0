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

#include "cvtele/gaussian_state.hpp"

namespace cvtele {

/// Classical-channel gain g >= 0 applied by Bob to Alice's outcomes.
class Gain {
public:
    /// Throws InvalidArgument for negative or non-finite g.
    explicit Gain(double g);
    double value() const { return g_; }

private:
    double g_;
};

/// Coherent amplitude alpha; quadrature mean (2 Re alpha, 2 Im alpha).
struct CoherentAmplitude {
    double re = 0.0;
    double im = 0.0;

    Vector2 quadratures() const { return {2.0 * re, 2.0 * im}; }
    CoherentAmplitude scaled(double factor) const { return {factor * re, factor * im}; }
};

/// E = (1 + g^2) I + g^2 Z A_t Z - g (Z C_t + C_t^T Z) + B_t, built from an
/// already attenuated state.
Block2 build_e(const TwoModeState& attenuated, Gain g);

/// Average fidelity 2 / sqrt(det E) for a uniform coherent-state alphabet.
/// Throws DegenerateE when det E <= 0.
double mean_fidelity(const TwoModeState& state, const ChannelParams& channel, Gain g);

/// Fidelity of the output for input alpha against an arbitrary target beta.
double transfer_fidelity(CoherentAmplitude alpha, CoherentAmplitude beta,
                         const TwoModeState& state, const ChannelParams& channel, Gain g);

/// Fidelity for input alpha against the protocol target beta = g alpha.
double pointwise_fidelity(CoherentAmplitude alpha, const TwoModeState& state,
                          const ChannelParams& channel, Gain g);

/// det E expanded in the pre-attenuation entries of V and (g, t_A, t_B),
/// without assembling E.
double det_e_expanded(const TwoModeState& state, const ChannelParams& channel, Gain g);

/// Measure-and-prepare threshold 1 / (1 + g^2).
double classical_threshold(Gain g);

/// mean_fidelity > classical_threshold + kWitnessTolerance.
bool is_quantum(const TwoModeState& state, const ChannelParams& channel, Gain g);

} // namespace cvtele
