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

namespace cvtele {

/// Largest |cross term| accepted after canonicalization.
inline constexpr double kCrossTermTolerance = 1e-9;

/// The off-diagonal coupling in det E:
/// (g t_A)^2 K_A - t_B^2 K_B + g t_A t_B (K_1 - K_2), i.e. -E_01.
double cross_term(const TwoModeState& state, const ChannelParams& channel, Gain g);

/// Angle theta such that local_rotation(V, theta, -theta) zeroes the cross
/// term: theta = atan2(N, D) / 2 with N the cross term and
/// D = (E_00 - E_11) / 2 = (g t_A)^2 (Q_A - P_A)/2 + t_B^2 (Q_B - P_B)/2
/// - g t_A t_B (K_Q + K_P).
/// Normalised to (-pi/2, pi/2]; returns 0 when N = D = 0.
double invariance_angle(const TwoModeState& state, const ChannelParams& channel, Gain g);

struct CanonicalBasisResult {
    double theta;
    TwoModeState rotated;
    double residual_cross_term;
};

/// Rotates into the fidelity-preserving basis without cross term. Throws
/// CanonicalizationFailed if the residual exceeds kCrossTermTolerance.
CanonicalBasisResult canonicalize(const TwoModeState& state, const ChannelParams& channel, Gain g);

struct DiagonalCorrelationForm {
    double theta_a;
    double theta_b;
    TwoModeState rotated;  // C diagonal (signed singular values)
};

/// Independent local rotations bringing C to diagonal form. Unlike
/// canonicalize() this does not preserve the teleportation fidelity; it
/// preserves every local-rotation invariant (tr A, tr B, tr C^T C, det C).
DiagonalCorrelationForm diagonalize_correlations(const TwoModeState& state);

} // namespace cvtele
