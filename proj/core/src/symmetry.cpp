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

#include "cvtele/symmetry.hpp"

#include "cvtele/errors.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <sstream>

namespace cvtele {

namespace {

// Angle of a proper rotation in the phase_rotation() convention.
double rotation_angle(const Block2& r)
{
    return std::atan2(r(0, 1), r(0, 0));
}

} // namespace

double cross_term(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    const auto v = state.entries();
    const double ga = g.value() * channel.t_a();
    const double tb = channel.t_b();
    return ga * ga * v.k_a - tb * tb * v.k_b + ga * tb * (v.k_1 - v.k_2);
}

double invariance_angle(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    const auto v = state.entries();
    const double ga = g.value() * channel.t_a();
    const double tb = channel.t_b();
    const double numerator = cross_term(state, channel, g);
    const double denominator = 0.5 * ga * ga * (v.q_a - v.p_a) + 0.5 * tb * tb * (v.q_b - v.p_b)
                             - ga * tb * (v.k_q + v.k_p);
    if (numerator == 0.0 && denominator == 0.0) {
        return 0.0;
    }
    // atan2 lies in [-pi, pi]; fold -pi/2 onto pi/2 to keep (-pi/2, pi/2].
    double theta = 0.5 * std::atan2(numerator, denominator);
    if (theta <= -0.5 * std::numbers::pi) {
        theta += std::numbers::pi;
    }
    return theta;
}

CanonicalBasisResult canonicalize(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    const double theta = invariance_angle(state, channel, g);
    TwoModeState rotated = local_rotation(state, theta, -theta);
    const double residual = cross_term(rotated, channel, g);
    if (!(std::abs(residual) <= kCrossTermTolerance)) {
        std::ostringstream msg;
        msg << "cross term " << residual << " survives rotation by theta=" << theta;
        throw Error(ErrorCode::CanonicalizationFailed, msg.str());
    }
    return {theta, std::move(rotated), residual};
}

DiagonalCorrelationForm diagonalize_correlations(const TwoModeState& state)
{
    const Block2 c = state.correlation();
    Eigen::JacobiSVD<Block2> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Block2 u = svd.matrixU();
    Block2 w = svd.matrixV();
    // Keep both factors in SO(2); a reflection moves into a signed singular value.
    if (u.determinant() < 0.0) {
        u.col(1) *= -1.0;
    }
    if (w.determinant() < 0.0) {
        w.col(1) *= -1.0;
    }
    // C = U S W^T, so R_A = U^T and R_B = W^T make R_A C R_B^T diagonal.
    const double theta_a = rotation_angle(u.transpose());
    const double theta_b = rotation_angle(w.transpose());
    return {theta_a, theta_b, local_rotation(state, theta_a, theta_b)};
}

} // namespace cvtele
