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

#include "cvtele/fidelity.hpp"

#include "cvtele/errors.hpp"

#include <cmath>
#include <sstream>

namespace cvtele {

namespace {

const Block2& z_matrix()
{
    static const Block2 z = Eigen::Vector2d(1.0, -1.0).asDiagonal();
    return z;
}

double checked_det_e(const Block2& e)
{
    const double det = e.determinant();
    if (!(det > 0.0)) {
        std::ostringstream msg;
        msg << "det E = " << det << " is not positive";
        throw Error(ErrorCode::DegenerateE, msg.str());
    }
    return det;
}

} // namespace

Gain::Gain(double g) : g_(g)
{
    if (!std::isfinite(g) || g < 0.0) {
        std::ostringstream msg;
        msg << "gain must be finite and non-negative, got " << g;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

Block2 build_e(const TwoModeState& attenuated, Gain gain)
{
    const double g = gain.value();
    const Block2& z = z_matrix();
    const Block2 a = attenuated.alice();
    const Block2 b = attenuated.bob();
    const Block2 c = attenuated.correlation();
    Block2 e = (1.0 + g * g) * QuadratureConvention::vacuum()
             + g * g * z * a * z.transpose()
             - g * (z * c + c.transpose() * z.transpose())
             + b;
    return 0.5 * (e + e.transpose());
}

double mean_fidelity(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    const Block2 e = build_e(apply_attenuation(state, channel), g);
    return 2.0 / std::sqrt(checked_det_e(e));
}

double transfer_fidelity(CoherentAmplitude alpha, CoherentAmplitude beta,
                         const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    const Block2 e = build_e(apply_attenuation(state, channel), g);
    const double det = checked_det_e(e);
    const Vector2 d = beta.quadratures() - g.value() * alpha.quadratures();
    const double exponent = -0.5 * d.dot(e.inverse() * d);
    return 2.0 * std::exp(exponent) / std::sqrt(det);
}

double pointwise_fidelity(CoherentAmplitude alpha, const TwoModeState& state,
                          const ChannelParams& channel, Gain g)
{
    return transfer_fidelity(alpha, alpha.scaled(g.value()), state, channel, g);
}

double det_e_expanded(const TwoModeState& state, const ChannelParams& channel, Gain gain)
{
    const auto v = state.entries();
    const double g = gain.value();
    const double ga = g * channel.t_a();
    const double tb = channel.t_b();
    const double ga2 = ga * ga;
    const double tb2 = tb * tb;
    const double cross = 2.0 * ga * tb;
    const double one_g2 = 1.0 + g * g;

    const double sum_bracket = ga2 * (v.q_a + v.p_a - 2.0) + tb2 * (v.q_b + v.p_b - 2.0)
                             - cross * (v.k_q - v.k_p);
    const double q_bracket = ga2 * (v.q_a - 1.0) + tb2 * (v.q_b - 1.0) - cross * v.k_q;
    const double p_bracket = ga2 * (v.p_a - 1.0) + tb2 * (v.p_b - 1.0) + cross * v.k_p;
    // Off-diagonal of E; K_1 - K_2 enters once (E_01 = -g (K_1 - K_2) + ...).
    const double off_bracket = ga2 * v.k_a - tb2 * v.k_b + ga * tb * (v.k_1 - v.k_2);

    return 4.0 * one_g2 * one_g2
         + 2.0 * one_g2 * sum_bracket
         + q_bracket * p_bracket
         - off_bracket * off_bracket;
}

double classical_threshold(Gain g)
{
    return 1.0 / (1.0 + g.value() * g.value());
}

bool is_quantum(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    return mean_fidelity(state, channel, g) > classical_threshold(g) + kWitnessTolerance;
}

} // namespace cvtele
