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

#include "cvtele/witness.hpp"

#include "cvtele/errors.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace cvtele {

namespace {

struct Weights {
    double ga;   // g t_A
    double tb;   // t_B
    double ga2;
    double tb2;
    double norm() const { return ga2 + tb2; }
};

Weights weights(const ChannelParams& channel, Gain g)
{
    const double ga = g.value() * channel.t_a();
    const double tb = channel.t_b();
    return {ga, tb, ga * ga, tb * tb};
}

constexpr double kLogGainMin = -6.0;
constexpr double kLogGainMax = 6.0;
constexpr int kBracketPoints = 241;
constexpr double kGoldenTolerance = 1e-8;

double ratio_at(const TwoModeState& state, const ChannelParams& channel, double g)
{
    const Gain gain(g);
    return mean_fidelity(state, channel, gain) / classical_threshold(gain);
}

} // namespace

EprVariances epr_variances(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    const auto v = state.entries();
    const auto w = weights(channel, g);
    return {
        w.ga2 * v.q_a + w.tb2 * v.q_b - 2.0 * w.ga * w.tb * v.k_q,
        w.ga2 * v.p_a + w.tb2 * v.p_b + 2.0 * w.ga * w.tb * v.k_p,
    };
}

double w_sum(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    const auto var = epr_variances(state, channel, g);
    return var.var_u + var.var_v - 2.0 * weights(channel, g).norm();
}

double w_prod(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    const auto var = epr_variances(state, channel, g);
    const double n = weights(channel, g).norm();
    return var.var_u * var.var_v - n * n;
}

double w_all(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    const auto v = state.entries();
    const auto w = weights(channel, g);
    const double cross = 2.0 * w.ga * w.tb;
    const double sum_bracket = w.ga2 * (v.trace_a() - 2.0) + w.tb2 * (v.trace_b() - 2.0)
                             - cross * (v.k_q - v.k_p);
    const double q_bracket = w.ga2 * (v.q_a - 1.0) + w.tb2 * (v.q_b - 1.0) - cross * v.k_q;
    const double p_bracket = w.ga2 * (v.p_a - 1.0) + w.tb2 * (v.p_b - 1.0) + cross * v.k_p;
    const double gv = g.value();
    return 2.0 * (1.0 + gv * gv) * sum_bracket + q_bracket * p_bracket;
}

double w_rob(const TwoModeState& state)
{
    const auto v = state.entries();
    const double diff = v.k_q - v.k_p;
    return (v.trace_a() - 2.0) * (v.trace_b() - 2.0) - diff * diff;
}

double w_full(const TwoModeState& state)
{
    const auto v = state.entries();
    const Block2 c = state.correlation();
    return (v.trace_a() - 2.0) * (v.trace_b() - 2.0) - (c.transpose() * c).trace()
         + 2.0 * c.determinant();
}

DuanResult duan_check(const TwoModeState& state, double eta)
{
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        std::ostringstream msg;
        msg << "eta must be positive, got " << eta;
        throw Error(ErrorCode::InvalidEta, msg.str());
    }
    const auto v = state.entries();
    const double e2 = eta * eta;
    const double inv_e2 = 1.0 / e2;
    const double var_u = e2 * v.q_a + inv_e2 * v.q_b - 2.0 * v.k_q;
    const double var_v = e2 * v.p_a + inv_e2 * v.p_b + 2.0 * v.k_p;
    DuanResult out{var_u + var_v, 2.0 * (e2 + inv_e2), false};
    out.satisfied = out.lhs < out.rhs - kWitnessTolerance;
    return out;
}

OptimalGain optimal_gain(const TwoModeState& state, const ChannelParams& channel)
{
    if (!(channel.t_a() > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "optimal gain needs t_A > 0");
    }
    const auto v = state.entries();
    const double excess = v.trace_a() - 2.0;
    if (std::abs(excess) < 1e-12) {
        throw Error(ErrorCode::DegenerateAlice,
                    "tr A = 2: w_sum is linear in g and has no interior minimum");
    }
    const double g = channel.t_b() * (v.k_q - v.k_p) / (channel.t_a() * excess);
    return {g, g < 0.0};
}

GainSearchResult maximize_fidelity_ratio(const TwoModeState& state, const ChannelParams& channel)
{
    const auto ratio_log = [&](double x) { return ratio_at(state, channel, std::exp(x)); };

    const double step = (kLogGainMax - kLogGainMin) / (kBracketPoints - 1);
    int best_k = 0;
    double best = -1.0;
    for (int k = 0; k < kBracketPoints; ++k) {
        const double r = ratio_log(kLogGainMin + step * k);
        if (r > best) {
            best = r;
            best_k = k;
        }
    }

    double lo = kLogGainMin + step * std::max(best_k - 1, 0);
    double hi = kLogGainMin + step * std::min(best_k + 1, kBracketPoints - 1);
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = ratio_log(x1);
    double f2 = ratio_log(x2);
    while (hi - lo > kGoldenTolerance) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = ratio_log(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = ratio_log(x1);
        }
    }

    GainSearchResult result{std::exp(kLogGainMin + step * best_k), best};
    const auto consider = [&](double g) {
        const double r = ratio_at(state, channel, g);
        if (r > result.ratio) {
            result = {g, r};
        }
    };
    consider(std::exp(0.5 * (lo + hi)));

    // Seed: the w_sum minimiser, when it is an admissible gain.
    if (channel.t_a() > 0.0) {
        const auto v = state.entries();
        if (std::abs(v.trace_a() - 2.0) >= 1e-12) {
            const auto g_min = optimal_gain(state, channel);
            if (!g_min.out_of_domain && g_min.value > 0.0 && std::isfinite(g_min.value)) {
                consider(g_min.value);
            }
        }
    }
    return result;
}

bool quantum_with_tuned_gain(const TwoModeState& state, const ChannelParams& channel)
{
    return maximize_fidelity_ratio(state, channel).ratio > 1.0 + kWitnessTolerance;
}

std::string_view to_string(Region region) noexcept
{
    switch (region) {
    case Region::Unphysical: return "UNPHYS";
    case Region::Separable: return "SEP";
    case Region::RobustQuantum: return "I";
    case Region::FragileQuantum: return "II";
    case Region::EntangledFragile: return "III";
    case Region::EntangledRobustable: return "V";
    }
    return "UNPHYS";
}

std::optional<Region> parse_region(std::string_view label) noexcept
{
    static constexpr std::array regions = {
        Region::Unphysical, Region::Separable, Region::RobustQuantum,
        Region::FragileQuantum, Region::EntangledFragile, Region::EntangledRobustable,
    };
    for (const Region r : regions) {
        if (to_string(r) == label) {
            return r;
        }
    }
    return std::nullopt;
}

Region classify(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    if (!is_physical(state)) {
        return Region::Unphysical;
    }
    if (!ppt_entangled(state)) {
        return Region::Separable;
    }
    const bool robust = w_rob(state) < -kWitnessTolerance;
    if (robust && w_sum(state, channel, g) < -kWitnessTolerance) {
        return Region::RobustQuantum;
    }
    if (is_quantum(state, channel, g)) {
        return Region::FragileQuantum;
    }
    return robust ? Region::EntangledRobustable : Region::EntangledFragile;
}

WitnessReport witness_report(const TwoModeState& state, const ChannelParams& channel, Gain g)
{
    const auto var = epr_variances(state, channel, g);
    WitnessReport report{};
    report.w_all = w_all(state, channel, g);
    report.w_sum = w_sum(state, channel, g);
    report.w_prod = w_prod(state, channel, g);
    report.w_rob = w_rob(state);
    report.w_full = w_full(state);
    report.var_u = var.var_u;
    report.var_v = var.var_v;
    report.fidelity = mean_fidelity(state, channel, g);
    report.cft = classical_threshold(g);
    if (channel.t_b() > 0.0) {
        report.eta = std::sqrt(g.value() * channel.t_a() / channel.t_b());
    }
    return report;
}

} // namespace cvtele
