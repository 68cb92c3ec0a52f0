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

#include "cvtele/gaussian_state.hpp"

#include "cvtele/errors.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <optional>
#include <sstream>

namespace cvtele {

namespace {

double max_asymmetry(const Eigen::Ref<const Eigen::MatrixXd>& m)
{
    return (m - m.transpose()).cwiseAbs().maxCoeff();
}

struct EigenPair {
    double minus, plus;
};

// Roots of x^2 - delta x + det_v = 0, returned as square roots.
EigenPair symplectic_pair(double delta, double det_v, const char* which)
{
    double disc = delta * delta - 4.0 * det_v;
    if (disc < -1e-9) {
        std::ostringstream msg;
        msg << which << " discriminant " << disc << " is negative";
        throw Error(ErrorCode::ComplexEigenvalue, msg.str());
    }
    disc = std::max(disc, 0.0);
    const double plus_sq = 0.5 * (delta + std::sqrt(disc));
    if (plus_sq <= 0.0) {
        return {0.0, 0.0};
    }
    // Product form avoids cancellation when nu_- << nu_+.
    const double minus_sq = det_v / plus_sq;
    return {std::sqrt(std::max(minus_sq, 0.0)), std::sqrt(plus_sq)};
}

// For positive-definite V = L L^T, M = L^T Omega L is antisymmetric with
// eigenvalues +-i nu, so M^T M carries nu^2 twice. This symmetric problem
// stays accurate when the closed-form discriminant cancels (nu_- ~ nu_+,
// e.g. strongly squeezed pure states).
std::optional<EigenPair> williamson_pair(const Matrix4& v)
{
    Eigen::LLT<Matrix4> llt(v);
    if (llt.info() != Eigen::Success) {
        return std::nullopt;
    }
    Matrix4 omega = Matrix4::Zero();
    omega(0, 1) = omega(2, 3) = 1.0;
    omega(1, 0) = omega(3, 2) = -1.0;
    const Matrix4 l = llt.matrixL();
    const Matrix4 m = l.transpose() * omega * l;
    const Vector4 sq = Eigen::SelfAdjointEigenSolver<Matrix4>(m.transpose() * m, Eigen::EigenvaluesOnly).eigenvalues();
    return EigenPair{std::sqrt(std::max(0.5 * (sq(0) + sq(1)), 0.0)), std::sqrt(0.5 * (sq(2) + sq(3)))};
}

} // namespace

TwoModeState TwoModeState::from_covariance(const Matrix4& v)
{
    if (!v.allFinite()) {
        throw Error(ErrorCode::InvalidArgument, "covariance matrix has non-finite entries");
    }
    if (max_asymmetry(v) > kSymmetryTolerance) {
        throw Error(ErrorCode::NonSymmetricBlock, "covariance matrix is not symmetric");
    }
    return TwoModeState(0.5 * (v + v.transpose()));
}

TwoModeState TwoModeState::from_moments(const Matrix4& v, const Vector4& mean)
{
    if (!mean.isZero(0.0)) {
        throw Error(ErrorCode::NonZeroMean, "first moments must vanish");
    }
    return from_covariance(v);
}

CovarianceEntries TwoModeState::entries() const
{
    return CovarianceEntries{
        .q_a = v_(0, 0), .p_a = v_(1, 1), .k_a = v_(0, 1),
        .q_b = v_(2, 2), .p_b = v_(3, 3), .k_b = v_(2, 3),
        .k_q = v_(0, 2), .k_p = v_(1, 3), .k_1 = v_(0, 3), .k_2 = v_(1, 2),
    };
}

TwoModeState make_state(const Block2& a, const Block2& b, const Block2& c)
{
    if (max_asymmetry(a) > kSymmetryTolerance) {
        throw Error(ErrorCode::NonSymmetricBlock, "Alice block A is not symmetric");
    }
    if (max_asymmetry(b) > kSymmetryTolerance) {
        throw Error(ErrorCode::NonSymmetricBlock, "Bob block B is not symmetric");
    }
    Matrix4 v;
    v << 0.5 * (a + a.transpose()), c,
         c.transpose(), 0.5 * (b + b.transpose());
    return TwoModeState::from_covariance(v);
}

TwoModeState vacuum_state()
{
    return TwoModeState::from_covariance(Matrix4::Identity());
}

TwoModeState two_mode_squeezed_state(double r)
{
    const double c = std::cosh(2.0 * r);
    const double s = std::sinh(2.0 * r);
    return make_state(c * Block2::Identity(), c * Block2::Identity(),
                      Eigen::Vector2d(s, -s).asDiagonal().toDenseMatrix());
}

TwoModeState symmetric_state(double q, double p, double k_q, double k_p)
{
    const Block2 local = Eigen::Vector2d(q, p).asDiagonal();
    return make_state(local, local, Eigen::Vector2d(k_q, k_p).asDiagonal().toDenseMatrix());
}

ChannelParams::ChannelParams(double t_a, double t_b) : t_a_(t_a), t_b_(t_b)
{
    const auto in_range = [](double t) { return t >= 0.0 && t <= 1.0; };
    if (!in_range(t_a) || !in_range(t_b)) {
        std::ostringstream msg;
        msg << "transmissivities must lie in [0, 1], got t_A=" << t_a << " t_B=" << t_b;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

SymplecticInvariants symplectic_invariants(const TwoModeState& state)
{
    SymplecticInvariants inv{};
    inv.det_a = state.alice().determinant();
    inv.det_b = state.bob().determinant();
    inv.det_c = state.correlation().determinant();
    inv.det_v = state.covariance().determinant();
    inv.delta = inv.det_a + inv.det_b + 2.0 * inv.det_c;
    inv.delta_tilde = inv.det_a + inv.det_b - 2.0 * inv.det_c;

    const Vector4 flip(1.0, 1.0, 1.0, -1.0);
    const Matrix4 transposed_v = flip.asDiagonal() * state.covariance() * flip.asDiagonal();
    const auto accurate = williamson_pair(state.covariance());
    const auto direct = accurate ? *accurate : symplectic_pair(inv.delta, inv.det_v, "state");
    const auto accurate_tilde = accurate ? williamson_pair(transposed_v) : std::nullopt;
    const auto transposed = accurate_tilde ? *accurate_tilde
                                           : symplectic_pair(inv.delta_tilde, inv.det_v, "partial transpose");
    inv.nu_minus = direct.minus;
    inv.nu_plus = direct.plus;
    inv.nu_tilde_minus = transposed.minus;
    inv.nu_tilde_plus = transposed.plus;
    return inv;
}

bool is_physical(const TwoModeState& state)
{
    return symplectic_invariants(state).nu_minus >= 1.0 - kPhysicalTolerance;
}

TwoModeState apply_attenuation(const TwoModeState& state, const ChannelParams& channel)
{
    const Vector4 l(channel.t_a(), channel.t_a(), channel.t_b(), channel.t_b());
    const Matrix4 shifted = state.covariance() - Matrix4::Identity();
    Matrix4 out = l.asDiagonal() * shifted * l.asDiagonal();
    out += Matrix4::Identity();
    return TwoModeState::from_covariance(0.5 * (out + out.transpose()));
}

Block2 phase_rotation(double theta)
{
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Block2 r;
    r << c, s,
        -s, c;
    return r;
}

TwoModeState local_rotation(const TwoModeState& state, double theta_a, double theta_b)
{
    Matrix4 s = Matrix4::Zero();
    s.topLeftCorner<2, 2>() = phase_rotation(theta_a);
    s.bottomRightCorner<2, 2>() = phase_rotation(theta_b);
    const Matrix4 rotated = s * state.covariance() * s.transpose();
    // Rounding leaves ~1 ulp of asymmetry; restore exact symmetry.
    return TwoModeState::from_covariance(0.5 * (rotated + rotated.transpose()));
}

bool ppt_entangled(const TwoModeState& state)
{
    const auto inv = symplectic_invariants(state);
    if (inv.nu_minus < 1.0 - kPhysicalTolerance) {
        std::ostringstream msg;
        msg << "PPT test requires a physical state (nu_- = " << inv.nu_minus << ")";
        throw Error(ErrorCode::UnphysicalInput, msg.str());
    }
    return inv.nu_tilde_minus < 1.0 - kWitnessTolerance;
}

} // namespace cvtele
