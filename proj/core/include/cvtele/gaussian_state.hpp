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

#include <Eigen/Dense>

namespace cvtele {

using Block2 = Eigen::Matrix2d;
using Matrix4 = Eigen::Matrix4d;
using Vector2 = Eigen::Vector2d;
using Vector4 = Eigen::Vector4d;

/// Absolute slack on the smallest symplectic eigenvalue when deciding physicality.
inline constexpr double kPhysicalTolerance = 1e-9;
/// Slack used for every strict witness / eigenvalue inequality. Boundary
/// values fall on the non-strict (classical, separable) side.
inline constexpr double kWitnessTolerance = 1e-12;
/// Per-entry asymmetry accepted for the diagonal blocks and full matrices.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Quadratures obey [q, p] = 2i, so the vacuum (and every coherent state)
/// has the identity as covariance matrix.
struct QuadratureConvention {
    static constexpr double commutator_scale = 2.0;
    static Block2 vacuum() { return Block2::Identity(); }
};

/// Covariance entries by name. A = [[q_a, k_a], [k_a, p_a]],
/// B = [[q_b, k_b], [k_b, p_b]], C = [[k_q, k_1], [k_2, k_p]].
struct CovarianceEntries {
    double q_a, p_a, k_a;
    double q_b, p_b, k_b;
    double k_q, k_p, k_1, k_2;

    double trace_a() const { return q_a + p_a; }
    double trace_b() const { return q_b + p_b; }
};

/// Zero-mean two-mode Gaussian state, ordering (q_A, p_A, q_B, p_B).
///
/// The stored matrix is exactly symmetric. Physicality is not enforced
/// here; see is_physical().
class TwoModeState {
public:
    /// Throws NonSymmetricBlock if any |V_ij - V_ji| exceeds kSymmetryTolerance.
    static TwoModeState from_covariance(const Matrix4& v);
    /// Throws NonZeroMean for any nonzero first moment.
    static TwoModeState from_moments(const Matrix4& v, const Vector4& mean);

    const Matrix4& covariance() const { return v_; }
    Block2 alice() const { return v_.topLeftCorner<2, 2>(); }
    Block2 bob() const { return v_.bottomRightCorner<2, 2>(); }
    Block2 correlation() const { return v_.topRightCorner<2, 2>(); }
    CovarianceEntries entries() const;

    friend bool operator==(const TwoModeState& a, const TwoModeState& b) { return a.v_ == b.v_; }

private:
    explicit TwoModeState(const Matrix4& v) : v_(v) {}
    Matrix4 v_;
};

/// Assembles V = [[A, C], [C^T, B]]. A and B must be symmetric to 1e-12.
TwoModeState make_state(const Block2& a, const Block2& b, const Block2& c);

TwoModeState vacuum_state();
/// Pure two-mode squeezed vacuum: A = B = cosh(2r) I, C = sinh(2r) Z.
TwoModeState two_mode_squeezed_state(double r);
/// A = B = diag(q, p), C = diag(k_q, k_p).
TwoModeState symmetric_state(double q, double p, double k_q, double k_p);

/// Amplitude transmissivities of the two attenuation channels, each in [0, 1].
class ChannelParams {
public:
    ChannelParams() = default;
    /// Throws InvalidArgument outside [0, 1].
    ChannelParams(double t_a, double t_b);

    double t_a() const { return t_a_; }
    double t_b() const { return t_b_; }
    bool is_partial() const { return t_a_ > 0.0 && t_b_ > 0.0; }

private:
    double t_a_ = 1.0;
    double t_b_ = 1.0;
};

struct SymplecticInvariants {
    double det_a, det_b, det_c, det_v;
    double delta;         // det A + det B + 2 det C
    double delta_tilde;   // det A + det B - 2 det C (partial transpose)
    double nu_minus, nu_plus;
    double nu_tilde_minus, nu_tilde_plus;
};

/// Two-mode invariants. nu_+- solve nu^4 - Delta nu^2 + det V = 0; for
/// positive-definite V they are taken from the equivalent symmetric
/// eigenproblem of L^T Omega L (V = L L^T), which avoids the cancellation
/// in the discriminant. Otherwise the closed-form roots are used and
/// ComplexEigenvalue is thrown when Delta^2 - 4 det V < -1e-9 for either
/// the state or its partial transpose.
SymplecticInvariants symplectic_invariants(const TwoModeState& state);

/// nu_- >= 1 - kPhysicalTolerance.
bool is_physical(const TwoModeState& state);

/// V_t = L (V - I) L + I with L = diag(t_A, t_A, t_B, t_B).
TwoModeState apply_attenuation(const TwoModeState& state, const ChannelParams& channel);

/// R(theta) = [[cos, sin], [-sin, cos]].
Block2 phase_rotation(double theta);

/// V' = S V S^T with S = R(theta_a) (+) R(theta_b).
TwoModeState local_rotation(const TwoModeState& state, double theta_a, double theta_b);

/// Simon criterion: nu~_- < 1 - kWitnessTolerance. Throws UnphysicalInput
/// for states that fail is_physical().
bool ppt_entangled(const TwoModeState& state);

} // namespace cvtele
