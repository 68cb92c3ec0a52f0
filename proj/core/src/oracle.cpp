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

#include "cvtele/oracle.hpp"

#include "cvtele/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

namespace cvtele {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Sufficient statistics of output deviations from the target mean.
struct Moments {
    double n = 0.0;
    double sq = 0.0, sp = 0.0;
    double sqq = 0.0, spp = 0.0, sqp = 0.0;

    Moments& operator+=(const Moments& o)
    {
        n += o.n;
        sq += o.sq;
        sp += o.sp;
        sqq += o.sqq;
        spp += o.spp;
        sqp += o.sqp;
        return *this;
    }
};

struct Fit {
    Vector2 mean;   // deviation from target
    Block2 cov;
    double fidelity;
};

Fit fit_moments(const Moments& m)
{
    Fit fit;
    fit.mean = Vector2(m.sq / m.n, m.sp / m.n);
    const double denom = m.n - 1.0;
    fit.cov(0, 0) = (m.sqq - m.n * fit.mean(0) * fit.mean(0)) / denom;
    fit.cov(1, 1) = (m.spp - m.n * fit.mean(1) * fit.mean(1)) / denom;
    fit.cov(0, 1) = fit.cov(1, 0) = (m.sqp - m.n * fit.mean(0) * fit.mean(1)) / denom;
    const Block2 e = fit.cov + Block2::Identity();
    const double exponent = -0.5 * fit.mean.dot(e.inverse() * fit.mean);
    fit.fidelity = 2.0 * std::exp(exponent) / std::sqrt(e.determinant());
    return fit;
}

Matrix4 symmetric_sqrt(const Matrix4& v)
{
    Eigen::SelfAdjointEigenSolver<Matrix4> eig(v);
    if (eig.info() != Eigen::Success) {
        throw Error(ErrorCode::NonPositiveDefinite, "eigen-decomposition of V_t failed");
    }
    Vector4 lambda = eig.eigenvalues();
    const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
    if (lambda.minCoeff() < -1e-9 * scale) {
        std::ostringstream msg;
        msg << "V_t has negative eigenvalue " << lambda.minCoeff();
        throw Error(ErrorCode::NonPositiveDefinite, msg.str());
    }
    lambda = lambda.cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * lambda.asDiagonal() * eig.eigenvectors().transpose();
}

} // namespace

McEstimate mc_fidelity(const TwoModeState& state, const ChannelParams& channel, Gain gain,
                       CoherentAmplitude alpha, std::size_t n, std::uint64_t seed,
                       const McOptions& options)
{
    if (n < 1000) {
        throw Error(ErrorCode::InvalidArgument, "Monte-Carlo needs at least 1000 samples");
    }
    if (options.blocks == 0 || options.bootstrap_resamples < 2) {
        throw Error(ErrorCode::InvalidArgument, "need at least one block and two resamples");
    }
    if (!is_physical(state)) {
        throw Error(ErrorCode::UnphysicalInput, "state fails the bona-fide condition");
    }

    const Matrix4 root = symmetric_sqrt(apply_attenuation(state, channel).covariance());
    const double g = gain.value();
    const Vector2 input_mean = alpha.quadratures();
    const Vector2 target = g * input_mean;

    const std::size_t blocks = std::min(options.blocks, n);
    std::vector<Moments> block_moments(blocks);

    const auto run_block = [&](std::size_t b) {
        const std::size_t count = n / blocks + (b < n % blocks ? 1 : 0);
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(b + 1)));
        std::normal_distribution<double> normal(0.0, 1.0);
        Moments m;
        Vector4 z;
        for (std::size_t i = 0; i < count; ++i) {
            for (int k = 0; k < 4; ++k) {
                z(k) = normal(rng);
            }
            const Vector4 x = root * z;
            const double q_in = input_mean(0) + normal(rng);
            const double p_in = input_mean(1) + normal(rng);
            const double dq = x(2) - g * (x(0) - q_in) - target(0);
            const double dp = x(3) + g * (x(1) + p_in) - target(1);
            m.sq += dq;
            m.sp += dp;
            m.sqq += dq * dq;
            m.spp += dp * dp;
            m.sqp += dq * dp;
        }
        m.n = static_cast<double>(count);
        block_moments[b] = m;
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(blocks)));
    if (threads == 1) {
        for (std::size_t b = 0; b < blocks; ++b) {
            run_block(b);
        }
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t b = t; b < blocks; b += threads) {
                    run_block(b);
                }
            });
        }
    }

    // Reduce in block order so the result does not depend on scheduling.
    Moments total;
    for (const auto& m : block_moments) {
        total += m;
    }
    const Fit fit = fit_moments(total);

    std::mt19937_64 boot_rng(splitmix64(seed ^ 0xB0075724A9ULL));
    std::uniform_int_distribution<std::size_t> pick(0, blocks - 1);
    const int resamples = options.bootstrap_resamples;
    std::vector<double> f(resamples);
    std::vector<Block2> cov(resamples);
    for (int r = 0; r < resamples; ++r) {
        Moments m;
        for (std::size_t b = 0; b < blocks; ++b) {
            m += block_moments[pick(boot_rng)];
        }
        const Fit boot = fit_moments(m);
        f[r] = boot.fidelity;
        cov[r] = boot.cov;
    }

    const auto std_dev = [resamples](auto&& value_of) {
        double mean = 0.0;
        for (int r = 0; r < resamples; ++r) {
            mean += value_of(r);
        }
        mean /= resamples;
        double ss = 0.0;
        for (int r = 0; r < resamples; ++r) {
            const double d = value_of(r) - mean;
            ss += d * d;
        }
        return std::sqrt(ss / (resamples - 1));
    };

    McEstimate est;
    est.fidelity_hat = fit.fidelity;
    est.std_error = std_dev([&](int r) { return f[r]; });
    est.n_samples = n;
    est.seed = seed;
    est.output_mean = fit.mean + target;
    est.output_covariance = fit.cov;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            est.covariance_std_error(i, j) = std_dev([&](int r) { return cov[r](i, j); });
        }
    }
    return est;
}

double grid_overlap_fidelity(const TwoModeState& state, const ChannelParams& channel, Gain gain,
                             CoherentAmplitude alpha, const GridSpec& grid)
{
    if (grid.points_per_axis < 3 || grid.points_per_axis % 2 == 0) {
        throw Error(ErrorCode::InvalidArgument, "points_per_axis must be odd and at least 3");
    }
    if (!(grid.half_width_sigmas > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "half_width_sigmas must be positive");
    }

    const Block2 sigma_out = build_e(apply_attenuation(state, channel), gain) - Block2::Identity();
    Eigen::SelfAdjointEigenSolver<Block2> eig(sigma_out);
    const double lambda_min = eig.eigenvalues().minCoeff();
    if (lambda_min < -1e-9) {
        std::ostringstream msg;
        msg << "output covariance has eigenvalue " << lambda_min;
        throw Error(ErrorCode::NonPositiveOutputCovariance, msg.str());
    }
    if (lambda_min <= 1e-12) {
        throw Error(ErrorCode::NonPositiveOutputCovariance,
                    "output covariance is singular; its Wigner density has no pointwise form");
    }

    const double g = gain.value();
    const Vector2 mean_out = g * alpha.quadratures();
    const Vector2 mean_target = alpha.scaled(g).quadratures();
    const Block2 prec_out = sigma_out.inverse();
    const double norm_out = 1.0 / (2.0 * std::numbers::pi * std::sqrt(sigma_out.determinant()));
    const double norm_target = 1.0 / (2.0 * std::numbers::pi);

    const double sigma_max = std::sqrt(std::max(1.0, eig.eigenvalues().maxCoeff()));
    const Vector2 centre = 0.5 * (mean_out + mean_target);
    const double half = grid.half_width_sigmas * sigma_max + 0.5 * (mean_out - mean_target).cwiseAbs().maxCoeff();
    const std::size_t points = grid.points_per_axis;
    const double h = 2.0 * half / static_cast<double>(points - 1);

    const auto weight = [points](std::size_t i) { return (i == 0 || i == points - 1) ? 0.5 : 1.0; };

    double sum = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double q = centre(0) - half + h * static_cast<double>(i);
        double row = 0.0;
        for (std::size_t j = 0; j < points; ++j) {
            const double p = centre(1) - half + h * static_cast<double>(j);
            const Vector2 x(q, p);
            const Vector2 d_out = x - mean_out;
            const Vector2 d_target = x - mean_target;
            const double w_out = norm_out * std::exp(-0.5 * d_out.dot(prec_out * d_out));
            const double w_target = norm_target * std::exp(-0.5 * d_target.squaredNorm());
            row += weight(j) * w_out * w_target;
        }
        sum += weight(i) * row;
    }
    return 4.0 * std::numbers::pi * sum * h * h;
}

} // namespace cvtele
