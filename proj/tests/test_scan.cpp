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

#include "cvtele/errors.hpp"
#include "cvtele/scan.hpp"

#include "support/expect.hpp"
#include "support/fig1.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

using namespace cvtele;
using cvtele::test::code_of;

namespace {

std::string first_line(const std::string& text)
{
    return text.substr(0, text.find('\n'));
}

std::size_t line_count(const std::string& text)
{
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

} // namespace

TEST(Axis, EndpointsAndSpacing)
{
    const Axis axis{-1.0, 1.0, 5};
    EXPECT_EQ(axis.at(0), -1.0);
    EXPECT_EQ(axis.at(2), 0.0);
    EXPECT_EQ(axis.at(4), 1.0);
    for (std::size_t i = 1; i < 5; ++i) {
        EXPECT_GT(axis.at(i), axis.at(i - 1));
    }
    EXPECT_DOUBLE_EQ(transmissivity_at(0, 20), 0.05);
    EXPECT_DOUBLE_EQ(transmissivity_at(19, 20), 1.0);
}

TEST(RegionScan, FamilyCells)
{
    const SymmetricFamilyParams family;
    const ChannelParams ideal;
    EXPECT_EQ(classify(family.state_at(0.75, -0.75), ideal, Gain(1.0)), Region::RobustQuantum);
    EXPECT_EQ(classify(family.state_at(0.3, -0.3), ideal, Gain(1.0)), Region::Separable);
    EXPECT_NEAR(symplectic_invariants(family.state_at(0.3, -0.3)).nu_tilde_minus, 1.4, 1e-12);
    EXPECT_EQ(classify(family.state_at(0.9, 0.9), ideal, Gain(1.0)), Region::Unphysical);

    // Grid with 0.75 = -1 + 2 * 7 / 8 on a 9-point axis.
    const auto grid = region_scan(family, ideal, Gain(1.0), 9);
    EXPECT_EQ(grid.at(7, 1), Region::RobustQuantum);
    EXPECT_EQ(grid.at(8, 8), Region::Unphysical);
    EXPECT_EQ(grid.at(0, 0), Region::Unphysical);
    EXPECT_EQ(grid.at(4, 4), Region::Separable);
    EXPECT_EQ(grid.labels.size(), 81u);
}

TEST(RegionScan, DeterministicAcrossThreads)
{
    const SymmetricFamilyParams family{2.0, 3.0};
    const auto a = region_scan(family, {0.8, 0.9}, Gain(0.7), 60, 1);
    const auto b = region_scan(family, {0.8, 0.9}, Gain(0.7), 60, 4);
    EXPECT_EQ(a.labels, b.labels);
}

TEST(RegionScan, RejectsTinyGrid)
{
    EXPECT_EQ(code_of([] { region_scan({}, {}, Gain(1.0), 1); }), ErrorCode::InvalidArgument);
}

TEST(RegionScan, UnitRatioBorderFollowsRobustWitness)
{
    const SymmetricFamilyParams family;
    const ChannelParams ideal;
    const auto grid = region_scan(family, ideal, Gain(1.0), 120);
    const auto audit = test::audit_robust_border(grid, family, ideal, Gain(1.0));
    EXPECT_GT(audit.quantum_pairs, 100u);
    EXPECT_GT(audit.border_pairs, 10u);
    EXPECT_EQ(audit.mismatched_pairs, 0u);
    EXPECT_EQ(audit.sign_mismatches, 0u);
}

TEST(RegionScan, ReducedRatioSplitsBorders)
{
    const SymmetricFamilyParams family;
    const ChannelParams ideal;
    const auto grid = region_scan(family, ideal, Gain(0.65), 120);
    EXPECT_GT(test::count_split_border_cells(grid, family, ideal, Gain(0.65)), 0u);
}

TEST(FidelitySurface, SqueezedStateCells)
{
    const auto surface = fidelity_surface(two_mode_squeezed_state(1.0), Gain(1.0), 10);
    const auto& corner = surface.at(9, 9);
    EXPECT_DOUBLE_EQ(corner.t_a, 1.0);
    EXPECT_NEAR(corner.fidelity, test::kTmssFidelity, 1e-12);
    EXPECT_TRUE(corner.quantum);
    const auto& half = surface.at(4, 9);
    EXPECT_DOUBLE_EQ(half.t_a, 0.5);
    EXPECT_NEAR(half.fidelity, test::kTmssHalfAliceFidelity, 1e-12);
    EXPECT_TRUE(half.quantum);
    const auto& fifth = surface.at(1, 9);
    EXPECT_DOUBLE_EQ(fifth.t_a, 0.2);
    EXPECT_NEAR(fifth.fidelity, test::kTmssFifthAliceFidelity, 1e-12);
    EXPECT_FALSE(fifth.quantum);
    EXPECT_DOUBLE_EQ(fifth.cft, 0.5);
}

TEST(FidelitySurface, DeterministicAcrossThreads)
{
    const auto a = fidelity_surface(test::asymmetric_state(), Gain(0.8), 40, 1);
    const auto b = fidelity_surface(test::asymmetric_state(), Gain(0.8), 40, 3);
    ASSERT_EQ(a.cells.size(), b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        EXPECT_EQ(a.cells[i].fidelity, b.cells[i].fidelity);
    }
}

TEST(GainSweep, MinimumBracketsOptimalGain)
{
    const auto tmss = two_mode_squeezed_state(1.0);
    const auto sweep = gain_sweep(tmss, {}, {});
    ASSERT_EQ(sweep.size(), 401u);
    const auto best = std::min_element(sweep.begin(), sweep.end(),
                                       [](const GainSample& a, const GainSample& b) { return a.w_sum < b.w_sum; });
    EXPECT_LE(std::abs(best->g - test::kCoth1), 0.01);
    EXPECT_GT(best->g, 0.0);
    EXPECT_LT(best->g, 4.0);
}

TEST(GainSweep, AttenuatedAliceWindow)
{
    const auto tmss = two_mode_squeezed_state(1.0);
    const ChannelParams channel(0.5, 1.0);
    const double g_min = optimal_gain(tmss, channel).value;
    const auto at = gain_sweep(tmss, channel, {g_min, g_min + 1.0, 2});
    EXPECT_TRUE(at.front().quantum);
    const auto low = gain_sweep(tmss, channel, {0.2, 0.3, 2});
    EXPECT_FALSE(low.front().quantum);
}

TEST(GainSweep, VacuaNeverQuantum)
{
    for (const auto& s : gain_sweep(vacuum_state(), {}, {})) {
        EXPECT_NEAR(s.fidelity, s.cft, 1e-12);
        EXPECT_FALSE(s.quantum);
    }
}

TEST(GainSweep, RejectsBadRange)
{
    EXPECT_EQ(code_of([] { gain_sweep(vacuum_state(), {}, {2.0, 1.0, 10}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { gain_sweep(vacuum_state(), {}, {0.0, 1.0, 1}); }), ErrorCode::InvalidArgument);
}

TEST(RobustnessSweep, SqueezedStateEverywhereQuantum)
{
    const auto grid = robustness_sweep(two_mode_squeezed_state(1.0), 20);
    EXPECT_TRUE(grid.all_quantum());
    EXPECT_EQ(grid.cells.size(), 400u);
}

TEST(RobustnessSweep, AsymmetricFixtureHasClassicalCell)
{
    const auto grid = robustness_sweep(test::asymmetric_state(), 10);
    EXPECT_FALSE(grid.all_quantum());
    const auto& cell = grid.at(9, 2);  // (1, 0.3)
    EXPECT_DOUBLE_EQ(cell.t_a, 1.0);
    EXPECT_NEAR(cell.t_b, 0.3, 1e-15);
    EXPECT_FALSE(cell.quantum);
    EXPECT_LT(cell.best_ratio, 1.0);
}

TEST(RobustnessSweep, SeparableStatesNeverQuantum)
{
    EXPECT_FALSE(robustness_sweep(vacuum_state(), 5).at(4, 4).quantum);
    const auto thermal_correlated = symmetric_state(3.0, 3.0, 1.0, 1.0);
    ASSERT_FALSE(ppt_entangled(thermal_correlated));
    const auto grid = robustness_sweep(thermal_correlated, 6);
    for (const auto& c : grid.cells) {
        EXPECT_FALSE(c.quantum);
    }
}

TEST(RobustnessSweep, DeterministicAcrossThreads)
{
    const auto a = robustness_sweep(two_mode_squeezed_state(0.5), 6, 1);
    const auto b = robustness_sweep(two_mode_squeezed_state(0.5), 6, 2);
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        EXPECT_EQ(a.cells[i].best_gain, b.cells[i].best_gain);
        EXPECT_EQ(a.cells[i].best_ratio, b.cells[i].best_ratio);
    }
}

TEST(Csv, Headers)
{
    std::ostringstream region, surface, gain, robust;
    write_region_csv(region, region_scan({}, {}, Gain(1.0), 3));
    write_surface_csv(surface, fidelity_surface(two_mode_squeezed_state(1.0), Gain(1.0), 3));
    write_gain_csv(gain, gain_sweep(two_mode_squeezed_state(1.0), {}, {0.0, 2.0, 5}));
    write_robustness_csv(robust, robustness_sweep(two_mode_squeezed_state(1.0), 2));

    EXPECT_EQ(first_line(region.str()), "kq_bar,kp_bar,region");
    EXPECT_EQ(first_line(surface.str()), "ta,tb,fidelity,cft,quantum");
    EXPECT_EQ(first_line(gain.str()), "g,fidelity,cft,w_sum,quantum");
    EXPECT_EQ(first_line(robust.str()), "ta,tb,best_g,ratio,quantum");
    EXPECT_EQ(line_count(region.str()), 10u);
    EXPECT_EQ(line_count(surface.str()), 10u);
    EXPECT_EQ(line_count(gain.str()), 6u);
    EXPECT_EQ(line_count(robust.str()), 5u);
}

TEST(Csv, RegionRows)
{
    std::ostringstream out;
    write_region_csv(out, region_scan({}, {}, Gain(1.0), 3));
    const std::string text = out.str();
    EXPECT_NE(text.find("\n-1,-1,UNPHYS\n"), std::string::npos);
    EXPECT_NE(text.find("\n0,0,SEP\n"), std::string::npos);
}

TEST(Csv, NineSignificantDigits)
{
    std::ostringstream out;
    write_surface_csv(out, fidelity_surface(two_mode_squeezed_state(1.0), Gain(1.0), 2));
    EXPECT_NE(out.str().find("1,1,0.880797078,0.5,1"), std::string::npos);
}
