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

#include "cvtele/scan.hpp"
#include "cvtele/witness.hpp"

#include <cstddef>

namespace cvtele::test {

struct BorderAudit {
    std::size_t quantum_pairs = 0;      // adjacent pairs with both labels in {I, II}
    std::size_t border_pairs = 0;       // of those, pairs whose label differs
    std::size_t mismatched_pairs = 0;   // label change != w_rob sign change
    std::size_t sign_mismatches = 0;    // I/II cells with sign(w_sum) != sign(w_rob)
};

inline bool is_quantum_label(Region r)
{
    return r == Region::RobustQuantum || r == Region::FragileQuantum;
}

/// Checks that inside the quantum part of a region map the I/II border runs
/// exactly along w_rob = 0 (and w_sum shares its sign there).
inline BorderAudit audit_robust_border(const RegionGrid& grid, const SymmetricFamilyParams& family,
                                       const ChannelParams& channel, Gain g)
{
    BorderAudit audit;
    const std::size_t n = grid.kq_axis.steps;
    const std::size_t m = grid.kp_axis.steps;
    const auto rob_negative = [&](std::size_t i, std::size_t j) {
        return w_rob(family.state_at(grid.kq_axis.at(i), grid.kp_axis.at(j))) < -kWitnessTolerance;
    };
    const auto visit = [&](std::size_t i0, std::size_t j0, std::size_t i1, std::size_t j1) {
        const Region a = grid.at(i0, j0);
        const Region b = grid.at(i1, j1);
        if (!is_quantum_label(a) || !is_quantum_label(b)) {
            return;
        }
        ++audit.quantum_pairs;
        const bool label_change = a != b;
        audit.border_pairs += label_change;
        audit.mismatched_pairs += label_change != (rob_negative(i0, j0) != rob_negative(i1, j1));
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i + 1 < n) {
                visit(i, j, i + 1, j);
            }
            if (j + 1 < m) {
                visit(i, j, i, j + 1);
            }
            if (is_quantum_label(grid.at(i, j))) {
                const auto s = family.state_at(grid.kq_axis.at(i), grid.kp_axis.at(j));
                const bool sum_negative = w_sum(s, channel, g) < -kWitnessTolerance;
                audit.sign_mismatches += sum_negative != (w_rob(s) < -kWitnessTolerance);
            }
        }
    }
    return audit;
}

/// Cells that are PPT-entangled although w_prod >= 0 (borders that no longer
/// coincide once g t_A != t_B).
inline std::size_t count_split_border_cells(const RegionGrid& grid, const SymmetricFamilyParams& family,
                                            const ChannelParams& channel, Gain g)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < grid.kq_axis.steps; ++i) {
        for (std::size_t j = 0; j < grid.kp_axis.steps; ++j) {
            const Region r = grid.at(i, j);
            if (r == Region::Unphysical || r == Region::Separable) {
                continue;
            }
            const auto s = family.state_at(grid.kq_axis.at(i), grid.kp_axis.at(j));
            count += w_prod(s, channel, g) >= 0.0;
        }
    }
    return count;
}

} // namespace cvtele::test
