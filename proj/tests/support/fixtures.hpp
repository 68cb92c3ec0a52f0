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

namespace cvtele::test {

// Frozen with tests/oracle/frozen_values.py (40-digit mpmath, explicit
// matrix algebra and eigen-solves; no library code involved).
inline constexpr double kCosh2 = 3.762195691083631;
inline constexpr double kSinh2 = 3.626860407847019;
inline constexpr double kTmssFidelity = 0.8807970779778824;        // 1 / (1 + e^-2)
inline constexpr double kTmssE = 2.270670566473225;                // 2 + 2 e^-2
inline constexpr double kTmssDetE = 5.155944821447838;
inline constexpr double kTmssHalfAliceFidelity = 0.5227549743558728;  // t_A = 0.5
inline constexpr double kTmssHalfAliceE = 3.825884206007521;
inline constexpr double kTmssFifthAliceFidelity = 0.3688717023252358; // t_A = 0.2
inline constexpr double kTmssFifthAliceE = 5.421939355588169;
inline constexpr double kTmssWSum = -3.458658867053549;
inline constexpr double kTmssWProd = -3.926737444445063;
inline constexpr double kTmssWAll = -10.84405517855216;
inline constexpr double kTmssWRob = -22.09756552866905;
inline constexpr double kTmssEprVariance = 0.2706705664732254;     // 2 e^-2
inline constexpr double kTmssDuanLhs = 0.5413411329464508;         // 4 e^-2
inline constexpr double kTmssNuTildeMinus = 0.1353352832366127;    // e^-2
inline constexpr double kCoth1 = 1.313035285499331;
inline constexpr double kAttenuatedAliceQ = 1.690548922770908;     // t_A = 0.5
inline constexpr double kAttenuatedCorrelation = 1.813430203923509;

inline constexpr double kAsymmetricFidelity = 0.5345224838248487;  // 2 / sqrt(14)
inline constexpr double kAsymmetricNuMinus = 0.893003193431;
inline constexpr double kAsymmetricNuTildeMinus = 0.669626914593;
inline constexpr double kAsymmetricFragileFidelity = 0.4304828960251927;  // t = (1, 0.3)
inline constexpr double kAsymmetricFragileBestRatio = 0.9999810645139862; // max over g
inline constexpr double kAsymmetricFragileBestGain = 0.3000546154995750;

inline constexpr double kCft25 = 0.1379310344827586;               // 4 / 29

/// The asymmetric, entangled-looking covariance used for fragility examples.
inline TwoModeState asymmetric_state()
{
    Matrix4 v;
    v << 2.1, 0.0, 1.9, 0.0,
         0.0, 2.6, 0.0, -0.7,
         1.9, 0.0, 2.2, 0.0,
         0.0, -0.7, 0.0, 2.4;
    return TwoModeState::from_covariance(v);
}

} // namespace cvtele::test
