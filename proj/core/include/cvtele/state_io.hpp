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

#include <filesystem>
#include <string>
#include <string_view>

namespace cvtele {

/// Parses a state document. Exactly one of the following sources:
///
///   {"V": [[4x4]]}                         full covariance, row-major
///   {"A": [[2x2]], "B": [[2x2]], "C": [[2x2]]}  blocks
///   {"tmss": {"r": <real>}}                two-mode squeezed vacuum
///
/// Ordering is always (q_A, p_A, q_B, p_B). An optional "mean" array must
/// be all zeros. Malformed documents throw ParseError; structurally valid
/// but inadmissible ones throw the corresponding state error
/// (NonSymmetricBlock, NonZeroMean).
TwoModeState parse_state_json(std::string_view text);

TwoModeState load_state_file(const std::filesystem::path& path);

/// {"ordering": "q_A,p_A,q_B,p_B", "V": [[...]]} with round-trip precision.
std::string state_to_json(const TwoModeState& state);

} // namespace cvtele
