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

namespace cvtele {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NonSymmetricBlock: return "NonSymmetricBlock";
    case ErrorCode::NonZeroMean: return "NonZeroMean";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ComplexEigenvalue: return "ComplexEigenvalue";
    case ErrorCode::UnphysicalInput: return "UnphysicalInput";
    case ErrorCode::DegenerateE: return "DegenerateE";
    case ErrorCode::InvalidEta: return "InvalidEta";
    case ErrorCode::DegenerateAlice: return "DegenerateAlice";
    case ErrorCode::CanonicalizationFailed: return "CanonicalizationFailed";
    case ErrorCode::NonPositiveDefinite: return "NonPositiveDefinite";
    case ErrorCode::NonPositiveOutputCovariance: return "NonPositiveOutputCovariance";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

} // namespace cvtele
