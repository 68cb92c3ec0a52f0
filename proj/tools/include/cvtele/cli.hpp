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

#include <iosfwd>

namespace cvtele::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailed = 1,
    kInputError = 2,
    kPreconditionViolated = 3,
};

/// Entry point of the `cvtele` tool. Results go to `out` (or to --out
/// files), diagnostics to `err`. Returns one of ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cvtele::cli
