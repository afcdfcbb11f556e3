// Copyright 2026 The lu2q Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lu2q::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformed = 1,
  kNonGeneric = 2,
  kNotSymmetric = 3,
  kDistinct = 4,
  kVerificationFailed = 5,
};

/// Environment overrides for the default --tol and --seed.
inline constexpr const char* kTolEnv = "LU2Q_TOL";
inline constexpr const char* kSeedEnv = "LU2Q_SEED";

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lu2q::cli
