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

namespace lu2q {

/// Trace, Hermiticity and unitarity checks.
inline constexpr double kStructuralTol = 1e-10;
/// Entrywise rotation check carried by RotationPair.
inline constexpr double kRotationTol = 1e-8;
/// Threshold on |x . x| for the genericity conditions.
inline constexpr double kGenericTol = 1e-8;
/// Largest imaginary part that still takes the real arithmetic path.
inline constexpr double kRealTol = 1e-10;
/// Entrywise residual for declaring two canonical forms equal.
inline constexpr double kEquivalenceTol = 1e-8;
/// Trace tolerance for density matrices read from files.
inline constexpr double kFileTraceTol = 1e-8;

}  // namespace lu2q
