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

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

#include "lu2q/canonical.hpp"

namespace lu2q {

struct EquivalenceVerdict {
  bool equivalent = false;
  /// act(*witness, b1) reproduces b2 within the tolerance. Set only when
  /// equivalent.
  std::optional<RotationPair> witness;
  /// Witness residual max|act(witness, b1) - b2| when equivalent; otherwise
  /// the smallest canonical-form mismatch over the Weyl group.
  double residual = 0.0;
  std::optional<std::size_t> weyl_index;
};

/// Local-unitary equivalence of two generic states via canonical forms and a
/// search over the order-16 Weyl group. The witness is
///     (g1'^t W1 g1, g2'^t W2 g2)
/// where (g1, g2), (g1', g2') reduce b1, b2 to canonical form and (W1, W2) is
/// the matching Weyl element; it is re-verified against b2 before reporting
/// success. Tolerances scale with max(1, max|b2|).
///
/// Throws NonGeneric with input() naming the offending state.
EquivalenceVerdict equivalent(const BlochMatrix& b1, const BlochMatrix& b2,
                              double tol = kEquivalenceTol, double generic_tol = kGenericTol);

/// Same for symmetric states under the diagonal group; the witness has
/// g1 == g2 and the search runs over the four diagonal Weyl elements.
/// Throws NotSymmetric or NonGeneric.
EquivalenceVerdict equivalent_symmetric(const BlochMatrix& b1, const BlochMatrix& b2,
                                        double tol = kEquivalenceTol,
                                        double generic_tol = kGenericTol);

enum class InvariantMap { general9, symmetric6 };

/// Number of invariants (rows) and free coordinates (columns).
std::size_t invariant_count(InvariantMap map);
std::size_t coordinate_count(InvariantMap map);

/// Central-difference Jacobian of the invariants with respect to the Bloch
/// coordinates: 9 x 15 for general9 (u1, u2, C row-major), 6 x 9 for
/// symmetric6 (u, then C upper triangle row by row, perturbing c_ij and c_ji
/// together).
Eigen::MatrixXcd invariant_jacobian(InvariantMap map, const BlochMatrix& b, double h);

struct JacobianSpectrum {
  int rank = 0;
  /// Singular values of the invariant Jacobian, descending.
  std::vector<double> singular_values;
  /// Singular values after appending the gradient of one further invariant
  /// (sum of c_ij^2 for general9, tr C for symmetric6). Any invariant is a
  /// function of the generators, so the extra value measures the noise floor.
  std::vector<double> augmented_singular_values;
  /// augmented[n-1] / augmented[n] with n = invariant_count(map).
  double gap = 0.0;
};

/// Throws NonGeneric (or NotSymmetric for symmetric6) before differentiating.
JacobianSpectrum jacobian_spectrum(InvariantMap map, const BlochMatrix& b, double h = 1e-5,
                                   double tol_sv = 1e-6, double generic_tol = kGenericTol);

/// Count of singular values above tol_sv times the largest.
int jacobian_rank(InvariantMap map, const BlochMatrix& b, double h = 1e-5, double tol_sv = 1e-6);

}  // namespace lu2q
