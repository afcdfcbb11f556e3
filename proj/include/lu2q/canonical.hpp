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

// Reduction of generic states to the section
//     u1 = (a, 0, 0), u2 = (b, 0, 0), c12 = c21 = 0
// and reconstruction of section representatives from invariant values.
//
// The rotation for qubit k has rows (u_k/|u_k|, v_k/|v_k|, w-hat) with
// w-hat = u-hat x v-hat, so it maps the derived frame onto e1, e2, e3. On the
// section the residual symmetry is the Weyl group: pairs of diagonal sign
// matrices of determinant one (order 16; order 4 for symmetric states under
// the diagonal action). Canonical forms are only ever compared modulo it.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "lu2q/invariants.hpp"
#include "lu2q/quantum.hpp"

namespace lu2q {

struct CanonicalForm {
  BlochMatrix canon;
  /// act(witness, input) == canon.
  RotationPair witness;
  GenericityReport report;
};

/// Rotation with rows u/|u|, v/|v|, (u/|u|) x (v/|v|). Requires u.v = 0 and
/// w = u x v; throws NonGeneric if |u.u| or |v.v| is at most tol.
template <Scalar T>
Mat3<T> frame_rotation(const Vec3<T>& u, const Vec3<T>& v, const Vec3<T>& w,
                       double tol = kGenericTol);

/// Throws NonGeneric (carrying the report) unless genericity(b, tol) holds.
/// Real input (within kRealTol) is reduced in real arithmetic.
CanonicalForm canonical_form_general(const BlochMatrix& b, double tol = kGenericTol);

/// Single rotation g applied diagonally. Throws NotSymmetric or NonGeneric.
CanonicalForm canonical_form_symmetric(const BlochMatrix& b, double tol = kGenericTol);

/// Section representative with the given invariants; principal square roots.
/// Throws DegenerateInvariants if one of |f1|..|f4| is at most tol.
template <Scalar T>
BasicBloch<T> canonical_from_invariants9(const BasicInvariants9<T>& f, double tol = kGenericTol);

/// Symmetric section representative. Throws DegenerateInvariants if |f1| or
/// |f2| is at most tol.
template <Scalar T>
BasicBloch<T> canonical_from_invariants6(const BasicInvariants6<T>& f, double tol = kGenericTol);

/// Largest magnitude among the six coordinates the section sets to zero.
template <Scalar T>
double section_residual(const BasicBloch<T>& b);

using SignTriple = std::array<int, 3>;

/// The Klein four-group as sign triples: (+++), (+--), (-+-), (--+).
inline constexpr std::array<SignTriple, 4> kKleinSigns = {
    SignTriple{1, 1, 1}, SignTriple{1, -1, -1}, SignTriple{-1, 1, -1}, SignTriple{-1, -1, 1}};

struct WeylElement {
  SignTriple s1{1, 1, 1};
  SignTriple s2{1, 1, 1};

  CMat3 g1() const;
  CMat3 g2() const;
  RotationPair pair() const;

  /// Exact sign flips; same result as act(pair(), b) without rounding.
  template <Scalar T>
  BasicBloch<T> apply(const BasicBloch<T>& b) const {
    BasicBloch<T> r = b;
    for (std::size_t i = 0; i < 3; ++i) {
      r.u1[i] *= T(s1[i]);
      r.u2[i] *= T(s2[i]);
      for (std::size_t j = 0; j < 3; ++j) r.C(i, j) *= T(s1[i] * s2[j]);
    }
    return r;
  }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

/// All 16 elements; index 4 * a + b pairs kKleinSigns[a] with kKleinSigns[b].
/// Index 0 is the identity.
const std::vector<WeylElement>& weyl_group_general();

/// The four diagonal rotations diag(kKleinSigns[a]).
std::vector<CMat3> weyl_group_symmetric();

struct WeylMatch {
  std::size_t index = 0;
  double residual = 0.0;
};

/// Residual max|w(a) - b| for every element of the order-16 group, in index
/// order.
std::array<double, 16> weyl_residuals(const BlochMatrix& a, const BlochMatrix& b);

/// Element minimising max|w(a) - b|.
WeylMatch closest_weyl(const BlochMatrix& a, const BlochMatrix& b);

}  // namespace lu2q
