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

// Rational local-unitary invariants of two-qubit states.
//
// From the Bloch data (u1, u2, C) build the derived frame
//     v1 = u1 x C u2,     w1 = u1 x v1,
//     v2 = u2 x C^t u1,   w2 = u2 x v2,
// which transforms covariantly: each vector of qubit k picks up g_k. The nine
// invariants are the bilinear pairings
//     f1 = u1.u1  f2 = u2.u2  f3 = v1.v1  f4 = v2.v2
//     f5 = u1.Cu2 f6 = v1.Cv2 f7 = w1.Cw2 f8 = v1.Cw2 f9 = w1.Cv2
// and on the generic set (u_k.u_k != 0, v_k.v_k != 0) they separate orbits.
//
// For symmetric states (u1 = u2 = u, C = C^t) the diagonal group leaves six:
//     v = u x Cu, w = u x v,
//     f1 = u.u  f2 = v.v  f3 = u.Cu  f4 = v.Cv  f5 = w.Cw  f6 = w.Cv.

#include <array>
#include <string>

#include "lu2q/errors.hpp"
#include "lu2q/quantum.hpp"

namespace lu2q {

template <Scalar T>
struct BasicDerivedFrame {
  Vec3<T> v1;
  Vec3<T> w1;
  Vec3<T> v2;
  Vec3<T> w2;
};

using DerivedFrame = BasicDerivedFrame<Complex>;

template <Scalar T, std::size_t N>
struct BasicInvariants {
  std::array<T, N> f{};

  /// 1-based, matching the conventional names f1..fN.
  const T& operator()(std::size_t k) const { return f.at(k - 1); }
  T& operator()(std::size_t k) { return f.at(k - 1); }

  static constexpr std::size_t size() { return N; }
};

template <Scalar T>
using BasicInvariants9 = BasicInvariants<T, 9>;
template <Scalar T>
using BasicInvariants6 = BasicInvariants<T, 6>;

/// Polynomial degree of each f_k in the Bloch coordinates; f_k(sB) = s^d f_k(B).
inline constexpr std::array<int, 9> kDegrees9 = {2, 2, 6, 6, 3, 7, 9, 8, 8};
inline constexpr std::array<int, 6> kDegrees6 = {2, 6, 3, 7, 9, 8};

using InvariantVector9 = BasicInvariants9<Complex>;
using InvariantVector6 = BasicInvariants6<Complex>;
using RealInvariants9 = BasicInvariants9<double>;
using RealInvariants6 = BasicInvariants6<double>;

struct GenericityReport {
  bool u1_ok = false;
  bool u2_ok = false;
  bool v1_ok = false;
  bool v2_ok = false;
  /// |u1.u1|, |u2.u2|, |v1.v1|, |v2.v2|.
  std::array<double, 4> magnitudes{};
  /// Effective cutoff: tol * max(1, max|B|^2).
  double threshold = 0.0;

  bool generic() const { return u1_ok && u2_ok && v1_ok && v2_ok; }

  /// Names of the failing conditions, e.g. "v1.v1, v2.v2"; empty if generic.
  std::string failures() const;
};

class NonGeneric : public Error {
 public:
  NonGeneric(const std::string& what, GenericityReport report, int input = 0)
      : Error(what), report_(report), input_(input) {}

  const GenericityReport& report() const { return report_; }
  /// 1 or 2 when raised by a two-state query, 0 otherwise.
  int input() const { return input_; }

 private:
  GenericityReport report_;
  int input_;
};

template <Scalar T>
BasicDerivedFrame<T> derived_frame(const BasicBloch<T>& b);

/// Condition k holds iff |x_k . x_k| > tol * max(1, max|B|^2).
template <Scalar T>
GenericityReport genericity(const BasicBloch<T>& b, double tol = kGenericTol);

template <Scalar T>
BasicInvariants9<T> invariants9(const BasicBloch<T>& b);

/// Throws NotSymmetric unless is_symmetric_state(b, sym_tol).
template <Scalar T>
BasicInvariants6<T> invariants6_symmetric(const BasicBloch<T>& b, double sym_tol = kStructuralTol);

template <Scalar T, std::size_t N>
BasicInvariants<Complex, N> complexify(const BasicInvariants<T, N>& f) {
  BasicInvariants<Complex, N> r;
  for (std::size_t i = 0; i < N; ++i) r.f[i] = f.f[i];
  return r;
}

/// Invariants of b, computed in real arithmetic when b is real within
/// kRealTol.
InvariantVector9 fingerprint9(const BlochMatrix& b);
InvariantVector6 fingerprint6(const BlochMatrix& b, double sym_tol = kStructuralTol);

}  // namespace lu2q
