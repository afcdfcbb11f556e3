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

#include "lu2q/invariants.hpp"

namespace lu2q {

namespace {

bool symmetric(const RealBloch& b, double tol) {
  return max_abs_diff(b.u1, b.u2) <= tol && max_abs_diff(b.C, transpose(b.C)) <= tol;
}

bool symmetric(const BlochMatrix& b, double tol) { return is_symmetric_state(b, tol); }

}  // namespace

std::string GenericityReport::failures() const {
  static constexpr const char* kNames[] = {"u1.u1", "u2.u2", "v1.v1", "v2.v2"};
  const bool ok[] = {u1_ok, u2_ok, v1_ok, v2_ok};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (ok[k]) continue;
    if (!out.empty()) out += ", ";
    out += kNames[k];
  }
  return out;
}

template <Scalar T>
BasicDerivedFrame<T> derived_frame(const BasicBloch<T>& b) {
  BasicDerivedFrame<T> d;
  d.v1 = cross(b.u1, b.C * b.u2);
  d.w1 = cross(b.u1, d.v1);
  d.v2 = cross(b.u2, transpose(b.C) * b.u1);
  d.w2 = cross(b.u2, d.v2);
  return d;
}

template <Scalar T>
GenericityReport genericity(const BasicBloch<T>& b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("genericity: tol must be > 0");
  const auto d = derived_frame(b);
  const double scale = std::max(1.0, max_abs(b) * max_abs(b));

  GenericityReport r;
  r.threshold = tol * scale;
  r.magnitudes = {std::abs(dot(b.u1, b.u1)), std::abs(dot(b.u2, b.u2)),
                  std::abs(dot(d.v1, d.v1)), std::abs(dot(d.v2, d.v2))};
  r.u1_ok = r.magnitudes[0] > r.threshold;
  r.u2_ok = r.magnitudes[1] > r.threshold;
  r.v1_ok = r.magnitudes[2] > r.threshold;
  r.v2_ok = r.magnitudes[3] > r.threshold;
  return r;
}

template <Scalar T>
BasicInvariants9<T> invariants9(const BasicBloch<T>& b) {
  const auto d = derived_frame(b);
  const Vec3<T> cu2 = b.C * b.u2;
  const Vec3<T> cv2 = b.C * d.v2;
  const Vec3<T> cw2 = b.C * d.w2;

  BasicInvariants9<T> f;
  f(1) = dot(b.u1, b.u1);
  f(2) = dot(b.u2, b.u2);
  f(3) = dot(d.v1, d.v1);
  f(4) = dot(d.v2, d.v2);
  f(5) = dot(b.u1, cu2);
  f(6) = dot(d.v1, cv2);
  f(7) = dot(d.w1, cw2);
  f(8) = dot(d.v1, cw2);
  f(9) = dot(d.w1, cv2);
  return f;
}

template <Scalar T>
BasicInvariants6<T> invariants6_symmetric(const BasicBloch<T>& b, double sym_tol) {
  if (!symmetric(b, sym_tol)) throw NotSymmetric("invariants6_symmetric: state is not symmetric");
  const Vec3<T>& u = b.u1;
  const Vec3<T> v = cross(u, b.C * u);
  const Vec3<T> w = cross(u, v);
  const Vec3<T> cv = b.C * v;

  BasicInvariants6<T> f;
  f(1) = dot(u, u);
  f(2) = dot(v, v);
  f(3) = dot(u, b.C * u);
  f(4) = dot(v, cv);
  f(5) = dot(w, b.C * w);
  f(6) = dot(w, cv);
  return f;
}

InvariantVector9 fingerprint9(const BlochMatrix& b) {
  if (auto r = as_real(b)) return complexify(invariants9(*r));
  return invariants9(b);
}

InvariantVector6 fingerprint6(const BlochMatrix& b, double sym_tol) {
  if (auto r = as_real(b)) return complexify(invariants6_symmetric(*r, sym_tol));
  return invariants6_symmetric(b, sym_tol);
}

#define LU2Q_INSTANTIATE(T)                                                          \
  template BasicDerivedFrame<T> derived_frame(const BasicBloch<T>&);                 \
  template GenericityReport genericity(const BasicBloch<T>&, double);                \
  template BasicInvariants9<T> invariants9(const BasicBloch<T>&);                    \
  template BasicInvariants6<T> invariants6_symmetric(const BasicBloch<T>&, double);

LU2Q_INSTANTIATE(double)
LU2Q_INSTANTIATE(Complex)

#undef LU2Q_INSTANTIATE

}  // namespace lu2q
