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

#include "lu2q/canonical.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace lu2q {

namespace {

// Relative tolerance for the structural preconditions of frame_rotation.
constexpr double kFrameConsistencyTol = 1e-8;

template <Scalar T>
Mat3<T> frame_unchecked(const Vec3<T>& u, const Vec3<T>& v) {
  const Vec3<T> uh = u / norm(u);
  const Vec3<T> vh = v / norm(v);
  return Mat3<T>::from_rows(uh, vh, cross(uh, vh));
}

template <Scalar T>
CanonicalForm reduce_general(const BasicBloch<T>& b, const GenericityReport& report) {
  const auto d = derived_frame(b);
  const Mat3<T> g1 = frame_unchecked(b.u1, d.v1);
  const Mat3<T> g2 = frame_unchecked(b.u2, d.v2);
  const BasicBloch<T> canon = act(g1, g2, b);
  if constexpr (std::is_same_v<T, double>) {
    return {complexify(canon), RotationPair(complexify(g1), complexify(g2)), report};
  } else {
    return {canon, RotationPair(g1, g2), report};
  }
}

template <Scalar T>
CanonicalForm reduce_symmetric(const BasicBloch<T>& b, const GenericityReport& report) {
  const Vec3<T>& u = b.u1;
  const Vec3<T> v = cross(u, b.C * u);
  const Mat3<T> g = frame_unchecked(u, v);
  const BasicBloch<T> canon = act(g, g, b);
  if constexpr (std::is_same_v<T, double>) {
    const CMat3 gc = complexify(g);
    return {complexify(canon), RotationPair(gc, gc), report};
  } else {
    return {canon, RotationPair(g, g), report};
  }
}

template <Scalar T>
T sqrt_checked(const T& x, double tol, const char* name) {
  if (std::abs(x) <= tol) {
    throw DegenerateInvariants(std::string(name) + " is too close to zero");
  }
  if constexpr (std::is_same_v<T, double>) {
    if (x < 0.0) {
      throw DegenerateInvariants(std::string(name) +
                                 " is negative; use complex invariants for this section");
    }
  }
  return std::sqrt(x);
}

}  // namespace

template <Scalar T>
Mat3<T> frame_rotation(const Vec3<T>& u, const Vec3<T>& v, const Vec3<T>& w, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("frame_rotation: tol must be > 0");
  GenericityReport report;
  report.threshold = tol;
  report.magnitudes = {std::abs(dot(u, u)), 0.0, std::abs(dot(v, v)), 0.0};
  report.u1_ok = report.magnitudes[0] > tol;
  report.v1_ok = report.magnitudes[2] > tol;
  report.u2_ok = report.v2_ok = true;
  if (!report.generic()) {
    throw NonGeneric("frame_rotation: isotropic or zero frame vector (" + report.failures() + ")",
                     report);
  }

  const double scale = std::max(1.0, max_abs(u) * max_abs(v));
  if (std::abs(dot(u, v)) > kFrameConsistencyTol * scale) {
    throw std::invalid_argument("frame_rotation: u and v are not orthogonal");
  }
  if (max_abs_diff(w, cross(u, v)) > kFrameConsistencyTol * scale) {
    throw std::invalid_argument("frame_rotation: w is not u x v");
  }
  return frame_unchecked(u, v);
}

CanonicalForm canonical_form_general(const BlochMatrix& b, double tol) {
  if (auto r = as_real(b)) {
    const auto report = genericity(*r, tol);
    if (!report.generic()) {
      throw NonGeneric("canonical_form_general: state is not generic (" + report.failures() + ")",
                       report);
    }
    return reduce_general(*r, report);
  }
  const auto report = genericity(b, tol);
  if (!report.generic()) {
    throw NonGeneric("canonical_form_general: state is not generic (" + report.failures() + ")",
                     report);
  }
  return reduce_general(b, report);
}

CanonicalForm canonical_form_symmetric(const BlochMatrix& b, double tol) {
  if (!is_symmetric_state(b)) throw NotSymmetric("canonical_form_symmetric: state is not symmetric");
  // For symmetric data v1 = v2 = u x Cu, so the general report is the
  // symmetric genericity condition counted twice.
  if (auto r = as_real(b)) {
    const auto report = genericity(*r, tol);
    if (!report.generic()) {
      throw NonGeneric(
          "canonical_form_symmetric: state is not generic (" + report.failures() + ")", report);
    }
    return reduce_symmetric(*r, report);
  }
  const auto report = genericity(b, tol);
  if (!report.generic()) {
    throw NonGeneric("canonical_form_symmetric: state is not generic (" + report.failures() + ")",
                     report);
  }
  return reduce_symmetric(b, report);
}

template <Scalar T>
BasicBloch<T> canonical_from_invariants9(const BasicInvariants9<T>& f, double tol) {
  const T r1 = sqrt_checked(f(1), tol, "f1");
  const T r2 = sqrt_checked(f(2), tol, "f2");
  const T r3 = sqrt_checked(f(3), tol, "f3");
  const T r4 = sqrt_checked(f(4), tol, "f4");

  // Products of individual principal roots rather than roots of products:
  // this is what |u_k|, |v_k| and |w_k| = |u_k||v_k| are on the section.
  BasicBloch<T> b;
  b.u1[0] = r1;
  b.u2[0] = r2;
  b.C(0, 0) = f(5) / (r1 * r2);
  b.C(1, 1) = f(6) / (r3 * r4);
  b.C(0, 2) = -r4 / (r1 * r2);
  b.C(2, 0) = -r3 / (r1 * r2);
  b.C(1, 2) = f(8) / (r2 * r3 * r4);
  b.C(2, 1) = f(9) / (r1 * r3 * r4);
  b.C(2, 2) = f(7) / (r1 * r2 * r3 * r4);
  return b;
}

template <Scalar T>
BasicBloch<T> canonical_from_invariants6(const BasicInvariants6<T>& f, double tol) {
  const T r1 = sqrt_checked(f(1), tol, "f1");
  const T r2 = sqrt_checked(f(2), tol, "f2");

  BasicBloch<T> b;
  b.u1[0] = r1;
  b.u2[0] = r1;
  b.C(0, 0) = f(3) / f(1);
  b.C(1, 1) = f(4) / f(2);
  b.C(0, 2) = b.C(2, 0) = -r2 / f(1);
  b.C(1, 2) = b.C(2, 1) = f(6) / (f(2) * r1);
  b.C(2, 2) = f(5) / (f(1) * f(2));
  return b;
}

template <Scalar T>
double section_residual(const BasicBloch<T>& b) {
  return std::max({std::abs(b.u1[1]), std::abs(b.u1[2]), std::abs(b.u2[1]), std::abs(b.u2[2]),
                   std::abs(b.C(0, 1)), std::abs(b.C(1, 0))});
}

CMat3 WeylElement::g1() const { return CMat3::diag(s1[0], s1[1], s1[2]); }
CMat3 WeylElement::g2() const { return CMat3::diag(s2[0], s2[1], s2[2]); }
RotationPair WeylElement::pair() const { return RotationPair(g1(), g2()); }

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  for (std::size_t i = 0; i < 3; ++i) {
    c.s1[i] = a.s1[i] * b.s1[i];
    c.s2[i] = a.s2[i] * b.s2[i];
  }
  return c;
}

const std::vector<WeylElement>& weyl_group_general() {
  static const std::vector<WeylElement> group = [] {
    std::vector<WeylElement> g;
    g.reserve(16);
    for (const auto& a : kKleinSigns)
      for (const auto& b : kKleinSigns) g.push_back(WeylElement{a, b});
    return g;
  }();
  return group;
}

std::vector<CMat3> weyl_group_symmetric() {
  std::vector<CMat3> g;
  g.reserve(4);
  for (const auto& s : kKleinSigns) g.push_back(CMat3::diag(s[0], s[1], s[2]));
  return g;
}

std::array<double, 16> weyl_residuals(const BlochMatrix& a, const BlochMatrix& b) {
  std::array<double, 16> r{};
  const auto& group = weyl_group_general();
  for (std::size_t k = 0; k < group.size(); ++k) r[k] = max_abs_diff(group[k].apply(a), b);
  return r;
}

WeylMatch closest_weyl(const BlochMatrix& a, const BlochMatrix& b) {
  const auto r = weyl_residuals(a, b);
  const auto it = std::min_element(r.begin(), r.end());
  return {static_cast<std::size_t>(it - r.begin()), *it};
}

#define LU2Q_INSTANTIATE(T)                                                                   \
  template Mat3<T> frame_rotation(const Vec3<T>&, const Vec3<T>&, const Vec3<T>&, double);   \
  template BasicBloch<T> canonical_from_invariants9(const BasicInvariants9<T>&, double);      \
  template BasicBloch<T> canonical_from_invariants6(const BasicInvariants6<T>&, double);      \
  template double section_residual(const BasicBloch<T>&);

LU2Q_INSTANTIATE(double)
LU2Q_INSTANTIATE(Complex)

#undef LU2Q_INSTANTIATE

}  // namespace lu2q
