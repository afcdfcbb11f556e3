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

#include "lu2q/quantum.hpp"

#include <cmath>
#include <string>

#include "lu2q/errors.hpp"

namespace lu2q {

namespace {

const Complex kI(0.0, 1.0);

double hermitian_defect(const Mat4& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

double max_imag(const BlochMatrix& b) {
  return std::max({max_imag(b.u1), max_imag(b.u2), max_imag(b.C)});
}

RealBloch real_part(const BlochMatrix& b) {
  return {real_part(b.u1), real_part(b.u2), real_part(b.C)};
}

BlochMatrix complexify(const RealBloch& b) {
  return {complexify(b.u1), complexify(b.u2), complexify(b.C)};
}

std::optional<RealBloch> as_real(const BlochMatrix& b, double tol) {
  if (max_imag(b) > tol) return std::nullopt;
  return real_part(b);
}

DensityMatrix::DensityMatrix(const Mat4& rho, bool hermitian_required, double tol)
    : rho_(rho), hermitian_required_(hermitian_required) {
  if (!rho.allFinite()) throw NotAState("density matrix has non-finite entries");
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw NotAState("trace is (" + std::to_string(tr.real()) + ", " + std::to_string(tr.imag()) +
                    "), expected 1");
  }
  if (hermitian_required && hermitian_defect(rho) > tol) {
    throw NotAState("density matrix is not Hermitian");
  }
}

bool is_special_unitary(const Mat2& u, double tol) {
  if (!u.allFinite()) return false;
  const double unitary_defect = (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff();
  return unitary_defect <= tol && std::abs(u.determinant() - 1.0) <= tol;
}

LocalUnitary::LocalUnitary(const Mat2& u1, const Mat2& u2, double tol) : u1_(u1), u2_(u2) {
  if (!is_special_unitary(u1, tol)) throw NotUnitary("first factor is not in SU(2)");
  if (!is_special_unitary(u2, tol)) throw NotUnitary("second factor is not in SU(2)");
}

Mat4 LocalUnitary::matrix() const { return kron(u1_, u2_); }

RotationPair::RotationPair(const CMat3& g1, const CMat3& g2, double tol) : g1_(g1), g2_(g2) {
  if (!is_special_orthogonal(g1, tol)) throw NotRotation("g1 is not special orthogonal");
  if (!is_special_orthogonal(g2, tol)) throw NotRotation("g2 is not special orthogonal");
}

RotationPair RotationPair::inverse() const {
  return RotationPair(transpose(g1_), transpose(g2_), Unchecked{});
}

RotationPair operator*(const RotationPair& a, const RotationPair& b) {
  return RotationPair(a.g1_ * b.g1_, a.g2_ * b.g2_, RotationPair::Unchecked{});
}

const std::array<Mat2, 4>& pauli_basis() {
  static const std::array<Mat2, 4> basis = [] {
    std::array<Mat2, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -kI, kI, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return basis;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) k(2 * i + p, 2 * j + q) = a(i, j) * b(p, q);
  return k;
}

BlochMatrix density_to_bloch(const DensityMatrix& rho) {
  const auto& s = pauli_basis();
  const Mat4& m = rho.matrix();
  auto corr = [&](int i, int j) -> Complex { return (m * kron(s[i], s[j])).trace(); };

  BlochMatrix b;
  for (int i = 1; i <= 3; ++i) {
    b.u1[i - 1] = corr(i, 0);
    b.u2[i - 1] = corr(0, i);
    for (int j = 1; j <= 3; ++j) b.C(i - 1, j - 1) = corr(i, j);
  }
  return b;
}

DensityMatrix bloch_to_density(const BlochMatrix& b) {
  const auto& s = pauli_basis();
  Mat4 rho = kron(s[0], s[0]);
  for (int i = 1; i <= 3; ++i) {
    rho += b.u1[i - 1] * kron(s[i], s[0]);
    rho += b.u2[i - 1] * kron(s[0], s[i]);
    for (int j = 1; j <= 3; ++j) rho += b.C(i - 1, j - 1) * kron(s[i], s[j]);
  }
  rho *= 0.25;
  return DensityMatrix(rho, max_imag(b) <= kRealTol);
}

CMat3 adjoint_rotation(const Mat2& u, double tol) {
  if (!is_special_unitary(u, tol)) throw NotUnitary("adjoint_rotation: matrix is not in SU(2)");
  const auto& s = pauli_basis();
  const Mat2 ud = u.adjoint();
  CMat3 r;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) r(i - 1, j - 1) = 0.5 * (s[i] * u * s[j] * ud).trace();
  return r;
}

RotationPair adjoint_rotation(const LocalUnitary& u) {
  return RotationPair(adjoint_rotation(u.u1()), adjoint_rotation(u.u2()));
}

BlochMatrix act(const RotationPair& g, const BlochMatrix& b) { return act(g.g1(), g.g2(), b); }

DensityMatrix conjugate(const LocalUnitary& u, const DensityMatrix& rho) {
  const Mat4 m = u.matrix();
  return DensityMatrix(m * rho.matrix() * m.adjoint(), rho.hermitian_required());
}

Mat2 haar_su2(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& x : q) {
      x = gauss(rng);
      n2 += x * x;
    }
  } while (n2 < 1e-300);
  const double n = std::sqrt(n2);
  const double a = q[0] / n, b = q[1] / n, c = q[2] / n, d = q[3] / n;
  Mat2 u;
  u << Complex(a, b), Complex(c, d), Complex(-c, d), Complex(a, -b);
  return u;
}

LocalUnitary haar_local_unitary(Rng& rng) {
  Mat2 u1 = haar_su2(rng);
  Mat2 u2 = haar_su2(rng);
  return LocalUnitary(u1, u2);
}

RotationPair haar_rotation_pair(Rng& rng) { return adjoint_rotation(haar_local_unitary(rng)); }

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::generic_bloch:
      return "generic-bloch";
    case StateKind::hermitian_density:
      return "hermitian-density";
    case StateKind::symmetric:
      return "symmetric";
  }
  return "unknown";
}

std::optional<StateKind> parse_state_kind(std::string_view name) {
  for (StateKind k : {StateKind::generic_bloch, StateKind::hermitian_density, StateKind::symmetric}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

DensityMatrix random_density(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      a(i, j) = Complex(re, im);
    }
  Mat4 rho = a * a.adjoint();
  rho /= rho.trace().real();
  // Exact Hermiticity; the product leaves rounding asymmetry.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(rho);
}

BlochMatrix random_state(Rng& rng, StateKind kind) {
  if (kind == StateKind::hermitian_density) {
    return complexify(real_part(density_to_bloch(random_density(rng))));
  }
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto draw = [&] {
    const double re = unif(rng);
    const double im = unif(rng);
    return Complex(re, im);
  };
  BlochMatrix b;
  for (std::size_t i = 0; i < 3; ++i) b.u1[i] = draw();
  for (std::size_t i = 0; i < 3; ++i) b.u2[i] = draw();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) b.C(i, j) = draw();
  if (kind == StateKind::symmetric) {
    b.u2 = b.u1;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < i; ++j) b.C(i, j) = b.C(j, i);
  }
  return b;
}

bool is_symmetric_state(const BlochMatrix& b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_symmetric_state: tol must be > 0");
  return max_abs_diff(b.u1, b.u2) <= tol && max_abs_diff(b.C, transpose(b.C)) <= tol;
}

}  // namespace lu2q
