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

#include <numbers>

#include "gtest/gtest.h"
#include "lu2q/errors.hpp"

#include "oracles.hpp"

namespace lu2q {
namespace {

const Complex kI(0.0, 1.0);

Mat4 bell_phi_plus() {
  Eigen::Vector4cd psi(1.0, 0.0, 0.0, 1.0);
  psi /= std::sqrt(2.0);
  return psi * psi.adjoint();
}

/// Bloch entries by explicit trace sums against oracle Pauli products.
std::array<std::array<Complex, 4>, 4> bloch_oracle(const Mat4& rho) {
  const auto p = testing::pauli_oracle();
  const auto r = testing::to_m4(rho);
  std::array<std::array<Complex, 4>, 4> c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = testing::trace_product(r, testing::kron_oracle(p[i], p[j]));
  return c;
}

TEST(Pauli, Basis) {
  const auto& s = pauli_basis();
  const auto o = testing::pauli_oracle();
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) EXPECT_EQ(s[k](i, j), o[k][i][j]);
    EXPECT_LE((s[k] * s[k] - Mat2::Identity()).cwiseAbs().maxCoeff(), 0.0);
  }
  EXPECT_LE((s[1] * s[2] - kI * s[3]).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Kron, MatchesOracle) {
  auto rng = make_rng(4);
  const Mat2 a = haar_su2(rng), b = haar_su2(rng);
  const Mat4 k = kron(a, b);
  testing::M2 ao{}, bo{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      ao[i][j] = a(i, j);
      bo[i][j] = b(i, j);
    }
  const auto ko = testing::kron_oracle(ao, bo);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(k(i, j), ko[i][j]);
}

TEST(DensityToBloch, BellState) {
  const BlochMatrix b = density_to_bloch(DensityMatrix(bell_phi_plus()));
  EXPECT_LE(max_abs(b.u1), 1e-15);
  EXPECT_LE(max_abs(b.u2), 1e-15);
  EXPECT_LE(max_abs_diff(b.C, CMat3::diag(1.0, -1.0, 1.0)), 1e-15);
  const auto o = bloch_oracle(bell_phi_plus());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(b.C(i, j) - o[i + 1][j + 1]), 0.0, 1e-15);
}

TEST(DensityToBloch, LocalPolarisation) {
  const auto& s = pauli_basis();
  const Mat4 rho = 0.25 * (kron(s[0], s[0]) + kron(s[3], s[0]));
  const BlochMatrix b = density_to_bloch(DensityMatrix(rho));
  EXPECT_EQ(b.u1, CVec3(0.0, 0.0, 1.0));
  EXPECT_EQ(b.u2, CVec3());
  EXPECT_EQ(b.C, CMat3());
}

TEST(DensityToBloch, MaximallyMixed) {
  const BlochMatrix b = density_to_bloch(DensityMatrix(Mat4::Identity() / 4.0));
  EXPECT_EQ(max_abs(b), 0.0);
}

TEST(DensityToBloch, MatchesTraceOracle) {
  auto rng = make_rng(99);
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix rho = random_density(rng);
    const BlochMatrix b = density_to_bloch(rho);
    const auto o = bloch_oracle(rho.matrix());
    EXPECT_NEAR(std::abs(o[0][0] - 1.0), 0.0, 1e-12);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(std::abs(b.u1[i] - o[i + 1][0]), 0.0, 1e-13);
      EXPECT_NEAR(std::abs(b.u2[i] - o[0][i + 1]), 0.0, 1e-13);
      for (std::size_t j = 0; j < 3; ++j)
        EXPECT_NEAR(std::abs(b.C(i, j) - o[i + 1][j + 1]), 0.0, 1e-13);
    }
    EXPECT_LE(max_imag(b), 1e-14);
  }
}

TEST(RoundTrip, HermitianStates) {
  auto rng = make_rng(1);
  for (int t = 0; t < 1000; ++t) {
    const DensityMatrix rho = random_density(rng);
    const Mat4 back = bloch_to_density(density_to_bloch(rho)).matrix();
    EXPECT_LE((back - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(RoundTrip, ComplexBloch) {
  auto rng = make_rng(2);
  for (int t = 0; t < 200; ++t) {
    const BlochMatrix b = random_state(rng, StateKind::generic_bloch);
    const DensityMatrix rho = bloch_to_density(b);
    EXPECT_FALSE(rho.hermitian_required());
    EXPECT_LE(max_abs_diff(density_to_bloch(rho), b), 1e-12);
  }
}

TEST(AdjointRotation, CentreMapsToIdentity) {
  EXPECT_LE(max_abs_diff(adjoint_rotation(Mat2::Identity()), CMat3::identity()), 1e-15);
  EXPECT_LE(max_abs_diff(adjoint_rotation(Mat2(-Mat2::Identity())), CMat3::identity()), 1e-15);
}

TEST(AdjointRotation, QuarterTurnAboutZ) {
  const double theta = std::numbers::pi / 2.0;
  Mat2 u = Mat2::Zero();
  u(0, 0) = std::exp(-kI * theta / 2.0);
  u(1, 1) = std::exp(kI * theta / 2.0);
  const CMat3 expected({{{0.0, -1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}}});
  EXPECT_LE(max_abs_diff(adjoint_rotation(u), expected), 1e-15);
}

TEST(AdjointRotation, MatchesTraceFormula) {
  auto rng = make_rng(8);
  const auto p = testing::pauli_oracle();
  for (int t = 0; t < 100; ++t) {
    const Mat2 u = haar_su2(rng);
    const CMat3 r = adjoint_rotation(u);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Mat2 si, sj;
        for (int a = 0; a < 2; ++a)
          for (int c = 0; c < 2; ++c) {
            si(a, c) = p[i + 1][a][c];
            sj(a, c) = p[j + 1][a][c];
          }
        const Complex ref = 0.5 * (si * u * sj * u.adjoint()).trace();
        EXPECT_NEAR(std::abs(r(i, j) - ref), 0.0, 1e-14);
      }
    EXPECT_TRUE(is_special_orthogonal(r, 1e-12));
    EXPECT_LE(max_imag(r), 1e-15);
  }
}

TEST(AdjointRotation, Homomorphism) {
  auto rng = make_rng(9);
  for (int t = 0; t < 1000; ++t) {
    const Mat2 u = haar_su2(rng), v = haar_su2(rng);
    const Mat2 uv = u * v;
    EXPECT_LE(max_abs_diff(adjoint_rotation(uv), adjoint_rotation(u) * adjoint_rotation(v)), 1e-12);
  }
}

TEST(AdjointRotation, Equivariance) {
  auto rng = make_rng(10);
  for (int t = 0; t < 1000; ++t) {
    const DensityMatrix rho = random_density(rng);
    const LocalUnitary u = haar_local_unitary(rng);
    const BlochMatrix lhs = density_to_bloch(conjugate(u, rho));
    const BlochMatrix rhs = act(adjoint_rotation(u), density_to_bloch(rho));
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-10);
  }
}

TEST(Conjugate, UsesOracleKronecker) {
  auto rng = make_rng(12);
  const DensityMatrix rho = random_density(rng);
  const LocalUnitary u = haar_local_unitary(rng);
  testing::M2 a{}, b{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a[i][j] = u.u1()(i, j);
      b[i][j] = u.u2()(i, j);
    }
  const auto k = testing::kron_oracle(a, b);
  Mat4 km;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) km(i, j) = k[i][j];
  const Mat4 ref = km * rho.matrix() * km.adjoint();
  EXPECT_LE((conjugate(u, rho).matrix() - ref).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Haar, MeanRotationVanishes) {
  auto rng = make_rng(2024);
  CMat3 sum;
  const int n = 10000;
  for (int t = 0; t < n; ++t) sum = sum + adjoint_rotation(haar_su2(rng));
  EXPECT_LE(max_abs(sum) / n, 0.05);
}

TEST(Haar, SpecialUnitary) {
  auto rng = make_rng(5);
  for (int t = 0; t < 100; ++t) EXPECT_TRUE(is_special_unitary(haar_su2(rng), 1e-12));
}

TEST(Rng, Deterministic) {
  auto a = make_rng(42, 7), b = make_rng(42, 7), c = make_rng(42, 8);
  const BlochMatrix x = random_state(a, StateKind::hermitian_density);
  EXPECT_EQ(x, random_state(b, StateKind::hermitian_density));
  EXPECT_NE(x, random_state(c, StateKind::hermitian_density));
}

TEST(RandomState, Kinds) {
  auto rng = make_rng(6);
  const BlochMatrix h = random_state(rng, StateKind::hermitian_density);
  EXPECT_EQ(max_imag(h), 0.0);
  const BlochMatrix s = random_state(rng, StateKind::symmetric);
  EXPECT_TRUE(is_symmetric_state(s));
  const BlochMatrix g = random_state(rng, StateKind::generic_bloch);
  EXPECT_GT(max_imag(g), 0.0);
  EXPECT_FALSE(is_symmetric_state(g));
}

TEST(StateKindNames, RoundTrip) {
  for (auto k : {StateKind::generic_bloch, StateKind::hermitian_density, StateKind::symmetric})
    EXPECT_EQ(parse_state_kind(to_string(k)), k);
  EXPECT_FALSE(parse_state_kind("mixed").has_value());
}

TEST(Errors, NotAState) {
  EXPECT_THROW(DensityMatrix(Mat4::Identity()), NotAState);
  Mat4 m = Mat4::Identity() / 4.0;
  m(0, 1) = kI;
  EXPECT_THROW(DensityMatrix{m}, NotAState);
  EXPECT_NO_THROW(DensityMatrix(m, false));
}

TEST(Errors, NotUnitary) {
  Mat2 m = Mat2::Identity();
  m(0, 0) = 2.0;
  EXPECT_THROW(LocalUnitary(m, Mat2::Identity()), NotUnitary);
  // Unitary with determinant -1.
  Mat2 swap = Mat2::Zero();
  swap(0, 1) = swap(1, 0) = 1.0;
  EXPECT_THROW(LocalUnitary(Mat2::Identity(), swap), NotUnitary);
}

TEST(Errors, NotRotation) {
  EXPECT_THROW(RotationPair(CMat3::diag(-1.0, 1.0, 1.0), CMat3::identity()), NotRotation);
  EXPECT_THROW(RotationPair(CMat3::identity(), CMat3::diag(2.0, 1.0, 0.5)), NotRotation);
}

TEST(RotationPair, InverseAndComposition) {
  auto rng = make_rng(13);
  const RotationPair g = haar_rotation_pair(rng);
  const BlochMatrix b = random_state(rng, StateKind::generic_bloch);
  EXPECT_LE(max_abs_diff(act(g.inverse(), act(g, b)), b), 1e-13);
  const RotationPair h = haar_rotation_pair(rng);
  EXPECT_LE(max_abs_diff(act(g * h, b), act(g, act(h, b))), 1e-13);
}

TEST(Coordinates, RoundTrip) {
  auto rng = make_rng(14);
  const BlochMatrix b = random_state(rng, StateKind::generic_bloch);
  EXPECT_EQ(from_coordinates(coordinates(b)), b);
}

}  // namespace
}  // namespace lu2q
