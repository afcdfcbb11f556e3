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

// Two-qubit states in density and Bloch form, and the local unitary action.
//
// Conventions:
//   * Kronecker product: (A (x) B)[2i+k][2j+l] = A[i][j] B[k][l].
//   * Bloch coordinates: u1_i = tr(rho s_i(x)s_0), u2_j = tr(rho s_0(x)s_j),
//     C_ij = tr(rho s_i(x)s_j) for i, j in 1..3. The constant c00 = 1 is
//     implied by the trace condition and never stored.
//   * A rotation pair (g1, g2) acts by (u1, u2, C) -> (g1 u1, g2 u2, g1 C g2^t).

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "lu2q/linalg3c.hpp"
#include "lu2q/tolerances.hpp"

namespace lu2q {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

using Rng = std::mt19937_64;
inline constexpr std::string_view kRngName = "mt19937_64/seed_seq-v1";

/// Independent stream for (seed, stream). Trial loops derive one per index so
/// their results do not depend on execution order.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

template <Scalar T>
struct BasicBloch {
  Vec3<T> u1;
  Vec3<T> u2;
  Mat3<T> C;

  friend bool operator==(const BasicBloch&, const BasicBloch&) = default;
};

using BlochMatrix = BasicBloch<Complex>;
using RealBloch = BasicBloch<double>;

inline constexpr std::size_t kBlochCoordinates = 15;

/// Flattened (u1, u2, C row-major).
template <Scalar T>
std::array<T, kBlochCoordinates> coordinates(const BasicBloch<T>& b) {
  std::array<T, kBlochCoordinates> x{};
  for (std::size_t i = 0; i < 3; ++i) {
    x[i] = b.u1[i];
    x[3 + i] = b.u2[i];
    for (std::size_t j = 0; j < 3; ++j) x[6 + 3 * i + j] = b.C(i, j);
  }
  return x;
}

template <Scalar T>
BasicBloch<T> from_coordinates(const std::array<T, kBlochCoordinates>& x) {
  BasicBloch<T> b;
  for (std::size_t i = 0; i < 3; ++i) {
    b.u1[i] = x[i];
    b.u2[i] = x[3 + i];
    for (std::size_t j = 0; j < 3; ++j) b.C(i, j) = x[6 + 3 * i + j];
  }
  return b;
}

template <Scalar T>
double max_abs(const BasicBloch<T>& b) {
  return std::max({max_abs(b.u1), max_abs(b.u2), max_abs(b.C)});
}

template <Scalar T>
double max_abs_diff(const BasicBloch<T>& a, const BasicBloch<T>& b) {
  return std::max({max_abs_diff(a.u1, b.u1), max_abs_diff(a.u2, b.u2), max_abs_diff(a.C, b.C)});
}

double max_imag(const BlochMatrix& b);
RealBloch real_part(const BlochMatrix& b);
BlochMatrix complexify(const RealBloch& b);

/// The real part of b if every imaginary part is at most tol.
std::optional<RealBloch> as_real(const BlochMatrix& b, double tol = kRealTol);

class DensityMatrix {
 public:
  /// Throws NotAState if |tr rho - 1| > tol, or if hermitian_required and
  /// rho differs from its adjoint by more than tol in some entry. Positivity
  /// is not checked.
  explicit DensityMatrix(const Mat4& rho, bool hermitian_required = true,
                         double tol = kStructuralTol);

  const Mat4& matrix() const { return rho_; }
  bool hermitian_required() const { return hermitian_required_; }

 private:
  Mat4 rho_;
  bool hermitian_required_;
};

bool is_special_unitary(const Mat2& u, double tol = kStructuralTol);

/// U1 (x) U2 with both factors in SU(2).
class LocalUnitary {
 public:
  LocalUnitary(const Mat2& u1, const Mat2& u2, double tol = kStructuralTol);

  const Mat2& u1() const { return u1_; }
  const Mat2& u2() const { return u2_; }
  Mat4 matrix() const;

 private:
  Mat2 u1_;
  Mat2 u2_;
};

/// Element of SO(3, C) x SO(3, C). Construction validates both factors.
class RotationPair {
 public:
  RotationPair() : g1_(CMat3::identity()), g2_(CMat3::identity()) {}
  RotationPair(const CMat3& g1, const CMat3& g2, double tol = kRotationTol);

  const CMat3& g1() const { return g1_; }
  const CMat3& g2() const { return g2_; }

  RotationPair inverse() const;

  friend RotationPair operator*(const RotationPair& a, const RotationPair& b);

 private:
  struct Unchecked {};
  RotationPair(const CMat3& g1, const CMat3& g2, Unchecked) : g1_(g1), g2_(g2) {}

  CMat3 g1_;
  CMat3 g2_;
};

/// (s0, s1, s2, s3): identity and the Pauli matrices.
const std::array<Mat2, 4>& pauli_basis();

Mat4 kron(const Mat2& a, const Mat2& b);

BlochMatrix density_to_bloch(const DensityMatrix& rho);
DensityMatrix bloch_to_density(const BlochMatrix& b);

/// R_ij = 1/2 tr(s_i U s_j U^dagger). Throws NotUnitary.
CMat3 adjoint_rotation(const Mat2& u, double tol = kStructuralTol);
RotationPair adjoint_rotation(const LocalUnitary& u);

template <Scalar T>
BasicBloch<T> act(const Mat3<T>& g1, const Mat3<T>& g2, const BasicBloch<T>& b) {
  return {g1 * b.u1, g2 * b.u2, g1 * b.C * transpose(g2)};
}

BlochMatrix act(const RotationPair& g, const BlochMatrix& b);

/// rho -> U rho U^dagger.
DensityMatrix conjugate(const LocalUnitary& u, const DensityMatrix& rho);

// ---------------------------------------------------------------------------
// Sampling

/// Haar-random SU(2): a normalized 4-vector of independent standard normals
/// read as the unit quaternion a + b i + c j + d k.
Mat2 haar_su2(Rng& rng);
LocalUnitary haar_local_unitary(Rng& rng);
RotationPair haar_rotation_pair(Rng& rng);

enum class StateKind { generic_bloch, hermitian_density, symmetric };

std::string_view to_string(StateKind kind);
std::optional<StateKind> parse_state_kind(std::string_view name);

/// rho = A A^dagger / tr(A A^dagger) with A a complex Gaussian 4x4 matrix.
DensityMatrix random_density(Rng& rng);

/// generic_bloch: real and imaginary parts of every entry uniform in [-1, 1].
/// hermitian_density: Bloch data of random_density (real).
/// symmetric: generic_bloch with u2 = u1 and C = C^t.
BlochMatrix random_state(Rng& rng, StateKind kind);

bool is_symmetric_state(const BlochMatrix& b, double tol = kStructuralTol);

}  // namespace lu2q
