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

// Fixed-size 3-vector and 3x3-matrix algebra over the reals and the complex
// numbers.
//
// The dot product here is the symmetric *bilinear* form
//     a . b = a1 b1 + a2 b2 + a3 b3
// with no complex conjugation. It is the complexified Killing form on sl2, not
// an inner product: nonzero vectors such as (1, i, 0) have a . a = 0. The
// Hermitian product is deliberately not provided under any similar name.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <type_traits>

namespace lu2q {

using Complex = std::complex<double>;

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Complex>;

namespace detail {

inline bool finite(double x) { return std::isfinite(x); }
inline bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace detail

template <Scalar T>
class Vec3 {
 public:
  using value_type = T;

  constexpr Vec3() = default;

  /// Throws std::domain_error if any component is NaN or infinite.
  Vec3(T x, T y, T z) : c_{x, y, z} {
    if (!detail::finite(x) || !detail::finite(y) || !detail::finite(z)) {
      throw std::domain_error("Vec3: non-finite component");
    }
  }

  static Vec3 unit(std::size_t axis) {
    Vec3 e;
    e.c_.at(axis) = T(1);
    return e;
  }

  T& operator[](std::size_t i) { return c_[i]; }
  const T& operator[](std::size_t i) const { return c_[i]; }

  Vec3& operator+=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec3& operator*=(T s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  Vec3& operator/=(T s) {
    for (auto& x : c_) x /= s;
    return *this;
  }

  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator-(Vec3 a) { return a *= T(-1); }
  friend Vec3 operator*(T s, Vec3 a) { return a *= s; }
  friend Vec3 operator*(Vec3 a, T s) { return a *= s; }
  friend Vec3 operator/(Vec3 a, T s) { return a /= s; }
  friend bool operator==(const Vec3&, const Vec3&) = default;

  const std::array<T, 3>& data() const { return c_; }

 private:
  std::array<T, 3> c_{};
};

template <Scalar T>
class Mat3 {
 public:
  using value_type = T;

  constexpr Mat3() = default;

  /// Row-major construction. Throws std::domain_error on non-finite entries.
  explicit Mat3(const std::array<std::array<T, 3>, 3>& rows) : m_(rows) {
    for (const auto& r : m_) {
      for (const auto& x : r) {
        if (!detail::finite(x)) throw std::domain_error("Mat3: non-finite entry");
      }
    }
  }

  static Mat3 identity() { return diag(T(1), T(1), T(1)); }

  static Mat3 diag(T a, T b, T c) {
    Mat3 m;
    m.m_[0][0] = a;
    m.m_[1][1] = b;
    m.m_[2][2] = c;
    return m;
  }

  static Mat3 from_rows(const Vec3<T>& r0, const Vec3<T>& r1, const Vec3<T>& r2) {
    Mat3 m;
    for (std::size_t j = 0; j < 3; ++j) {
      m.m_[0][j] = r0[j];
      m.m_[1][j] = r1[j];
      m.m_[2][j] = r2[j];
    }
    return m;
  }

  T& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

  Vec3<T> row(std::size_t i) const { return make(m_[i]); }
  Vec3<T> col(std::size_t j) const {
    Vec3<T> v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = m_[i][j];
    return v;
  }

  Mat3& operator+=(const Mat3& o) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m_[i][j] += o.m_[i][j];
    return *this;
  }
  Mat3& operator-=(const Mat3& o) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m_[i][j] -= o.m_[i][j];
    return *this;
  }
  Mat3& operator*=(T s) {
    for (auto& r : m_)
      for (auto& x : r) x *= s;
    return *this;
  }

  friend Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
  friend Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
  friend Mat3 operator*(T s, Mat3 a) { return a *= s; }
  friend bool operator==(const Mat3&, const Mat3&) = default;

 private:
  static Vec3<T> make(const std::array<T, 3>& r) {
    Vec3<T> v;
    for (std::size_t j = 0; j < 3; ++j) v[j] = r[j];
    return v;
  }

  std::array<std::array<T, 3>, 3> m_{};
};

using CVec3 = Vec3<Complex>;
using RVec3 = Vec3<double>;
using CMat3 = Mat3<Complex>;
using RMat3 = Mat3<double>;

// ---------------------------------------------------------------------------
// Vector operations

template <Scalar T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <Scalar T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  Vec3<T> c;
  c[0] = a[1] * b[2] - a[2] * b[1];
  c[1] = a[2] * b[0] - a[0] * b[2];
  c[2] = a[0] * b[1] - a[1] * b[0];
  return c;
}

/// Principal square root of dot(v, v). Complex-valued in general and zero on
/// isotropic vectors; for real vectors this is the Euclidean length.
template <Scalar T>
T norm(const Vec3<T>& v) {
  return std::sqrt(dot(v, v));
}

// ---------------------------------------------------------------------------
// Matrix operations

template <Scalar T>
Vec3<T> matvec(const Mat3<T>& m, const Vec3<T>& v) {
  Vec3<T> r;
  for (std::size_t i = 0; i < 3; ++i) {
    r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
  }
  return r;
}

template <Scalar T>
Mat3<T> transpose(const Mat3<T>& m) {
  Mat3<T> t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t(i, j) = m(j, i);
  return t;
}

template <Scalar T>
Mat3<T> matmul(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return c;
}

template <Scalar T>
Vec3<T> operator*(const Mat3<T>& m, const Vec3<T>& v) {
  return matvec(m, v);
}

template <Scalar T>
Mat3<T> operator*(const Mat3<T>& a, const Mat3<T>& b) {
  return matmul(a, b);
}

template <Scalar T>
T det(const Mat3<T>& m) {
  return dot(m.row(0), cross(m.row(1), m.row(2)));
}

// ---------------------------------------------------------------------------
// Norms and comparisons (all max-entry magnitudes)

template <Scalar T>
double max_abs(const Vec3<T>& v) {
  double r = 0.0;
  for (std::size_t i = 0; i < 3; ++i) r = std::max(r, std::abs(v[i]));
  return r;
}

template <Scalar T>
double max_abs(const Mat3<T>& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

template <Scalar T>
double max_abs_diff(const Vec3<T>& a, const Vec3<T>& b) {
  return max_abs(a - b);
}

template <Scalar T>
double max_abs_diff(const Mat3<T>& a, const Mat3<T>& b) {
  return max_abs(a - b);
}

/// True iff max|M^t M - I| <= tol and |det M - 1| <= tol. Orthogonality is
/// with respect to the bilinear form, so complex rotations qualify.
template <Scalar T>
bool is_special_orthogonal(const Mat3<T>& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_special_orthogonal: tol must be > 0");
  return max_abs_diff(transpose(m) * m, Mat3<T>::identity()) <= tol &&
         std::abs(det(m) - T(1)) <= tol;
}

// ---------------------------------------------------------------------------
// Real/complex conversion

inline CVec3 complexify(const RVec3& v) { return CVec3(v[0], v[1], v[2]); }

inline CMat3 complexify(const RMat3& m) {
  CMat3 c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = m(i, j);
  return c;
}

inline double max_imag(const CVec3& v) {
  double r = 0.0;
  for (std::size_t i = 0; i < 3; ++i) r = std::max(r, std::abs(v[i].imag()));
  return r;
}

inline double max_imag(const CMat3& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r = std::max(r, std::abs(m(i, j).imag()));
  return r;
}

inline RVec3 real_part(const CVec3& v) { return RVec3(v[0].real(), v[1].real(), v[2].real()); }

inline RMat3 real_part(const CMat3& m) {
  RMat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = m(i, j).real();
  return r;
}

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Vec3<T>& v) {
  return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ')';
}

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Mat3<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < 3; ++i) {
    os << (i ? ", " : "") << m.row(i);
  }
  return os << ']';
}

}  // namespace lu2q
