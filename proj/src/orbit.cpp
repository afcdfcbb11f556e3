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

#include "lu2q/orbit.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace lu2q {

namespace {

CanonicalForm reduce(const BlochMatrix& b, double generic_tol, int input, bool symmetric) {
  try {
    return symmetric ? canonical_form_symmetric(b, generic_tol)
                     : canonical_form_general(b, generic_tol);
  } catch (const NonGeneric& e) {
    throw NonGeneric("input " + std::to_string(input) + " is not generic (" +
                         e.report().failures() + ")",
                     e.report(), input);
  }
}

// Diagonal Weyl elements (same signs on both qubits) sit at 5k.
bool is_diagonal_index(std::size_t k) { return k % 5 == 0; }

EquivalenceVerdict decide(const BlochMatrix& b1, const BlochMatrix& b2, double tol,
                          double generic_tol, bool symmetric) {
  if (!(tol > 0.0)) throw std::invalid_argument("equivalent: tol must be > 0");
  const CanonicalForm c1 = reduce(b1, generic_tol, 1, symmetric);
  const CanonicalForm c2 = reduce(b2, generic_tol, 2, symmetric);

  const auto residuals = weyl_residuals(c1.canon, c2.canon);
  WeylMatch best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t k = 0; k < residuals.size(); ++k) {
    if (symmetric && !is_diagonal_index(k)) continue;
    if (residuals[k] < best.residual) best = {k, residuals[k]};
  }

  const double cutoff = tol * std::max(1.0, max_abs(b2));
  EquivalenceVerdict verdict;
  verdict.residual = best.residual;
  if (best.residual > cutoff) return verdict;

  const WeylElement& w = weyl_group_general()[best.index];
  RotationPair witness = c2.witness.inverse() * w.pair() * c1.witness;
  const double residual = max_abs_diff(act(witness, b1), b2);
  verdict.residual = residual;
  if (residual > cutoff) return verdict;

  verdict.equivalent = true;
  verdict.witness = std::move(witness);
  verdict.weyl_index = best.index;
  return verdict;
}

// Sum of c_ij^2 is invariant: (g1 C g2^t) : (g1 C g2^t) = C : C.
Complex extra_general(const BlochMatrix& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += b.C(i, j) * b.C(i, j);
  return s;
}

Complex extra_symmetric(const BlochMatrix& b) { return b.C(0, 0) + b.C(1, 1) + b.C(2, 2); }

// Invariant values (plus the extra dependent one, last) at b.
std::vector<Complex> evaluate(InvariantMap map, const BlochMatrix& b) {
  std::vector<Complex> out;
  if (map == InvariantMap::general9) {
    const auto f = invariants9(b);
    out.assign(f.f.begin(), f.f.end());
    out.push_back(extra_general(b));
  } else {
    // Perturbations keep the data exactly symmetric, so skip the check.
    const auto f = invariants6_symmetric(b, std::numeric_limits<double>::infinity());
    out.assign(f.f.begin(), f.f.end());
    out.push_back(extra_symmetric(b));
  }
  return out;
}

// Moves coordinate k of the chosen parametrisation by delta.
void perturb(InvariantMap map, BlochMatrix& b, std::size_t k, double delta) {
  if (map == InvariantMap::general9) {
    auto x = coordinates(b);
    x[k] += delta;
    b = from_coordinates(x);
    return;
  }
  if (k < 3) {
    b.u1[k] += delta;
    b.u2[k] += delta;
    return;
  }
  static constexpr std::size_t kUpper[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  const auto [i, j] = kUpper[k - 3];
  b.C(i, j) += delta;
  if (i != j) b.C(j, i) += delta;
}

Eigen::MatrixXcd jacobian_with_extra(InvariantMap map, const BlochMatrix& b, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("invariant_jacobian: h must be > 0");
  const auto rows = static_cast<Eigen::Index>(invariant_count(map) + 1);
  const auto cols = static_cast<Eigen::Index>(coordinate_count(map));
  Eigen::MatrixXcd jac(rows, cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    BlochMatrix plus = b;
    BlochMatrix minus = b;
    perturb(map, plus, static_cast<std::size_t>(k), h);
    perturb(map, minus, static_cast<std::size_t>(k), -h);
    const auto fp = evaluate(map, plus);
    const auto fm = evaluate(map, minus);
    for (Eigen::Index r = 0; r < rows; ++r) {
      jac(r, k) = (fp[static_cast<std::size_t>(r)] - fm[static_cast<std::size_t>(r)]) / (2.0 * h);
    }
  }
  return jac;
}

std::vector<double> singular_values(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

}  // namespace

EquivalenceVerdict equivalent(const BlochMatrix& b1, const BlochMatrix& b2, double tol,
                              double generic_tol) {
  return decide(b1, b2, tol, generic_tol, false);
}

EquivalenceVerdict equivalent_symmetric(const BlochMatrix& b1, const BlochMatrix& b2, double tol,
                                        double generic_tol) {
  if (!is_symmetric_state(b1)) throw NotSymmetric("input 1 is not symmetric");
  if (!is_symmetric_state(b2)) throw NotSymmetric("input 2 is not symmetric");
  return decide(b1, b2, tol, generic_tol, true);
}

std::size_t invariant_count(InvariantMap map) { return map == InvariantMap::general9 ? 9 : 6; }

std::size_t coordinate_count(InvariantMap map) {
  return map == InvariantMap::general9 ? kBlochCoordinates : 9;
}

Eigen::MatrixXcd invariant_jacobian(InvariantMap map, const BlochMatrix& b, double h) {
  const Eigen::MatrixXcd full = jacobian_with_extra(map, b, h);
  return full.topRows(static_cast<Eigen::Index>(invariant_count(map)));
}

JacobianSpectrum jacobian_spectrum(InvariantMap map, const BlochMatrix& b, double h,
                                   double tol_sv, double generic_tol) {
  if (map == InvariantMap::symmetric6 && !is_symmetric_state(b)) {
    throw NotSymmetric("jacobian_spectrum: state is not symmetric");
  }
  const auto report = genericity(b, generic_tol);
  if (!report.generic()) {
    throw NonGeneric("jacobian_spectrum: state is not generic (" + report.failures() + ")", report);
  }

  Eigen::MatrixXcd full = jacobian_with_extra(map, b, h);
  const auto n = invariant_count(map);
  // Row equilibration: the invariants have degrees 2..9, so raw gradient rows
  // span many orders of magnitude at small coordinates. Scaling a row by a
  // nonzero constant leaves the rank unchanged.
  for (Eigen::Index r = 0; r < full.rows(); ++r) {
    const double len = full.row(r).norm();
    if (len > 0.0) full.row(r) /= len;
  }

  JacobianSpectrum result;
  result.singular_values = singular_values(full.topRows(static_cast<Eigen::Index>(n)));
  result.augmented_singular_values = singular_values(full);
  const double largest = result.singular_values.front();
  for (double s : result.singular_values) {
    if (s > tol_sv * largest) ++result.rank;
  }
  const double next = result.augmented_singular_values[n];
  result.gap = next > 0.0 ? result.augmented_singular_values[n - 1] / next
                        : std::numeric_limits<double>::infinity();
  return result;
}

int jacobian_rank(InvariantMap map, const BlochMatrix& b, double h, double tol_sv) {
  return jacobian_spectrum(map, b, h, tol_sv).rank;
}

}  // namespace lu2q
