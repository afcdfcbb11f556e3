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

#include "lu2q/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "lu2q/canonical.hpp"
#include "lu2q/orbit.hpp"
#include "lu2q/version.hpp"

namespace lu2q {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Complex uniform_complex(Rng& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double re = unif(rng);
  const double im = unif(rng);
  return {re, im};
}

CVec3 uniform_vec(Rng& rng) {
  CVec3 v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = uniform_complex(rng);
  return v;
}

double rel_err(Complex a, Complex b, double scale) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), scale});
}

double rel_err(const CVec3& a, const CVec3& b, double scale) {
  return max_abs_diff(a, b) / std::max({max_abs(a), max_abs(b), scale});
}

template <std::size_t N>
double invariant_err(const BasicInvariants<Complex, N>& a, const BasicInvariants<Complex, N>& b,
                     const std::array<int, N>& degrees, double m) {
  double worst = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    worst = std::max(worst, rel_err(a.f[k], b.f[k], std::pow(m, degrees[k])));
  }
  return worst;
}

// Draws until the state passes the default genericity test.
BlochMatrix generic_state(Rng& rng, StateKind kind) {
  for (;;) {
    BlochMatrix b = random_state(rng, kind);
    if (genericity(b).generic()) return b;
  }
}

// Alternates complex generic data with physical states across trials.
StateKind mixed_kind(std::size_t trial) {
  return trial % 2 == 0 ? StateKind::generic_bloch : StateKind::hermitian_density;
}

struct Runner {
  std::uint64_t seed;
  std::size_t trials;
  std::vector<PropertyResult>& out;
  std::uint64_t next_id = 1;

  void run(std::string suite, std::string name, double tol, bool lower_bound,
           const std::function<double(Rng&, std::size_t)>& trial_fn, std::size_t count = 0) {
    PropertyResult p;
    p.suite = std::move(suite);
    p.name = std::move(name);
    p.tol = tol;
    p.lower_bound = lower_bound;
    p.worst = lower_bound ? kInf : 0.0;
    const std::uint64_t id = next_id++;
    const std::size_t n = count ? count : trials;
    for (std::size_t t = 0; t < n; ++t) {
      Rng rng = make_rng(seed, (id << 32) | t);
      double value = 0.0;
      try {
        value = trial_fn(rng, t);
      } catch (const std::exception&) {
        value = lower_bound ? -kInf : kInf;
      }
      p.record(value);
    }
    out.push_back(std::move(p));
  }
};

void identities(Runner& r) {
  const std::string s = "identities";
  r.run(s, "grassmann a x (b x c) = (a.c)b - (a.b)c", 1e-12, false, [](Rng& rng, std::size_t) {
    const CVec3 a = uniform_vec(rng), b = uniform_vec(rng), c = uniform_vec(rng);
    return rel_err(cross(a, cross(b, c)), dot(a, c) * b - dot(a, b) * c,
                   max_abs(a) * max_abs(b) * max_abs(c));
  });
  r.run(s, "binet-cauchy (a x b).(c x d)", 1e-12, false, [](Rng& rng, std::size_t) {
    const CVec3 a = uniform_vec(rng), b = uniform_vec(rng), c = uniform_vec(rng),
                d = uniform_vec(rng);
    return rel_err(dot(cross(a, b), cross(c, d)), dot(a, c) * dot(b, d) - dot(b, c) * dot(a, d),
                   max_abs(a) * max_abs(b) * max_abs(c) * max_abs(d));
  });
  r.run(s, "norm(v)^2 = v.v off the branch cut", 1e-12, false, [](Rng& rng, std::size_t) {
    CVec3 v = uniform_vec(rng);
    Complex vv = dot(v, v);
    while (vv.imag() == 0.0 && vv.real() < 0.0) {
      v = uniform_vec(rng);
      vv = dot(v, v);
    }
    const Complex n = norm(v);
    return rel_err(n * n, vv, max_abs(v) * max_abs(v));
  });
  r.run(s, "dot symmetric, cross antisymmetric and orthogonal", 1e-12, false,
        [](Rng& rng, std::size_t) {
          const CVec3 a = uniform_vec(rng), b = uniform_vec(rng);
          const double scale = max_abs(a) * max_abs(b);
          return std::max({std::abs(dot(a, b) - dot(b, a)) / scale,
                           max_abs(cross(a, b) + cross(b, a)) / scale,
                           std::abs(dot(cross(a, b), a)) / (scale * max_abs(a))});
        });
  r.run(s, "w.w = (u.u)(v.v) for v = u x Cu, w = u x v", 1e-12, false,
        [](Rng& rng, std::size_t) {
          const BlochMatrix b = random_state(rng, StateKind::generic_bloch);
          const CVec3 v = cross(b.u1, b.C * b.u1);
          const CVec3 w = cross(b.u1, v);
          return rel_err(dot(w, w), dot(b.u1, b.u1) * dot(v, v), std::pow(max_abs(b), 8));
        });
  r.run(s, "w1.w1 = f1 f3 and w2.w2 = f2 f4", 1e-10, false, [](Rng& rng, std::size_t t) {
    const BlochMatrix b = random_state(rng, mixed_kind(t));
    const auto d = derived_frame(b);
    const auto f = invariants9(b);
    const double scale = std::pow(max_abs(b), 8);
    return std::max(rel_err(dot(d.w1, d.w1), f(1) * f(3), scale),
                    rel_err(dot(d.w2, d.w2), f(2) * f(4), scale));
  });
  r.run(s, "w1.Cu2 = -f3 and u1.Cw2 = -f4", 1e-10, false, [](Rng& rng, std::size_t t) {
    const BlochMatrix b = random_state(rng, mixed_kind(t));
    const auto d = derived_frame(b);
    const auto f = invariants9(b);
    const double scale = std::pow(max_abs(b), 6);
    return std::max(rel_err(dot(d.w1, b.C * b.u2), -f(3), scale),
                    rel_err(dot(b.u1, b.C * d.w2), -f(4), scale));
  });
  r.run(s, "symmetric u.Cw = -f2", 1e-10, false, [](Rng& rng, std::size_t) {
    const BlochMatrix b = random_state(rng, StateKind::symmetric);
    const CVec3 v = cross(b.u1, b.C * b.u1);
    const CVec3 w = cross(b.u1, v);
    const auto f = invariants6_symmetric(b);
    return rel_err(dot(b.u1, b.C * w), -f(2), std::pow(max_abs(b), 6));
  });
}

void invariance(Runner& r) {
  const std::string s = "invariance";
  r.run(s, "density -> bloch -> density round trip", 1e-12, false, [](Rng& rng, std::size_t) {
    const DensityMatrix rho = random_density(rng);
    const DensityMatrix back = bloch_to_density(density_to_bloch(rho));
    return (back.matrix() - rho.matrix()).cwiseAbs().maxCoeff();
  });
  r.run(s, "bloch -> density -> bloch round trip", 1e-12, false, [](Rng& rng, std::size_t) {
    const BlochMatrix b = random_state(rng, StateKind::generic_bloch);
    return max_abs_diff(density_to_bloch(bloch_to_density(b)), b);
  });
  r.run(
      s, "bell state maps to C = diag(1, -1, 1)", 1e-12, false,
      [](Rng&, std::size_t) {
        Eigen::Vector4cd phi(1.0, 0.0, 0.0, 1.0);
        phi /= std::sqrt(2.0);
        const BlochMatrix b = density_to_bloch(DensityMatrix(phi * phi.adjoint()));
        BlochMatrix expected;
        expected.C = CMat3::diag(1.0, -1.0, 1.0);
        return max_abs_diff(b, expected);
      },
      1);
  r.run(s, "adjoint rotation is a homomorphism", 1e-10, false, [](Rng& rng, std::size_t) {
    const Mat2 u = haar_su2(rng);
    const Mat2 v = haar_su2(rng);
    return max_abs_diff(adjoint_rotation(Mat2(u * v)), adjoint_rotation(u) * adjoint_rotation(v));
  });
  r.run(s, "local conjugation commutes with the rotation action", 1e-10, false,
        [](Rng& rng, std::size_t) {
          const DensityMatrix rho = random_density(rng);
          const LocalUnitary u = haar_local_unitary(rng);
          return max_abs_diff(density_to_bloch(conjugate(u, rho)),
                              act(adjoint_rotation(u), density_to_bloch(rho)));
        });
  r.run(s, "hermitian states have real bloch data", 1e-10, false, [](Rng& rng, std::size_t) {
    return max_imag(density_to_bloch(random_density(rng)));
  });
  r.run(s, "f1..f9 invariant under rotation pairs", 1e-9, false, [](Rng& rng, std::size_t t) {
    const BlochMatrix b = random_state(rng, mixed_kind(t));
    const RotationPair g = haar_rotation_pair(rng);
    return invariant_err(invariants9(act(g, b)), invariants9(b), kDegrees9, max_abs(b));
  });
  r.run(s, "symmetric f1..f6 invariant under diagonal pairs", 1e-9, false,
        [](Rng& rng, std::size_t) {
          const BlochMatrix b = random_state(rng, StateKind::symmetric);
          const CMat3 g = haar_rotation_pair(rng).g1();
          return invariant_err(invariants6_symmetric(act(RotationPair(g, g), b)),
                               invariants6_symmetric(b), kDegrees6, max_abs(b));
        });
}

void canonical(Runner& r) {
  const std::string s = "canonical";
  r.run(s, "section zero pattern", 1e-8, false, [](Rng& rng, std::size_t t) {
    return section_residual(canonical_form_general(generic_state(rng, mixed_kind(t))).canon);
  });
  r.run(s, "canonical = act(witness, input)", 1e-9, false, [](Rng& rng, std::size_t t) {
    const BlochMatrix b = generic_state(rng, mixed_kind(t));
    const CanonicalForm c = canonical_form_general(b);
    return max_abs_diff(act(c.witness, b), c.canon);
  });
  r.run(s, "frame rotations are special orthogonal", 1e-9, false, [](Rng& rng, std::size_t t) {
    const CanonicalForm c = canonical_form_general(generic_state(rng, mixed_kind(t)));
    double worst = 0.0;
    for (const CMat3& g : {c.witness.g1(), c.witness.g2()}) {
      worst = std::max({worst, max_abs_diff(transpose(g) * g, CMat3::identity()),
                        std::abs(det(g) - 1.0)});
    }
    return worst;
  });
  r.run(s, "invariant reconstruction matches up to one Weyl element", 1e-7, false,
        [](Rng& rng, std::size_t t) {
          const BlochMatrix b = generic_state(rng, mixed_kind(t));
          const BlochMatrix canon = canonical_form_general(b).canon;
          const BlochMatrix rebuilt = canonical_from_invariants9(fingerprint9(b));
          const auto res = weyl_residuals(canon, rebuilt);
          const auto matches = std::count_if(res.begin(), res.end(),
                                             [](double x) { return x <= 1e-7; });
          return matches == 1 ? *std::min_element(res.begin(), res.end()) : kInf;
        });
  r.run(s, "invariants of reconstructed section", 1e-9, false, [](Rng& rng, std::size_t) {
    InvariantVector9 f;
    for (auto& x : f.f) x = uniform_complex(rng);
    const auto back = invariants9(canonical_from_invariants9(f));
    double worst = 0.0;
    for (std::size_t k = 0; k < 9; ++k) worst = std::max(worst, rel_err(back.f[k], f.f[k], 1.0));
    return worst;
  });
  r.run(s, "Weyl elements preserve invariants", 1e-10, false, [](Rng& rng, std::size_t t) {
    const BlochMatrix canon = canonical_form_general(generic_state(rng, mixed_kind(t))).canon;
    const auto f = invariants9(canon);
    double worst = 0.0;
    for (const auto& w : weyl_group_general()) {
      worst = std::max(worst, invariant_err(invariants9(w.apply(canon)), f, kDegrees9,
                                            max_abs(canon)));
    }
    return worst;
  });
  r.run(s, "rotated copies are equivalent (witness residual)", 1e-8, false,
        [](Rng& rng, std::size_t t) {
          const BlochMatrix b = generic_state(rng, mixed_kind(t));
          const BlochMatrix b2 = act(haar_rotation_pair(rng), b);
          const auto v = equivalent(b, b2);
          return v.equivalent ? max_abs_diff(act(*v.witness, b), b2) : kInf;
        });
  r.run(s, "independent states are distinct (canonical mismatch)", 1e-8, true,
        [](Rng& rng, std::size_t t) {
          const BlochMatrix b1 = generic_state(rng, mixed_kind(t));
          const BlochMatrix b2 = generic_state(rng, mixed_kind(t));
          const auto v = equivalent(b1, b2);
          return v.equivalent ? 0.0 : v.residual;
        });
  r.run(s, "independent fingerprints differ", 1e-3, true, [](Rng& rng, std::size_t t) {
    const BlochMatrix b1 = generic_state(rng, mixed_kind(t));
    const BlochMatrix b2 = generic_state(rng, mixed_kind(t));
    const double m = std::max(max_abs(b1), max_abs(b2));
    return invariant_err(fingerprint9(b1), fingerprint9(b2), kDegrees9, m);
  });
  r.run(s, "symmetric rotated copies are equivalent", 1e-8, false, [](Rng& rng, std::size_t) {
    const BlochMatrix b = generic_state(rng, StateKind::symmetric);
    const CMat3 g = haar_rotation_pair(rng).g1();
    const BlochMatrix b2 = act(RotationPair(g, g), b);
    const auto v = equivalent_symmetric(b, b2);
    return v.equivalent ? max_abs_diff(act(*v.witness, b), b2) : kInf;
  });
}

void independence(Runner& r, VerifyReport& report) {
  const std::string s = "independence";
  RankRange r9{100, 0};
  RankRange r6{100, 0};
  auto track = [](RankRange& range, int rank) {
    range.min = std::min(range.min, rank);
    range.max = std::max(range.max, rank);
  };
  r.run(s, "general9 jacobian rank deficit", 0.0, false, [&](Rng& rng, std::size_t t) {
    const auto spec = jacobian_spectrum(InvariantMap::general9, generic_state(rng, mixed_kind(t)));
    track(r9, spec.rank);
    return std::abs(9.0 - spec.rank);
  });
  r.run(s, "general9 singular value gap", 1e3, true, [](Rng& rng, std::size_t t) {
    return jacobian_spectrum(InvariantMap::general9, generic_state(rng, mixed_kind(t))).gap;
  });
  r.run(s, "symmetric6 jacobian rank deficit", 0.0, false, [&](Rng& rng, std::size_t) {
    const auto spec =
        jacobian_spectrum(InvariantMap::symmetric6, generic_state(rng, StateKind::symmetric));
    track(r6, spec.rank);
    return std::abs(6.0 - spec.rank);
  });
  r.run(s, "symmetric6 singular value gap", 1e3, true, [](Rng& rng, std::size_t) {
    return jacobian_spectrum(InvariantMap::symmetric6, generic_state(rng, StateKind::symmetric))
        .gap;
  });
  if (r9.max > 0) report.rank_general9 = r9;
  if (r6.max > 0) report.rank_symmetric6 = r6;
}

}  // namespace

void PropertyResult::record(double value) {
  if (trials++ == 0) worst = value;
  if (lower_bound) {
    worst = std::min(worst, value);
    if (!(value > tol)) ++failures;
  } else {
    worst = std::max(worst, value);
    if (!(value <= tol)) ++failures;
  }
}

bool VerifyReport::passed() const {
  return !properties.empty() &&
         std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed(); });
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::identities, Suite::invariance, Suite::canonical, Suite::independence,
                  Suite::all}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::identities:
      return "identities";
    case Suite::invariance:
      return "invariance";
    case Suite::canonical:
      return "canonical";
    case Suite::independence:
      return "independence";
    case Suite::all:
      return "all";
  }
  return "unknown";
}

VerifyReport run_verification(Suite suite, std::size_t trials, std::uint64_t seed) {
  VerifyReport report;
  report.suite = suite;
  report.seed = seed;
  report.trials = trials;
  if (trials == 0) return report;

  Runner runner{seed, trials, report.properties};
  // Property ids are fixed per suite so a single-suite run reproduces the
  // same numbers as the corresponding part of --suite all.
  auto enabled = [&](Suite s) { return suite == Suite::all || suite == s; };
  runner.next_id = 100;
  if (enabled(Suite::identities)) identities(runner);
  runner.next_id = 200;
  if (enabled(Suite::invariance)) invariance(runner);
  runner.next_id = 300;
  if (enabled(Suite::canonical)) canonical(runner);
  runner.next_id = 400;
  if (enabled(Suite::independence)) independence(runner, report);
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  using nlohmann::json;
  json props = json::array();
  for (const auto& p : report.properties) {
    props.push_back({{"suite", p.suite},
                     {"name", p.name},
                     {"bound", p.lower_bound ? "lower" : "upper"},
                     {"tol", p.tol},
                     {"trials", p.trials},
                     {"failures", p.failures},
                     {"worst", p.worst},
                     {"passed", p.passed()}});
  }
  json doc = {{"schema", "lu2q.verify/1"},
              {"tool", "lu2q"},
              {"version", std::string(kVersion)},
              {"rng", std::string(kRngName)},
              {"seed", report.seed},
              {"trials", report.trials},
              {"suite", std::string(to_string(report.suite))},
              {"properties", std::move(props)}};
  auto rank_json = [](const std::optional<RankRange>& r) -> json {
    if (!r) return nullptr;
    return {{"min", r->min}, {"max", r->max}};
  };
  doc["ranks"] = {{"general9", rank_json(report.rank_general9)},
                  {"symmetric6", rank_json(report.rank_symmetric6)}};
  doc["passed"] = report.passed();
  return doc;
}

}  // namespace lu2q
