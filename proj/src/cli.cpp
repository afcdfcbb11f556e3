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

#include "lu2q/cli.hpp"

#include <charconv>
#include <cstring>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "lu2q/canonical.hpp"
#include "lu2q/orbit.hpp"
#include "lu2q/state_io.hpp"
#include "lu2q/verify.hpp"
#include "lu2q/version.hpp"

namespace lu2q::cli {

namespace {

using nlohmann::json;

// Shortest representation that round-trips.
std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::optional<double> env_double(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  double x = 0.0;
  const auto res = std::from_chars(v, v + std::strlen(v), x);
  if (res.ec != std::errc() || *res.ptr != '\0' || !(x > 0.0)) {
    throw MalformedInput(std::string(name) + " must be a positive number");
  }
  return x;
}

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  std::uint64_t x = 0;
  const auto res = std::from_chars(v, v + std::strlen(v), x);
  if (res.ec != std::errc() || *res.ptr != '\0') {
    throw MalformedInput(std::string(name) + " must be a non-negative integer");
  }
  return x;
}

GenericityReport report_for(const BlochMatrix& b, double tol) {
  if (auto r = as_real(b)) return genericity(*r, tol);
  return genericity(b, tol);
}

json genericity_json(const GenericityReport& r) {
  return {{"generic", r.generic()},
          {"u1_ok", r.u1_ok},
          {"u2_ok", r.u2_ok},
          {"v1_ok", r.v1_ok},
          {"v2_ok", r.v2_ok},
          {"magnitudes", r.magnitudes},
          {"threshold", r.threshold}};
}

template <std::size_t N>
json invariants_json(const BasicInvariants<Complex, N>& f) {
  json a = json::array();
  for (const auto& z : f.f) a.push_back(complex_to_json(z));
  return a;
}

json fingerprint_json(const BlochMatrix& b, bool symmetric) {
  return symmetric ? invariants_json(fingerprint6(b)) : invariants_json(fingerprint9(b));
}

// ---------------------------------------------------------------------------

struct InvariantsOptions {
  std::string input;
  bool symmetric = false;
  double tol = kGenericTol;
  std::string format = "json";
};

int cmd_invariants(const InvariantsOptions& o, std::ostream& out, std::ostream& err) {
  std::string bytes;
  const StateFile s = read_state_file(o.input, &bytes);
  const bool symmetric = is_symmetric_state(s.bloch);
  if (o.symmetric && !symmetric) {
    err << "error: --symmetric given but the state is not symmetric (u1 != u2 or C != C^t)\n";
    return kNotSymmetric;
  }
  const GenericityReport report = report_for(s.bloch, o.tol);
  const json values = fingerprint_json(s.bloch, o.symmetric);
  const std::string kind = o.symmetric ? "symmetric6" : "general9";
  const std::string hash = sha256_hex(bytes);

  if (o.format == "csv") {
    out << "input_sha256,kind,generic";
    for (std::size_t k = 1; k <= values.size(); ++k) out << ",f" << k << "_re,f" << k << "_im";
    out << '\n' << hash << ',' << kind << ',' << (report.generic() ? "true" : "false");
    for (const auto& z : values) {
      out << ',' << format_double(z[0].get<double>()) << ',' << format_double(z[1].get<double>());
    }
    out << '\n';
  } else {
    json doc = {{"schema", "lu2q.fingerprint/1"},
                {"tool", "lu2q"},
                {"version", std::string(kVersion)},
                {"input_sha256", hash},
                {"kind", kind},
                {"symmetric", symmetric},
                {"tol", o.tol},
                {"invariants", values},
                {"genericity", genericity_json(report)}};
    if (s.metadata.label) doc["label"] = *s.metadata.label;
    out << doc.dump(2) << '\n';
  }

  if (!report.generic()) {
    err << "note: state is not generic (" << report.failures()
        << "); the invariants do not separate orbits here\n";
    return kNonGeneric;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct EquivOptions {
  std::string input1;
  std::string input2;
  double tol = kEquivalenceTol;
  double generic_tol = kGenericTol;
  bool symmetric = false;
  std::string witness_out;
  std::string format = "text";
};

json witness_json(const EquivalenceVerdict& v) {
  return {{"schema", "lu2q.witness/1"},
          {"g1", mat_to_json(v.witness->g1())},
          {"g2", mat_to_json(v.witness->g2())},
          {"weyl_index", *v.weyl_index},
          {"residual", v.residual}};
}

int cmd_equiv(const EquivOptions& o, std::ostream& out, std::ostream& err) {
  std::string bytes1;
  std::string bytes2;
  const StateFile s1 = read_state_file(o.input1, &bytes1);
  const StateFile s2 = read_state_file(o.input2, &bytes2);
  if (o.symmetric) {
    for (const auto* s : {&s1, &s2}) {
      if (!is_symmetric_state(s->bloch)) {
        err << "error: input " << (s == &s1 ? 1 : 2) << " is not symmetric\n";
        return kNotSymmetric;
      }
    }
  }

  json doc = {{"schema", "lu2q.equiv/1"},
              {"tool", "lu2q"},
              {"version", std::string(kVersion)},
              {"inputs", {sha256_hex(bytes1), sha256_hex(bytes2)}},
              {"tol", o.tol}};

  EquivalenceVerdict v;
  try {
    v = o.symmetric ? equivalent_symmetric(s1.bloch, s2.bloch, o.tol, o.generic_tol)
                    : equivalent(s1.bloch, s2.bloch, o.tol, o.generic_tol);
  } catch (const NonGeneric& e) {
    const json inv1 = fingerprint_json(s1.bloch, o.symmetric);
    const json inv2 = fingerprint_json(s2.bloch, o.symmetric);
    if (o.format == "json") {
      doc["verdict"] = "NON-GENERIC";
      doc["nongeneric"] = {{"input", e.input()},
                           {"failing", e.report().failures()},
                           {"genericity", genericity_json(e.report())}};
      doc["invariants"] = {inv1, inv2};
      out << doc.dump(2) << '\n';
    } else {
      out << "NON-GENERIC\n"
          << "input " << e.input() << '\n'
          << "failing " << e.report().failures() << '\n'
          << "invariants1 " << inv1.dump() << '\n'
          << "invariants2 " << inv2.dump() << '\n';
    }
    err << "note: " << e.what() << "; equivalence is only decided for generic states\n";
    return kNonGeneric;
  }

  const std::string verdict = v.equivalent ? "EQUIVALENT" : "DISTINCT";
  if (o.format == "json") {
    doc["verdict"] = verdict;
    doc["residual"] = v.residual;
    doc["weyl_index"] = v.weyl_index ? json(*v.weyl_index) : json(nullptr);
    if (v.equivalent) doc["witness"] = witness_json(v);
    out << doc.dump(2) << '\n';
  } else {
    out << verdict << '\n' << "residual " << format_double(v.residual) << '\n';
    if (v.weyl_index) out << "weyl_index " << *v.weyl_index << '\n';
  }

  if (!o.witness_out.empty()) {
    if (v.equivalent) {
      std::ofstream f(o.witness_out);
      if (!f) {
        err << "error: cannot write " << o.witness_out << '\n';
        return kMalformed;
      }
      f << witness_json(v).dump(2) << '\n';
    } else {
      err << "note: no witness written; the states are distinct\n";
    }
  }
  return v.equivalent ? kOk : kDistinct;
}

// ---------------------------------------------------------------------------

struct RandomOptions {
  std::string kind = "generic-bloch";
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string orbit_of;
  std::string out_dir;
};

int cmd_random(const RandomOptions& o, std::ostream& out, std::ostream& err) {
  const auto kind = parse_state_kind(o.kind);
  if (!kind) {
    err << "error: unknown --kind " << o.kind << '\n';
    return kMalformed;
  }
  std::optional<StateFile> source;
  std::string source_label;
  if (!o.orbit_of.empty()) {
    std::string bytes;
    source = read_state_file(o.orbit_of, &bytes);
    source_label = source->metadata.label.value_or("sha256:" + sha256_hex(bytes).substr(0, 16));
  }
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);

  for (std::size_t i = 0; i < o.count; ++i) {
    Rng rng = make_rng(o.seed, i);
    StateMetadata md{std::nullopt, o.seed, i};
    StateFile s;
    if (source) {
      md.label = "orbit of " + source_label;
      if (source->kind == StateFileKind::density) {
        s = make_state_file(conjugate(haar_local_unitary(rng), *source->density), md);
      } else {
        s = make_state_file(act(haar_rotation_pair(rng), source->bloch), md);
      }
    } else {
      md.label = "random " + std::string(to_string(*kind));
      s = *kind == StateKind::hermitian_density ? make_state_file(random_density(rng), md)
                                                : make_state_file(random_state(rng, *kind), md);
    }

    if (o.out_dir.empty()) {
      out << to_json(s).dump() << '\n';
    } else {
      char name[32];
      std::snprintf(name, sizeof(name), "state-%04zu.json", i);
      const auto path = std::filesystem::path(o.out_dir) / name;
      std::ofstream f(path);
      if (!f) {
        err << "error: cannot write " << path.string() << '\n';
        return kMalformed;
      }
      f << to_json(s).dump(2) << '\n';
      out << path.string() << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string suite = "all";
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream&) {
  const VerifyReport report = run_verification(*parse_suite(o.suite), o.trials, o.seed);
  out << to_json(report).dump(2) << '\n';
  return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  double default_tol = 0.0;
  std::uint64_t default_seed = 0;
  try {
    default_tol = env_double(kTolEnv).value_or(kGenericTol);
    default_seed = env_u64(kSeedEnv).value_or(0);
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }

  CLI::App app{"Local-unitary invariants, canonical forms and orbit equivalence for two-qubit "
               "states",
               "lu2q"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  InvariantsOptions inv;
  inv.tol = default_tol;
  auto* inv_cmd = app.add_subcommand("invariants", "Print the invariant fingerprint of a state");
  inv_cmd->add_option("input", inv.input, "State file")->required();
  inv_cmd->add_flag("--symmetric", inv.symmetric, "Six symmetric invariants (diagonal group)");
  inv_cmd->add_option("--tol", inv.tol, "Genericity tolerance")->check(CLI::PositiveNumber);
  inv_cmd->add_option("--format", inv.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  EquivOptions eq;
  eq.tol = default_tol;
  auto* eq_cmd = app.add_subcommand("equiv", "Decide local-unitary equivalence of two states");
  eq_cmd->add_option("input1", eq.input1, "First state file")->required();
  eq_cmd->add_option("input2", eq.input2, "Second state file")->required();
  eq_cmd->add_option("--tol", eq.tol, "Entrywise residual tolerance")->check(CLI::PositiveNumber);
  eq_cmd->add_option("--generic-tol", eq.generic_tol, "Genericity tolerance")
      ->check(CLI::PositiveNumber);
  eq_cmd->add_flag("--symmetric", eq.symmetric, "Symmetric states under the diagonal group");
  eq_cmd->add_option("--witness-out", eq.witness_out, "Write the witness rotation pair here");
  eq_cmd->add_option("--format", eq.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  RandomOptions rnd;
  rnd.seed = default_seed;
  auto* rnd_cmd = app.add_subcommand("random", "Generate seeded random states");
  rnd_cmd->add_option("--kind", rnd.kind, "generic-bloch | hermitian-density | symmetric")
      ->check(CLI::IsMember({"generic-bloch", "hermitian-density", "symmetric"}));
  rnd_cmd->add_option("--seed", rnd.seed, "RNG seed");
  rnd_cmd->add_option("--count", rnd.count, "Number of states")->check(CLI::PositiveNumber);
  rnd_cmd->add_option("--orbit-of", rnd.orbit_of, "Emit Haar-rotated copies of this state")
      ->check(CLI::ExistingFile);
  rnd_cmd->add_option("--out-dir", rnd.out_dir, "Write state-NNNN.json files here");

  VerifyOptions ver;
  ver.seed = default_seed;
  auto* ver_cmd = app.add_subcommand("verify", "Run the seeded property suites");
  ver_cmd->add_option("--trials", ver.trials, "Trials per property")->check(CLI::PositiveNumber);
  ver_cmd->add_option("--seed", ver.seed, "RNG seed");
  ver_cmd->add_option("--suite", ver.suite, "identities | invariance | canonical | independence | all")
      ->check(CLI::IsMember({"identities", "invariance", "canonical", "independence", "all"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*inv_cmd) return cmd_invariants(inv, out, err);
    if (*eq_cmd) return cmd_equiv(eq, out, err);
    if (*rnd_cmd) return cmd_random(rnd, out, err);
    if (*ver_cmd) return cmd_verify(ver, out, err);
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const NotSymmetric& e) {
    err << "error: " << e.what() << '\n';
    return kNotSymmetric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return kMalformed;
}

}  // namespace lu2q::cli
