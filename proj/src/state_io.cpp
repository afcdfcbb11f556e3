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

#include "lu2q/state_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lu2q/tolerances.hpp"

namespace lu2q {

namespace {

using nlohmann::json;

Complex parse_number(const json& j, const std::string& where) {
  if (j.is_number()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw MalformedInput(where + ": non-finite number");
    return x;
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw MalformedInput(where + ": non-finite number");
    }
    return {re, im};
  }
  throw MalformedInput(where + ": expected a number or an [re, im] pair");
}

const json& require_array(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) {
    throw MalformedInput(where + ": expected an array of length " + std::to_string(n));
  }
  return j;
}

CVec3 parse_vec(const json& j, const std::string& where) {
  require_array(j, 3, where);
  CVec3 v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = parse_number(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

CMat3 parse_mat3(const json& j, const std::string& where) {
  require_array(j, 3, where);
  CMat3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string row = where + "[" + std::to_string(i) + "]";
    require_array(j[i], 3, row);
    for (std::size_t k = 0; k < 3; ++k) {
      m(i, k) = parse_number(j[i][k], row + "[" + std::to_string(k) + "]");
    }
  }
  return m;
}

Mat4 parse_mat4(const json& j) {
  require_array(j, 4, "payload");
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string row = "payload[" + std::to_string(i) + "]";
    require_array(j[i], 4, row);
    for (std::size_t k = 0; k < 4; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          parse_number(j[i][k], row + "[" + std::to_string(k) + "]");
    }
  }
  return m;
}

StateMetadata parse_metadata(const json& doc) {
  StateMetadata md;
  const auto it = doc.find("metadata");
  if (it == doc.end() || it->is_null()) return md;
  if (!it->is_object()) throw MalformedInput("metadata: expected an object");
  if (auto l = it->find("label"); l != it->end()) {
    if (!l->is_string()) throw MalformedInput("metadata.label: expected a string");
    md.label = l->get<std::string>();
  }
  for (const char* key : {"seed", "index"}) {
    auto f = it->find(key);
    if (f == it->end()) continue;
    if (!f->is_number_unsigned()) {
      throw MalformedInput(std::string("metadata.") + key + ": expected a non-negative integer");
    }
    (std::string(key) == "seed" ? md.seed : md.index) = f->get<std::uint64_t>();
  }
  return md;
}

}  // namespace

StateFile make_state_file(const BlochMatrix& b, StateMetadata metadata) {
  StateFile s;
  s.kind = StateFileKind::bloch;
  s.bloch = b;
  s.metadata = std::move(metadata);
  return s;
}

StateFile make_state_file(const DensityMatrix& rho, StateMetadata metadata) {
  StateFile s;
  s.kind = StateFileKind::density;
  s.density = rho;
  s.bloch = density_to_bloch(rho);
  s.metadata = std::move(metadata);
  return s;
}

StateFile parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedInput("state file must be a JSON object");

  if (auto s = doc.find("schema"); s != doc.end()) {
    if (!s->is_string() || s->get<std::string>() != kStateSchema) {
      throw MalformedInput("unsupported schema (expected " + std::string(kStateSchema) + ")");
    }
  }
  const auto kind = doc.find("kind");
  if (kind == doc.end() || !kind->is_string()) throw MalformedInput("missing \"kind\"");
  const auto payload = doc.find("payload");
  if (payload == doc.end()) throw MalformedInput("missing \"payload\"");

  StateMetadata md = parse_metadata(doc);
  const std::string k = kind->get<std::string>();
  if (k == "density") {
    const Mat4 rho = parse_mat4(*payload);
    const bool hermitian = (rho - rho.adjoint()).cwiseAbs().maxCoeff() <= kFileTraceTol;
    try {
      return make_state_file(DensityMatrix(rho, hermitian, kFileTraceTol), std::move(md));
    } catch (const NotAState& e) {
      throw MalformedInput(std::string("payload: ") + e.what());
    }
  }
  if (k == "bloch") {
    if (!payload->is_object()) throw MalformedInput("payload: expected an object with u1, u2, C");
    for (const char* key : {"u1", "u2", "C"}) {
      if (!payload->contains(key)) throw MalformedInput(std::string("payload: missing ") + key);
    }
    BlochMatrix b;
    b.u1 = parse_vec(payload->at("u1"), "payload.u1");
    b.u2 = parse_vec(payload->at("u2"), "payload.u2");
    b.C = parse_mat3(payload->at("C"), "payload.C");
    return make_state_file(b, std::move(md));
  }
  throw MalformedInput("kind must be \"density\" or \"bloch\", got \"" + k + "\"");
}

StateFile read_state_file(const std::filesystem::path& path, std::string* bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  StateFile s = parse_state(text);
  if (bytes) *bytes = std::move(text);
  return s;
}

nlohmann::json complex_to_json(const Complex& z) {
  // x + 0.0 maps -0.0 to +0.0 so reports do not depend on the sign of zero.
  return json::array({z.real() + 0.0, z.imag() + 0.0});
}

nlohmann::json vec_to_json(const CVec3& v) {
  return json::array({complex_to_json(v[0]), complex_to_json(v[1]), complex_to_json(v[2])});
}

nlohmann::json mat_to_json(const CMat3& m) {
  return json::array({vec_to_json(m.row(0)), vec_to_json(m.row(1)), vec_to_json(m.row(2))});
}

nlohmann::json to_json(const StateFile& s) {
  json doc;
  doc["schema"] = std::string(kStateSchema);
  if (s.kind == StateFileKind::density) {
    doc["kind"] = "density";
    json rows = json::array();
    const Mat4& m = s.density->matrix();
    for (int i = 0; i < 4; ++i) {
      json row = json::array();
      for (int k = 0; k < 4; ++k) row.push_back(complex_to_json(m(i, k)));
      rows.push_back(std::move(row));
    }
    doc["payload"] = std::move(rows);
  } else {
    doc["kind"] = "bloch";
    doc["payload"] = {{"u1", vec_to_json(s.bloch.u1)},
                      {"u2", vec_to_json(s.bloch.u2)},
                      {"C", mat_to_json(s.bloch.C)}};
  }
  json md = json::object();
  if (s.metadata.label) md["label"] = *s.metadata.label;
  if (s.metadata.seed) md["seed"] = *s.metadata.seed;
  if (s.metadata.index) md["index"] = *s.metadata.index;
  if (!md.empty()) doc["metadata"] = std::move(md);
  return doc;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace lu2q
