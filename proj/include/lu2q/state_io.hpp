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

// State files.
//
//   {
//     "schema": "lu2q.state/1",             (optional on input)
//     "kind": "density" | "bloch",
//     "payload": <density: 4x4 nested array>
//              | <bloch: {"u1": [3], "u2": [3], "C": [[3], [3], [3]]}>,
//     "metadata": {"label": "...", "seed": 42, "index": 0}   (optional)
//   }
//
// Every number is either a bare real or an [re, im] pair. Writers always
// emit pairs.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "lu2q/errors.hpp"
#include "lu2q/quantum.hpp"

namespace lu2q {

inline constexpr std::string_view kStateSchema = "lu2q.state/1";

class MalformedInput : public Error {
 public:
  using Error::Error;
};

enum class StateFileKind { density, bloch };

struct StateMetadata {
  std::optional<std::string> label;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> index;
};

struct StateFile {
  StateFileKind kind = StateFileKind::bloch;
  /// Present iff kind == density.
  std::optional<DensityMatrix> density;
  /// Always populated; for density files this is density_to_bloch(*density).
  BlochMatrix bloch;
  StateMetadata metadata;
};

StateFile make_state_file(const BlochMatrix& b, StateMetadata metadata = {});
StateFile make_state_file(const DensityMatrix& rho, StateMetadata metadata = {});

/// Throws MalformedInput on syntax errors, wrong shapes, non-finite numbers or
/// a density trace off by more than 1e-8. Density payloads Hermitian within
/// that tolerance are flagged hermitian_required.
StateFile parse_state(std::string_view text);

/// Reads and parses; also returns the raw bytes for hashing.
StateFile read_state_file(const std::filesystem::path& path, std::string* bytes = nullptr);

nlohmann::json to_json(const StateFile& s);

nlohmann::json complex_to_json(const Complex& z);
nlohmann::json vec_to_json(const CVec3& v);
nlohmann::json mat_to_json(const CMat3& m);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace lu2q
