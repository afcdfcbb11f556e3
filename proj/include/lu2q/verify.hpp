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

// Seeded property checks behind `lu2q verify`. Every trial draws from its own
// stream make_rng(seed, property_id << 32 | trial), so the report does not
// depend on the order in which trials run.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace lu2q {

enum class Suite { identities, invariance, canonical, independence, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct PropertyResult {
  std::string suite;
  std::string name;
  /// Upper bound: every measured error must be <= tol, worst is the maximum.
  /// Lower bound: every measurement must be > tol, worst is the minimum.
  bool lower_bound = false;
  double tol = 0.0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst = 0.0;

  void record(double value);
  bool passed() const { return trials > 0 && failures == 0; }
};

struct RankRange {
  int min = 0;
  int max = 0;
};

struct VerifyReport {
  Suite suite = Suite::all;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<PropertyResult> properties;
  std::optional<RankRange> rank_general9;
  std::optional<RankRange> rank_symmetric6;

  bool passed() const;
};

VerifyReport run_verification(Suite suite, std::size_t trials, std::uint64_t seed);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace lu2q
