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

#include "gtest/gtest.h"

namespace lu2q {
namespace {

TEST(Suite, Names) {
  for (auto s : {Suite::identities, Suite::invariance, Suite::canonical, Suite::independence,
                 Suite::all})
    EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_FALSE(parse_suite("everything").has_value());
}

TEST(PropertyResult, Bounds) {
  PropertyResult upper{"s", "p", false, 1e-3};
  upper.record(1e-4);
  EXPECT_TRUE(upper.passed());
  upper.record(2e-3);
  EXPECT_FALSE(upper.passed());
  EXPECT_EQ(upper.worst, 2e-3);

  PropertyResult lower{"s", "p", true, 1.0};
  lower.record(5.0);
  lower.record(3.0);
  EXPECT_TRUE(lower.passed());
  EXPECT_EQ(lower.worst, 3.0);
  lower.record(0.5);
  EXPECT_FALSE(lower.passed());

  EXPECT_FALSE((PropertyResult{"s", "p", false, 1.0}).passed());
}

TEST(RunVerification, AllSuitesPass) {
  const VerifyReport r = run_verification(Suite::all, 200, 7);
  for (const auto& p : r.properties) EXPECT_TRUE(p.passed()) << p.suite << "/" << p.name << " worst " << p.worst;
  ASSERT_TRUE(r.rank_general9.has_value());
  EXPECT_EQ(r.rank_general9->min, 9);
  EXPECT_EQ(r.rank_general9->max, 9);
  EXPECT_EQ(r.rank_symmetric6->min, 6);
  EXPECT_TRUE(r.passed());
}

TEST(RunVerification, Deterministic) {
  const auto a = to_json(run_verification(Suite::canonical, 50, 3));
  const auto b = to_json(run_verification(Suite::canonical, 50, 3));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["schema"], "lu2q.verify/1");
}

TEST(RunVerification, SuiteSelection) {
  const VerifyReport r = run_verification(Suite::identities, 10, 1);
  for (const auto& p : r.properties) EXPECT_EQ(p.suite, "identities");
  EXPECT_FALSE(r.properties.empty());
  EXPECT_FALSE(r.rank_general9.has_value());
}

}  // namespace
}  // namespace lu2q
