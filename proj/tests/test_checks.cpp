// Copyright 2026 The ssdef Authors
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

#include <gtest/gtest.h>

#include <set>

#include "ssdef/checks.hpp"

using namespace ssdef;

TEST(Catalog, UniqueNamesWithAnchors)
{
    const auto& cat = check_catalog();
    EXPECT_GE(cat.size(), 15u);
    std::set<std::string> names;
    for (const auto& c : cat) {
        EXPECT_TRUE(names.insert(c.name).second) << c.name;
        EXPECT_FALSE(c.anchor.empty()) << c.name;
        EXPECT_TRUE(c.run) << c.name;
        EXPECT_EQ(find_check(c.name), &c);
    }
    EXPECT_EQ(find_check("nope"), nullptr);
}

TEST(Run, UnknownNameThrows)
{
    EXPECT_THROW(run_checks({"aut-order", "nope"}, CheckConfig{}), precondition_error);
}

TEST(Run, ValidatesConfig)
{
    EXPECT_THROW(run_checks({"height"}, CheckConfig{0, 6, 9}), precondition_error);
    EXPECT_THROW(run_checks({"height"}, CheckConfig{3, 0, 9}), precondition_error);
    EXPECT_THROW(run_checks({"height"}, CheckConfig{3, 6, 4}), precondition_error);
}

TEST(Run, PreservesRequestedOrder)
{
    const auto rep = run_checks({"tower-degrees", "aut-order"}, CheckConfig{});
    ASSERT_EQ(rep.checks.size(), 2u);
    EXPECT_EQ(rep.checks[0].name, "tower-degrees");
    EXPECT_EQ(rep.checks[1].name, "aut-order");
    EXPECT_TRUE(rep.all_pass());
    EXPECT_EQ(rep.checks[1].details["order"], 24);
}

TEST(Run, RecordedOutcomesNeverFail)
{
    const auto rep = run_checks({"c2-identity-residue", "c2-curve-level", "c2-fixing-a1", "c2-v-proxies"}, CheckConfig{});
    for (const auto& c : rep.checks) {
        EXPECT_EQ(c.status, CheckStatus::recorded_outcome) << c.name;
    }
    EXPECT_TRUE(rep.all_pass());
}

TEST(Run, ParallelAndSerialAgree)
{
    CheckConfig serial;
    serial.parallel = false;
    const std::vector<std::string> names = {"aut-order", "torsion", "gl23", "height", "lubin-tate"};
    EXPECT_EQ(to_json(run_checks(names, CheckConfig{})).dump(), to_json(run_checks(names, serial)).dump());
}

TEST(Report, JsonShape)
{
    const auto j = to_json(run_checks({"height"}, CheckConfig{}));
    EXPECT_EQ(j["version"], report_version);
    EXPECT_EQ(j["config"]["k"], 3);
    EXPECT_EQ(j["config"]["m"], 6);
    EXPECT_EQ(j["config"]["N"], 9);
    ASSERT_EQ(j["checks"].size(), 1u);
    EXPECT_EQ(j["checks"][0]["status"], "pass");
    EXPECT_EQ(j["checks"][0]["details"]["height"], "2");
}

TEST(Report, TextHasOneLinePerCheck)
{
    const auto rep = run_checks({"height", "tower-degrees"}, CheckConfig{});
    const std::string text = to_text(rep);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
    EXPECT_NE(text.find("pass             height"), std::string::npos);
}
