// Copyright 2026 The cvtele Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvtele/errors.hpp"
#include "cvtele/state_io.hpp"

#include "support/expect.hpp"
#include "support/fixtures.hpp"
#include "support/random_states.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

using namespace cvtele;
using cvtele::test::code_of;

namespace {

std::filesystem::path fixture(const std::string& name)
{
    const char* dir = std::getenv("CVTELE_FIXTURES");
    return std::filesystem::path(dir ? dir : "fixtures") / name;
}

} // namespace

TEST(StateJson, FullMatrix)
{
    const auto s = parse_state_json(R"({"V": [[3,0,1,0],[0,3,0,-1],[1,0,3,0],[0,-1,0,3]]})");
    EXPECT_EQ(s, symmetric_state(3.0, 3.0, 1.0, -1.0));
}

TEST(StateJson, Blocks)
{
    const auto s = parse_state_json(R"({"A": [[2,0],[0,2]], "B": [[2,0],[0,2]], "C": [[1.5,0.1],[-0.2,-1.5]]})");
    EXPECT_EQ(s.entries().k_1, 0.1);
    EXPECT_EQ(s.entries().k_2, -0.2);
}

TEST(StateJson, SqueezedShorthand)
{
    EXPECT_EQ(parse_state_json(R"({"tmss": {"r": 1}})"), two_mode_squeezed_state(1.0));
}

TEST(StateJson, ZeroMeanAccepted)
{
    EXPECT_NO_THROW(parse_state_json(R"({"tmss": {"r": 0.5}, "mean": [0, 0, 0, 0]})"));
}

TEST(StateJson, Errors)
{
    const auto parse = [](const char* text) { return code_of([&] { parse_state_json(text); }); };
    EXPECT_EQ(parse("not json"), ErrorCode::ParseError);
    EXPECT_EQ(parse("[1, 2]"), ErrorCode::ParseError);
    EXPECT_EQ(parse("{}"), ErrorCode::ParseError);
    EXPECT_EQ(parse(R"({"tmss": {"r": 1}, "V": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})"), ErrorCode::ParseError);
    EXPECT_EQ(parse(R"({"V": [[1,0,0],[0,1,0],[0,0,1]]})"), ErrorCode::ParseError);
    EXPECT_EQ(parse(R"({"V": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,"x"]]})"), ErrorCode::ParseError);
    EXPECT_EQ(parse(R"({"A": [[1,0],[0,1]], "B": [[1,0],[0,1]]})"), ErrorCode::ParseError);
    EXPECT_EQ(parse(R"({"tmss": {}})"), ErrorCode::ParseError);
    EXPECT_EQ(parse(R"({"tmss": {"r": 1}, "mean": [0, 0]})"), ErrorCode::ParseError);
    EXPECT_EQ(parse(R"({"tmss": {"r": 1}, "mean": [0, 0, 0.5, 0]})"), ErrorCode::NonZeroMean);
    EXPECT_EQ(parse(R"({"A": [[1,0.2],[0,1]], "B": [[1,0],[0,1]], "C": [[0,0],[0,0]]})"), ErrorCode::NonSymmetricBlock);
    EXPECT_EQ(parse(R"({"V": [[1,0,0.3,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})"), ErrorCode::NonSymmetricBlock);
}

TEST(StateJson, FixtureFiles)
{
    EXPECT_EQ(load_state_file(fixture("vacuum.json")), vacuum_state());
    EXPECT_EQ(load_state_file(fixture("asymmetric.json")), test::asymmetric_state());
    EXPECT_EQ(load_state_file(fixture("tmss_r1.json")), two_mode_squeezed_state(1.0));
    EXPECT_EQ(code_of([] { load_state_file(fixture("missing.json")); }), ErrorCode::ParseError);
}

TEST(StateJson, RoundTripIsExact)
{
    test::RandomStates gen(151);
    for (int i = 0; i < 500; ++i) {
        const auto s = gen.physical();
        const std::string text = state_to_json(s);
        EXPECT_NE(text.find("\"ordering\": \"q_A,p_A,q_B,p_B\""), std::string::npos);
        EXPECT_EQ(parse_state_json(text), s);
    }
}
