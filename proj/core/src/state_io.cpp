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

#include "cvtele/state_io.hpp"

#include "cvtele/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cvtele {

namespace {

using nlohmann::json;

template <int N>
Eigen::Matrix<double, N, N> read_matrix(const json& node, const char* name)
{
    if (!node.is_array() || node.size() != N) {
        std::ostringstream msg;
        msg << "\"" << name << "\" must be a " << N << "x" << N << " array";
        throw Error(ErrorCode::ParseError, msg.str());
    }
    Eigen::Matrix<double, N, N> m;
    for (int i = 0; i < N; ++i) {
        const json& row = node[i];
        if (!row.is_array() || row.size() != N) {
            std::ostringstream msg;
            msg << "row " << i << " of \"" << name << "\" must have " << N << " entries";
            throw Error(ErrorCode::ParseError, msg.str());
        }
        for (int j = 0; j < N; ++j) {
            if (!row[j].is_number()) {
                std::ostringstream msg;
                msg << "\"" << name << "\"[" << i << "][" << j << "] is not a number";
                throw Error(ErrorCode::ParseError, msg.str());
            }
            m(i, j) = row[j].get<double>();
        }
    }
    return m;
}

} // namespace

TwoModeState parse_state_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorCode::ParseError, "state document must be a JSON object");
    }

    const bool has_v = doc.contains("V");
    const bool has_blocks = doc.contains("A") || doc.contains("B") || doc.contains("C");
    const bool has_tmss = doc.contains("tmss");
    if (int(has_v) + int(has_blocks) + int(has_tmss) != 1) {
        throw Error(ErrorCode::ParseError, "exactly one of \"V\", \"A\"/\"B\"/\"C\" or \"tmss\" is required");
    }

    Vector4 mean = Vector4::Zero();
    if (doc.contains("mean")) {
        const json& m = doc["mean"];
        if (!m.is_array() || m.size() != 4) {
            throw Error(ErrorCode::ParseError, "\"mean\" must be an array of 4 numbers");
        }
        for (int i = 0; i < 4; ++i) {
            if (!m[i].is_number()) {
                throw Error(ErrorCode::ParseError, "\"mean\" entries must be numbers");
            }
            mean(i) = m[i].get<double>();
        }
    }

    if (has_tmss) {
        const json& t = doc["tmss"];
        if (!t.is_object() || !t.contains("r") || !t["r"].is_number()) {
            throw Error(ErrorCode::ParseError, "\"tmss\" must be {\"r\": <number>}");
        }
        return TwoModeState::from_moments(two_mode_squeezed_state(t["r"].get<double>()).covariance(), mean);
    }
    if (has_v) {
        return TwoModeState::from_moments(read_matrix<4>(doc["V"], "V"), mean);
    }
    for (const char* key : {"A", "B", "C"}) {
        if (!doc.contains(key)) {
            std::ostringstream msg;
            msg << "block form needs \"A\", \"B\" and \"C\" (missing \"" << key << "\")";
            throw Error(ErrorCode::ParseError, msg.str());
        }
    }
    const TwoModeState state = make_state(read_matrix<2>(doc["A"], "A"), read_matrix<2>(doc["B"], "B"),
                                          read_matrix<2>(doc["C"], "C"));
    return TwoModeState::from_moments(state.covariance(), mean);
}

TwoModeState load_state_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open state file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

std::string state_to_json(const TwoModeState& state)
{
    json v = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) {
            row.push_back(state.covariance()(i, j));
        }
        v.push_back(row);
    }
    json doc;
    doc["ordering"] = "q_A,p_A,q_B,p_B";
    doc["V"] = v;
    return doc.dump(2);
}

} // namespace cvtele
