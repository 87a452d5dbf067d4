// Copyright 2026 The lrc-curves Authors
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

// JSON for codes and oracle reports, and the plain-text codeword format
// (one packed symbol per line, "?" for an erasure).

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lrc/evalcode.hpp"
#include "lrc/oracle.hpp"

namespace lrc::io {

using nlohmann::json;

json field_to_json(const Field& field);
FieldPtr field_from_json(const json& j);

json code_to_json(const EvalCode& code);
/// Checks the shape only (validate_shape), so a tampered generator still
/// loads and can be handed to the oracle. Throws ParseError or InvalidCode.
EvalCode code_from_json(const json& j);

std::string dump(const json& j);
json parse_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

std::string write_codeword(const Codeword& cw);
Codeword read_codeword(const std::string& text, const Field& field);
/// Comma- or newline-separated packed symbols; erasures are not allowed.
std::vector<FieldElement> read_symbols(const std::string& text, const Field& field);

/// "n=27 k=6 r=2 d_lb=17", or "... r1=2 r2=3 ..." with two structures.
std::string summary_line(const EvalCode& code);

/// Constant term first: "8 + 3*x + x^2".
std::string format_poly(const Poly& f);

json to_json(const LocalityReport& r);
json to_json(const LocalDistanceReport& r);
json to_json(const AvailabilityReport& r);
json to_json(const WeightDistribution& w);

}  // namespace lrc::io
