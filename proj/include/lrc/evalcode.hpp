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

// Evaluation codes with one or more recovery structures, encoding, erasure
// tracking and interpolation-based local repair.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrc/galois.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

/// One group of coordinates whose restriction of every codeword is the
/// evaluation of a polynomial of degree <= local_degree_bound at local_coords.
struct RepairGroup {
    std::vector<std::size_t> coordinates;
    std::vector<FieldElement> local_coords;
    std::size_t local_degree_bound = 0;

    std::size_t size() const noexcept { return coordinates.size(); }

    friend bool operator==(const RepairGroup&, const RepairGroup&) = default;
};

/// A partition of the coordinates into repair groups of size r + rho - 1.
/// `partial` marks a structure that no longer covers every coordinate.
struct RecoveryStructure {
    std::vector<RepairGroup> groups;
    std::size_t r = 1;
    std::size_t rho = 2;
    std::string label;
    bool partial = false;

    /// Index of the group that holds `coordinate`, if any.
    std::optional<std::size_t> group_of(std::size_t coordinate) const;

    friend bool operator==(const RecoveryStructure&, const RecoveryStructure&) = default;
};

struct CodeMeta {
    std::string family;
    std::size_t r = 1;
    std::size_t rho = 2;
    std::optional<std::int64_t> ell;
    std::optional<std::int64_t> h;
    std::int64_t d_lb = 1;
    /// Family-specific integers (q0, r1, r2, m, ...).
    std::map<std::string, std::int64_t> params;

    friend bool operator==(const CodeMeta&, const CodeMeta&) = default;
};

struct EvalCode {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix generator;  // k x n
    std::vector<RecoveryStructure> recovery;
    CodeMeta meta;

    const Field& F() const noexcept { return *field; }
};

bool operator==(const EvalCode& lhs, const EvalCode& rhs);

struct Codeword {
    std::vector<FieldElement> symbols;
    std::vector<bool> erased;

    Codeword() = default;
    explicit Codeword(std::vector<FieldElement> s) : symbols(std::move(s)), erased(symbols.size(), false) {}

    std::size_t size() const noexcept { return symbols.size(); }
    std::size_t erasure_count() const noexcept;
    std::vector<std::size_t> erased_indices() const;

    friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Dimensions, index ranges, disjointness/coverage and group sizes. Throws
/// Errc::InvalidCode. Does not check the polynomial law or the rank.
void validate_shape(const EvalCode& code);

/// Every generator row restricted to every group lies on a polynomial of
/// degree <= local_degree_bound in the local coordinate.
void check_structural_law(const EvalCode& code);

/// validate_shape + check_structural_law + rank(generator) == k.
void validate(const EvalCode& code);

Codeword encode(const EvalCode& code, std::span<const FieldElement> message);

/// Marks the indices erased; their symbols are zeroed.
Codeword erase(Codeword cw, std::span<const std::size_t> indices);

struct GroupRepair {
    std::size_t structure = 0;
    std::size_t group = 0;
    std::vector<std::size_t> filled;
    Poly interpolant;
};

/// Repairs one group in place. Interpolates through the first r known
/// coordinates and checks the remaining known ones against the interpolant.
GroupRepair repair_group_in_place(const EvalCode& code, Codeword& cw, std::size_t structure, std::size_t group);

Codeword local_repair_group(const EvalCode& code, const Codeword& cw, std::size_t structure, std::size_t group);

struct RepairOutcome {
    Codeword codeword;
    std::vector<std::size_t> still_erased;
    std::vector<GroupRepair> steps;

    bool complete() const noexcept { return still_erased.empty(); }
};

/// Sweeps structures in declared order and groups in index order, repairing
/// every group with at most rho-1 erasures, until nothing changes.
RepairOutcome repair_all(const EvalCode& code, Codeword cw);

/// Drops the given coordinates. Groups fully inside the punctured set vanish,
/// groups hit partially are dropped and their structure is marked partial.
EvalCode puncture(const EvalCode& code, std::span<const std::size_t> coordinates);

}  // namespace lrc
