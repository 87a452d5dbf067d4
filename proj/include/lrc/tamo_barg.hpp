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

// Reed–Solomon-like locally recoverable codes built from a good polynomial
// that is constant on cosets of a subgroup.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/evalcode.hpp"
#include "lrc/galois.hpp"

namespace lrc {

struct TamoBargSpec {
    FieldPtr field;
    std::size_t r = 1;
    std::size_t rho = 2;
    GroupKind subgroup_kind = GroupKind::multiplicative;
    std::vector<FieldElement> subgroup;
    std::vector<std::vector<FieldElement>> cosets;  // evaluation set, coset by coset
    std::size_t k = 0;
    Poly g;
};

/// Fills in the cosets and good polynomial. Without an explicit form the
/// power form is used for multiplicative subgroups and the annihilator for
/// additive ones.
TamoBargSpec make_tamo_barg_spec(FieldPtr field, std::size_t r, std::size_t rho, GroupKind kind,
                                 std::vector<FieldElement> subgroup, const CosetSelection& selection,
                                 std::size_t k, std::optional<GoodPolyForm> form = std::nullopt);

/// Generator row j*r + i evaluates x^i g(x)^j on the evaluation set. One
/// recovery structure: the cosets, with the point itself as local coordinate.
EvalCode construct_tb(const TamoBargSpec& spec);

/// n - k + 1 - (ceil(k/r) - 1)(rho - 1), attained by construct_tb.
std::int64_t tb_optimal_distance(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho);

}  // namespace lrc
