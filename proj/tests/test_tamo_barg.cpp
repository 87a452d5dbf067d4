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

#include "doctest.h"
#include "lrc/oracle.hpp"
#include "lrc/tamo_barg.hpp"
#include "support.hpp"

using namespace lrc;

namespace {

EvalCode example_one() {
    const auto F = Field::create(13, 1);
    return construct_tb(make_tamo_barg_spec(F, 2, 2, GroupKind::multiplicative, mult_subgroup(*F, 3),
                                            CosetSelection::first(3), 4));
}

std::vector<FieldElement> msg(std::initializer_list<std::uint32_t> v) {
    std::vector<FieldElement> out;
    for (auto x : v) out.push_back(FieldElement{x});
    return out;
}

}  // namespace

TEST_CASE("Tamo-Barg (9,4,2) over GF(13)") {
    const EvalCode code = example_one();
    CHECK(code.n == 9);
    CHECK(code.k == 4);
    CHECK(code.meta.family == "tamo-barg");
    CHECK(code.meta.d_lb == 5);
    REQUIRE(code.recovery.size() == 1);
    CHECK(code.recovery[0].groups.size() == 3);

    // Rows are 1, x, x^3, x^4 on the points 1,3,9,2,6,5,4,12,10.
    const std::vector<std::uint32_t> pts{1, 3, 9, 2, 6, 5, 4, 12, 10};
    const auto& F = code.F();
    for (std::size_t c = 0; c < 9; ++c) {
        const FieldElement x{pts[c]};
        CHECK(code.generator(0, c) == F.one());
        CHECK(code.generator(1, c) == x);
        CHECK(code.generator(2, c) == F.pow(x, 3));
        CHECK(code.generator(3, c) == F.pow(x, 4));
    }

    // e_1 encodes to the all-ones word.
    const Codeword ones = encode(code, msg({1, 0, 0, 0}));
    for (auto s : ones.symbols) CHECK(s == F.one());
    CHECK(min_distance_exhaustive(code) == 5);
}

TEST_CASE("single erasures repair from the rest of the group") {
    const EvalCode code = example_one();
    const Codeword cw = encode(code, msg({3, 1, 4, 1}));
    for (std::size_t i = 0; i < code.n; ++i) {
        const std::size_t idx[] = {i};
        const RepairOutcome res = repair_all(code, erase(cw, idx));
        CHECK(res.complete());
        CHECK(res.codeword == cw);
        REQUIRE(res.steps.size() == 1);
        CHECK(res.steps[0].filled == std::vector<std::size_t>{i});
        CHECK(res.steps[0].interpolant.degree() <= 1);
    }
}

TEST_CASE("repair errors") {
    const EvalCode code = example_one();
    const Codeword cw = encode(code, msg({1, 2, 3, 4}));
    const std::size_t two[] = {0, 1};
    Codeword two_erased = erase(cw, two);
    CHECK_ERRC(repair_group_in_place(code, two_erased, 0, 0), Errc::TooManyErasuresInGroup);
    const RepairOutcome stuck = repair_all(code, erase(cw, two));
    CHECK(stuck.still_erased == std::vector<std::size_t>{0, 1});

    CHECK_ERRC(encode(code, msg({1, 2, 3})), Errc::LengthMismatch);
    const std::size_t far[] = {9};
    CHECK_ERRC(erase(cw, far), Errc::IndexOutOfRange);
}

TEST_CASE("construction preconditions") {
    const auto F = Field::create(13, 1);
    const auto H = mult_subgroup(*F, 3);
    // r must divide k.
    CHECK_ERRC(construct_tb(make_tamo_barg_spec(F, 2, 2, GroupKind::multiplicative, H, CosetSelection::all(), 3)),
               Errc::DivisibilityViolation);
    // |H| = r + rho - 1.
    CHECK_ERRC(construct_tb(make_tamo_barg_spec(F, 3, 2, GroupKind::multiplicative, H, CosetSelection::all(), 3)),
               Errc::DivisibilityViolation);
    // k/r blocks need at least that many cosets.
    CHECK_ERRC(construct_tb(make_tamo_barg_spec(F, 2, 2, GroupKind::multiplicative, H, CosetSelection::first(2), 6)),
               Errc::DegreeOverflow);

    TamoBargSpec spec = make_tamo_barg_spec(F, 2, 2, GroupKind::multiplicative, H, CosetSelection::all(), 4);
    spec.g = poly_add(*F, spec.g, Poly::monomial(F->one(), 1));
    CHECK_ERRC(construct_tb(spec), Errc::NotConstantOnCosets);
}

TEST_CASE("(12,4,2,rho=3) code corrects two erasures per group") {
    const auto F = Field::create(13, 1);
    const EvalCode code = construct_tb(
        make_tamo_barg_spec(F, 2, 3, GroupKind::multiplicative, mult_subgroup(*F, 4), CosetSelection::all(), 4));
    CHECK(code.n == 12);
    CHECK(code.meta.d_lb == 7);
    CHECK(tb_optimal_distance(12, 4, 2, 3) == 7);
    const Codeword cw = encode(code, msg({5, 0, 11, 2}));
    for (const auto& g : code.recovery[0].groups) {
        for (std::size_t a = 0; a < g.size(); ++a) {
            for (std::size_t b = a + 1; b < g.size(); ++b) {
                const std::size_t idx[] = {g.coordinates[a], g.coordinates[b]};
                const RepairOutcome res = repair_all(code, erase(cw, idx));
                CHECK(res.codeword == cw);
            }
        }
    }
    // With one erasure a group still has a redundant known symbol.
    Codeword bad = cw;
    const std::size_t c0 = code.recovery[0].groups[0].coordinates[0];
    const std::size_t c3 = code.recovery[0].groups[0].coordinates[3];
    bad.symbols[c3] = F->add(bad.symbols[c3], F->one());
    const std::size_t one[] = {c0};
    Codeword bad_erased = erase(bad, one);
    CHECK_ERRC(repair_group_in_place(code, bad_erased, 0, 0), Errc::InconsistentGroup);

    const auto rep = verify_local_distance(code, 0, 3);
    CHECK(rep.status == VerifyStatus::proved);
    CHECK(rep.min_local_distance == 3);
}

TEST_CASE("additive Tamo-Barg code over GF(16)") {
    const auto F = Field::create(2, 4);
    const std::vector<FieldElement> basis{{1}, {2}};
    const auto H = additive_subgroup(*F, basis);
    const EvalCode code =
        construct_tb(make_tamo_barg_spec(F, 3, 2, GroupKind::additive, H, CosetSelection::all(), 3));
    CHECK(code.n == 16);
    CHECK(code.meta.d_lb == 14);
    CHECK(code.meta.params.at("additive") == 1);
    CHECK(min_distance_exhaustive(code) == static_cast<std::size_t>(code.meta.d_lb));
    CHECK(verify_locality(code, 0).status == VerifyStatus::proved);
}

TEST_CASE("structural validation rejects tampered codes") {
    EvalCode code = example_one();
    validate(code);
    code.generator(1, 4) = code.F().add(code.generator(1, 4), code.F().one());
    validate_shape(code);
    CHECK_ERRC(check_structural_law(code), Errc::InvalidCode);

    EvalCode overlap = example_one();
    overlap.recovery[0].groups[1].coordinates[0] = 0;
    CHECK_ERRC(validate_shape(overlap), Errc::InvalidCode);

    EvalCode dup_local = example_one();
    dup_local.recovery[0].groups[0].local_coords[1] = dup_local.recovery[0].groups[0].local_coords[0];
    CHECK_ERRC(validate_shape(dup_local), Errc::InvalidCode);
}

TEST_CASE("puncturing drops whole groups and marks cut structures") {
    const EvalCode code = example_one();
    const std::size_t whole[] = {3, 4, 5};
    const EvalCode p = puncture(code, whole);
    CHECK(p.n == 6);
    CHECK(p.recovery[0].groups.size() == 2);
    CHECK_FALSE(p.recovery[0].partial);
    CHECK(p.recovery[0].groups[1].coordinates == std::vector<std::size_t>{3, 4, 5});
    CHECK(p.meta.d_lb == 2);

    const std::size_t cut[] = {0};
    const EvalCode q = puncture(code, cut);
    CHECK(q.recovery[0].partial);
    CHECK(q.recovery[0].groups.size() == 2);
}
