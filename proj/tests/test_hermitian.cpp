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

#include <set>

#include "doctest.h"
#include "lrc/bounds.hpp"
#include "lrc/hermitian.hpp"
#include "lrc/oracle.hpp"
#include "support.hpp"

using namespace lrc;

namespace {

// Exponent of alpha, or -1 for zero.
FieldElement ax(const Field& F, int e) { return e < 0 ? F.zero() : F.exp(e); }

std::optional<std::size_t> find_point(const HermitianData& H, FieldElement x, FieldElement y) {
    for (std::size_t i = 0; i < H.points.size(); ++i) {
        if (H.points[i].x == x && H.points[i].y == y) return i;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("point counts, fibers and transversality") {
    for (std::uint32_t q0 : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        CAPTURE(q0);
        const HermitianData H = hermitian_points(q0);
        const Field& F = *H.field;
        CHECK(F.size() == q0 * q0);
        CHECK(H.points.size() == q0 * q0 * q0);
        CHECK(H.trace_zero.size() == q0);
        for (const auto& pt : H.points) {
            CHECK(F.add(F.pow(pt.x, q0), pt.x) == F.pow(pt.y, q0 + 1));
        }
        CHECK(std::is_sorted(H.points.begin(), H.points.end(), [](const CurvePoint& a, const CurvePoint& b) {
            return std::pair(a.y, a.x) < std::pair(b.y, b.x);
        }));
        for (const auto& f : H.y_fibers) CHECK(f.size() == q0);
        std::vector<int> in_y(H.points.size());
        for (std::uint32_t y = 0; y < F.size(); ++y) {
            for (auto i : H.y_fibers[y]) in_y[i] = static_cast<int>(y);
        }
        for (std::uint32_t x = 0; x < F.size(); ++x) {
            const auto& fib = H.x_fibers[x];
            CHECK(fib.size() == (H.x_in_trace_zero(FieldElement{x}) ? 1u : q0 + 1));
            std::set<int> ys;
            for (auto i : fib) ys.insert(in_y[i]);
            CHECK(ys.size() == fib.size());
        }
    }
    CHECK_ERRC(hermitian_points(6), Errc::UnsupportedSize);
    CHECK_ERRC(hermitian_points(17), Errc::UnsupportedSize);
}

TEST_CASE("the Hermitian curve over GF(9)") {
    const HermitianData H = hermitian_points(3);
    const Field& F = *H.field;
    CHECK(H.points.size() == 27);
    CHECK(H.trace_zero == std::vector<FieldElement>{F.zero(), ax(F, 2), ax(F, 6)});
    for (int e : {-1, 2, 6}) CHECK(find_point(H, ax(F, e), F.zero()));
}

TEST_CASE("encoding and repairing on the GF(9) curve") {
    const EvalCode code = construct_y_projection_code(3, 2);
    const HermitianData H = hermitian_points(3);
    const Field& F = code.F();
    CHECK(code.n == 27);
    CHECK(code.k == 6);
    CHECK(code.meta.d_lb == 17);
    CHECK(code.meta.h == 4);

    std::vector<FieldElement> m;
    for (int e = 0; e < 6; ++e) m.push_back(F.exp(e));
    const Codeword cw = encode(code, m);

    // {y exponent, x exponent, value exponent}; -1 stands for zero.
    const int table[][3] = {
        {-1, 6, 2}, {-1, 2, 3}, {-1, -1, 0},
        {0, 4, 7},  {0, 3, 3},  {0, 1, -1},
        {1, 7, 1},  {1, 5, 6},  {1, 0, 0},
        {2, 4, 3},  {2, 3, 7},  {2, 1, -1},
        {3, 7, 7},  {3, 5, 4},  {3, 0, 6},
        {4, 4, 5},  {4, 3, 1},  {4, 1, -1},
        {5, 7, 5},  {5, 5, 2},  {5, 0, 4},
        {6, 4, 5},  {6, 3, 1},  {6, 1, -1},
        {7, 7, -1}, {7, 5, -1}, {7, 0, -1},
    };
    std::set<std::size_t> covered;
    for (const auto& row : table) {
        const auto idx = find_point(H, ax(F, row[1]), ax(F, row[0]));
        REQUIRE(idx);
        covered.insert(*idx);
        CHECK(cw.symbols[*idx] == ax(F, row[2]));
    }
    CHECK(covered.size() == 27);

    const auto lost = find_point(H, ax(F, 1), F.one());
    REQUIRE(lost);
    const std::size_t idx[] = {*lost};
    const RepairOutcome res = repair_all(code, erase(cw, idx));
    REQUIRE(res.steps.size() == 1);
    // alpha x - alpha^2
    CHECK(res.steps[0].interpolant == Poly({F.neg(ax(F, 2)), ax(F, 1)}));
    CHECK(res.codeword.symbols[*lost] == F.zero());
    CHECK(res.codeword == cw);
}

TEST_CASE("y-projection parameters") {
    const EvalCode one = construct_y_projection_code(3, 1);
    CHECK(one.k == 4);
    CHECK(one.meta.d_lb == 20);
    CHECK(min_distance_exhaustive(one) >= 20);
    CHECK(construct_y_projection_code(3, 7).meta.d_lb == 2);
    CHECK_ERRC(construct_y_projection_code(3, 8), Errc::DistanceBoundNonpositive);
    CHECK_ERRC(construct_y_projection_code(3, 0), Errc::ConstraintViolated);
    CHECK_ERRC(construct_x_projection_code(3, 0), Errc::ConstraintViolated);
}

TEST_CASE("x-projection parameters") {
    const EvalCode code = construct_x_projection_code(3, 2);
    CHECK(code.n == 24);
    CHECK(code.k == 9);
    CHECK(code.meta.d_lb == 10);
    CHECK(code.recovery[0].r == 3);
    CHECK(code.recovery[0].groups.size() == 6);
    const EvalCode tiny = construct_x_projection_code(2, 1);
    CHECK(tiny.n == 6);
    CHECK(tiny.k == 4);
    CHECK(tiny.meta.d_lb == 1);
    CHECK(min_distance_exhaustive(tiny) >= 1);
    CHECK(verify_locality(tiny, 0).status == VerifyStatus::proved);
}

TEST_CASE("availability code") {
    const EvalCode code = construct_availability_code(3);
    CHECK(code.n == 24);
    CHECK(code.k == 6);
    REQUIRE(code.recovery.size() == 2);
    CHECK(code.recovery[0].r == 2);
    CHECK(code.recovery[1].r == 3);
    CHECK(code.meta.d_lb == 12);

    const EvalCode small = construct_availability_code(2);
    CHECK(small.n == 6);
    CHECK(small.k == 2);
    CHECK(small.recovery[0].r == 1);
    CHECK(small.recovery[1].r == 2);
    CHECK(small.meta.d_lb == 3);
    CHECK(min_distance_exhaustive(small) >= 3);
    const auto rep = verify_availability(small);
    CHECK(rep.status == VerifyStatus::proved);
    CHECK(rep.recovery_sizes == std::vector<std::size_t>{1, 2});
}

TEST_CASE("puncturing the y-projection code at y = 0 gives the availability code") {
    const HermitianData H = hermitian_points(3);
    const EvalCode full = construct_y_projection_code(3, 2);
    const auto& drop = H.y_fibers[0];
    const EvalCode p = puncture(full, drop);
    const EvalCode avail = construct_availability_code(3);
    CHECK(p.n == 24);
    CHECK(p.generator == avail.generator);
    CHECK(p.recovery[0].groups == avail.recovery[0].groups);
}

TEST_CASE("two erasures in a y-fiber are repaired through the x-fibers") {
    const EvalCode code = construct_availability_code(3);
    std::vector<FieldElement> m{{1}, {2}, {3}, {4}, {5}, {6}};
    const Codeword cw = encode(code, m);
    for (const auto& g : code.recovery[0].groups) {
        for (std::size_t a = 0; a < g.size(); ++a) {
            for (std::size_t b = a + 1; b < g.size(); ++b) {
                const std::size_t idx[] = {g.coordinates[a], g.coordinates[b]};
                const RepairOutcome res = repair_all(code, erase(cw, idx));
                CHECK(res.complete());
                CHECK(res.codeword == cw);
            }
        }
    }
}

TEST_CASE("improved distance for large ell") {
    CHECK(ballico_distance(3, 7) == 3);
    CHECK(ballico_distance(3, 8) == 2);
    CHECK_FALSE(ballico_distance(3, 2));
    CHECK_FALSE(ballico_distance(3, 9));
    CHECK(*ballico_distance(3, 7) > construct_y_projection_code(3, 7).meta.d_lb);
}

TEST_CASE("Singleton gap for small curves") {
    for (std::uint32_t q0 : {2u, 3u}) {
        const std::int64_t q = q0 * q0;
        for (std::int64_t ell = 1;; ++ell) {
            const std::int64_t d_lb = bounds::evaluation_distance_bound(q0 * q0 * q0, q0 - 1, 2, ell, q0 + 1);
            if (d_lb < 1) break;
            const EvalCode code = construct_y_projection_code(q0, ell);
            const auto k = static_cast<std::int64_t>(code.k);
            const auto r = static_cast<std::int64_t>(code.meta.r);
            CHECK(code.meta.d_lb + (k / r) * (r + 1) == static_cast<std::int64_t>(code.n) - q + 2 * q0 + 2);
        }
    }
}
