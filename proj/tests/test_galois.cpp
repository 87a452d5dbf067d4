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

#include <random>
#include <set>

#include "doctest.h"
#include "lrc/galois.hpp"
#include "support.hpp"

using namespace lrc;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p = 2; p < 256; ++p) {
        if (!is_prime(p)) continue;
        for (std::uint32_t a = 1, q = p; q <= 256; ++a, q *= p) out.emplace_back(p, a);
    }
    return out;
}

}  // namespace

TEST_CASE("field axioms on every field up to 256 elements") {
    std::mt19937_64 rng(1);
    for (auto [p, a] : small_fields()) {
        CAPTURE(p);
        CAPTURE(a);
        const auto F = Field::create(p, a);
        const std::uint32_t q = F->size();
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const FieldElement x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
            CHECK(F->add(F->add(x, y), z) == F->add(x, F->add(y, z)));
            CHECK(F->mul(F->mul(x, y), z) == F->mul(x, F->mul(y, z)));
            CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
            CHECK(F->add(x, F->neg(x)) == F->zero());
            CHECK(F->sub(F->add(x, y), y) == x);
            if (x.value != 0) {
                CHECK(F->mul(x, F->inv(x)) == F->one());
                CHECK(F->exp(F->log(x)) == x);
                CHECK(F->pow(x, q - 1) == F->one());
                CHECK(F->pow(x, -1) == F->inv(x));
            }
        }
        CHECK(F->order(F->primitive()) == q - 1);
        // The primitive element is the smallest generator.
        for (std::uint32_t v = 1; v < F->primitive().value; ++v) CHECK(F->order(FieldElement{v}) != q - 1);
    }
}

TEST_CASE("default moduli are the Conway polynomials") {
    CHECK(Field::create(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(Field::create(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(Field::create(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(Field::create(2, 8)->modulus() == std::vector<std::uint32_t>{1, 0, 1, 1, 1, 0, 0, 0, 1});
    CHECK(Field::create(3, 2)->modulus() == std::vector<std::uint32_t>{2, 2, 1});
    CHECK(Field::create(5, 2)->modulus() == std::vector<std::uint32_t>{2, 4, 1});
    CHECK(Field::create(23, 2)->modulus() == std::vector<std::uint32_t>{5, 21, 1});
}

TEST_CASE("GF(9): alpha^2 = alpha + 1") {
    const auto F = Field::create(3, 2);
    const FieldElement alpha{3};
    CHECK(F->primitive() == alpha);
    CHECK(F->mul(alpha, alpha) == FieldElement{4});
    CHECK(F->exp(7) == F->add(alpha, FieldElement{2}));
}

TEST_CASE("large fields") {
    const auto F = Field::create(251, 2);
    const FieldElement x = F->element(1000), y = F->element(60000);
    CHECK(F->sub(F->add(x, y), y) == x);
    CHECK(F->mul(F->div(x, y), y) == x);
    const auto G = Field::create(2, 16);
    CHECK(G->size() == 65536u);
    CHECK(G->order(G->primitive()) == 65535u);
}

TEST_CASE("field construction errors") {
    CHECK_ERRC(Field::create(4, 1), Errc::NotPrime);
    CHECK_ERRC(Field::create(2, 17), Errc::UnsupportedSize);
    CHECK_ERRC(Field::create(3, 2, std::vector<std::uint32_t>{2, 0, 1}), Errc::ReducibleModulus);
    CHECK_ERRC(Field::create(3, 2, std::vector<std::uint32_t>{2, 1}), Errc::DegreeMismatch);
    CHECK_ERRC(Field::create(3, 0), Errc::DegreeMismatch);
    const auto F = Field::create(13, 1);
    CHECK_ERRC(F->inv(F->zero()), Errc::DivisionByZero);
    CHECK_ERRC(F->element(13), Errc::OutOfRange);
}

TEST_CASE("a non-primitive modulus still gives a field") {
    // x^2 + 1 is irreducible over GF(3) but x has order 4.
    const auto F = Field::create(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    CHECK(F->order(F->primitive()) == 8u);
    CHECK(F->mul(FieldElement{3}, FieldElement{3}) == FieldElement{2});
}

TEST_CASE("multiplicative subgroups of GF(13)") {
    const auto F = Field::create(13, 1);
    const auto h3 = mult_subgroup(*F, 3);
    CHECK(h3 == std::vector<FieldElement>{{1}, {3}, {9}});
    const auto h4 = mult_subgroup(*F, 4);
    CHECK(h4 == std::vector<FieldElement>{{1}, {5}, {12}, {8}});
    CHECK_ERRC(mult_subgroup(*F, 5), Errc::OrderDoesNotDivide);
}

TEST_CASE("cosets and the good polynomial x^3") {
    const auto F = Field::create(13, 1);
    const auto H = mult_subgroup(*F, 3);
    const auto all = cosets(*F, H, GroupKind::multiplicative, CosetSelection::all());
    CHECK(all.size() == 4);
    CHECK(all[0] == std::vector<FieldElement>{{1}, {3}, {9}});
    CHECK(all[1] == std::vector<FieldElement>{{2}, {6}, {5}});
    CHECK(all[2] == std::vector<FieldElement>{{4}, {12}, {10}});
    const auto firsts = cosets(*F, H, GroupKind::multiplicative, CosetSelection::first(3));
    CHECK(firsts == std::vector(all.begin(), all.begin() + 3));
    CHECK_ERRC(cosets(*F, H, GroupKind::multiplicative, CosetSelection::of({{1}, {3}})),
               Errc::RepresentativeInSubgroupTwice);

    const Poly g = good_polynomial(*F, H, GroupKind::multiplicative, GoodPolyForm::power);
    CHECK(g == Poly::monomial(F->one(), 3));
    std::vector<std::uint32_t> values;
    for (std::size_t c = 0; c < 3; ++c) {
        for (auto x : all[c]) CHECK(poly_eval(*F, g, x) == poly_eval(*F, g, all[c][0]));
        values.push_back(poly_eval(*F, g, all[c][0]).value);
    }
    CHECK(values == std::vector<std::uint32_t>{1, 8, 12});

    // The annihilator of H differs from x^3 by a constant.
    const Poly ann = good_polynomial(*F, H, GroupKind::multiplicative, GoodPolyForm::annihilator);
    CHECK(ann == poly_sub(*F, g, Poly::constant(F->one())));
}

TEST_CASE("additive subgroups and their annihilators") {
    const auto F = Field::create(2, 4);
    const std::vector<FieldElement> basis{{1}, {2}};
    const auto H = additive_subgroup(*F, basis);
    CHECK(H == std::vector<FieldElement>{{0}, {1}, {2}, {3}});
    const auto cs = cosets(*F, H, GroupKind::additive, CosetSelection::all());
    CHECK(cs.size() == 4);
    const Poly g = good_polynomial(*F, H, GroupKind::additive, GoodPolyForm::annihilator);
    CHECK(g.degree() == 4);
    for (const auto& c : cs) {
        for (auto x : c) CHECK(poly_eval(*F, g, x) == poly_eval(*F, g, c[0]));
    }
    CHECK_ERRC(additive_subgroup(*F, std::vector<FieldElement>{{1}, {1}}), Errc::DependentBasis);
    CHECK_ERRC(good_polynomial(*F, H, GroupKind::additive, GoodPolyForm::power), Errc::ConstraintViolated);
}

TEST_CASE("interpolation reproduces its samples and recovers polynomials") {
    std::mt19937_64 rng(7);
    for (auto [p, a] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{13, 1}, {2, 4}, {3, 2}, {7, 2}}) {
        const auto F = Field::create(p, a);
        std::uniform_int_distribution<std::uint32_t> pick(0, F->size() - 1);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t deg = 1 + trial % std::min<std::size_t>(5, F->size() - 2);
            std::vector<FieldElement> c(deg + 1);
            for (auto& x : c) x = FieldElement{pick(rng)};
            const Poly f(c);
            std::vector<InterpolationPoint> pts;
            for (std::uint32_t x = 0; x <= deg; ++x) pts.push_back({FieldElement{x}, poly_eval(*F, f, FieldElement{x})});
            const Poly g = lagrange_interpolate(*F, pts);
            CHECK(g == f);
            for (const auto& pt : pts) CHECK(poly_eval(*F, g, pt.x) == pt.y);
        }
    }
    const auto F = Field::create(13, 1);
    const std::vector<InterpolationPoint> square{{{1}, {1}}, {{2}, {4}}, {{5}, {12}}};
    CHECK(lagrange_interpolate(*F, square) == Poly::monomial(F->one(), 2));
    const std::vector<InterpolationPoint> dup{{{1}, {1}}, {{1}, {2}}};
    CHECK_ERRC(lagrange_interpolate(*F, dup), Errc::DuplicateAbscissa);
}

TEST_CASE("polynomial arithmetic") {
    const auto F = Field::create(5, 1);
    const Poly f({FieldElement{1}, FieldElement{1}});  // 1 + x
    const Poly sq = poly_pow(*F, f, 5);
    // Frobenius: (1 + x)^5 = 1 + x^5 in characteristic 5.
    CHECK(sq == poly_add(*F, Poly::constant(F->one()), Poly::monomial(F->one(), 5)));
    CHECK(poly_sub(*F, f, f).is_zero());
    CHECK(poly_scale(*F, f, F->zero()).is_zero());
    CHECK(Poly().degree() == -1);
}
