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

#include "lrc/galois.hpp"

#include <algorithm>
#include <numeric>

#include "conway_table.hpp"
#include "lrc/error.hpp"

namespace lrc {

namespace {

using ModPoly = std::vector<std::uint32_t>;  // over GF(p), constant-term-first

void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
ModPoly mod_rem(ModPoly f, const ModPoly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t c = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t j = 0; j <= dg; ++j) {
            f[shift + j] = static_cast<std::uint32_t>((f[shift + j] + (p - c) * static_cast<std::uint64_t>(g[j])) % p);
        }
        trim(f);
    }
    return f;
}

ModPoly mod_mulmod(const ModPoly& f, const ModPoly& g, const ModPoly& m, std::uint32_t p) {
    if (f.empty() || g.empty()) return {};
    ModPoly prod(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(f[i]) * g[j]) % p);
        }
    }
    return mod_rem(std::move(prod), m, p);
}

ModPoly mod_powmod(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint32_t p) {
    ModPoly result{1};
    base = mod_rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1u) result = mod_mulmod(result, base, m, p);
        base = mod_mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// x generates (GF(p)[x]/m)^* for an irreducible m of degree a.
bool x_is_primitive(const ModPoly& m, std::uint32_t p, std::uint32_t a) {
    const std::uint64_t order = ipow(p, a) - 1;
    for (std::uint64_t f : prime_factors(order)) {
        if (mod_powmod({0, 1}, order / f, m, p) == ModPoly{1}) return false;
    }
    return true;
}

// Candidates in Conway order: digit i (i = 1..a) is (-1)^i times the
// coefficient of x^{a-i}, compared lexicographically.
ModPoly least_primitive_polynomial(std::uint32_t p, std::uint32_t a) {
    std::vector<std::uint32_t> digits(a, 0);
    while (true) {
        ModPoly c(a + 1, 0);
        c[a] = 1;
        for (std::uint32_t i = 1; i <= a; ++i) {
            const std::uint32_t d = digits[i - 1];
            c[a - i] = (i % 2 == 0) ? d : (p - d) % p;
        }
        if (c[0] != 0 && is_irreducible_mod_p(c, p) && x_is_primitive(c, p, a)) return c;
        std::size_t pos = a;
        while (pos > 0) {
            if (++digits[pos - 1] < p) break;
            digits[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) raise(Errc::ReducibleModulus, "no primitive polynomial found");
    }
}

ModPoly default_modulus(std::uint32_t p, std::uint32_t a) {
    if (a == 1) return {0, 1};
    for (const auto& entry : detail::conway_table()) {
        if (entry.p == p && entry.a == a) return ModPoly(entry.coeffs.begin(), entry.coeffs.begin() + a + 1);
    }
    return least_primitive_polynomial(p, a);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
    ModPoly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::uint32_t a = static_cast<std::uint32_t>(f.size() - 1);
    if (a == 1) return true;
    if (a <= 3) {
        for (std::uint32_t x = 0; x < p; ++x) {
            std::uint64_t acc = 0;
            for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
            if (acc == 0) return false;
        }
        return true;
    }
    // Trial division by every monic polynomial of degree 1..a/2.
    for (std::uint32_t d = 1; d <= a / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t t = 0; t < count; ++t) {
            ModPoly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t rest = t;
            for (std::uint32_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (mod_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t a,
                                           std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) raise(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (a < 1) raise(Errc::DegreeMismatch, "extension degree must be at least 1");
    if (ipow(p, a) > kMaxFieldSize) raise(Errc::UnsupportedSize, "field size exceeds 2^16");
    ModPoly m;
    if (modulus) {
        m = *modulus;
        if (m.size() != a + 1 || m.back() != 1) {
            raise(Errc::DegreeMismatch, "modulus must be monic of degree " + std::to_string(a));
        }
        for (auto c : m) {
            if (c >= p) raise(Errc::DegreeMismatch, "modulus coefficient out of range");
        }
        if (!is_irreducible_mod_p(m, p)) raise(Errc::ReducibleModulus, "modulus is reducible");
    } else {
        m = default_modulus(p, a);
    }
    return std::shared_ptr<const Field>(new Field(p, a, std::move(m)));
}

Field::Field(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus)
    : p_(p), a_(a), q_(static_cast<std::uint32_t>(ipow(p, a))), modulus_(std::move(modulus)) {
    neg_.resize(q_);
    for (std::uint32_t v = 0; v < q_; ++v) {
        std::uint32_t rest = v, scale = 1, out = 0;
        for (std::uint32_t i = 0; i < a_; ++i) {
            const std::uint32_t c = rest % p_;
            rest /= p_;
            out += ((p_ - c) % p_) * scale;
            scale *= p_;
        }
        neg_[v] = out;
    }
    if (p_ != 2 && q_ <= 1024) {
        add_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t x = 0; x < q_; ++x) {
            for (std::uint32_t y = 0; y < q_; ++y) add_[x * q_ + y] = static_cast<std::uint16_t>(slow_add(x, y));
        }
    }

    // Smallest-valued generator of the multiplicative group.
    const std::uint64_t order = q_ - 1;
    const auto factors = prime_factors(order);
    auto slow_pow = [&](std::uint32_t x, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e > 0) {
            if (e & 1u) r = slow_mul(r, x);
            x = slow_mul(x, x);
            e >>= 1;
        }
        return r;
    };
    std::uint32_t gen = 1;
    if (q_ > 2) {
        for (gen = 2; gen < q_; ++gen) {
            const bool primitive = std::none_of(factors.begin(), factors.end(),
                                                [&](std::uint64_t f) { return slow_pow(gen, order / f) == 1; });
            if (primitive) break;
        }
    }
    exp_.resize(2 * order);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        exp_[i] = cur;
        exp_[i + order] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = slow_mul(cur, gen);
    }
    if (q_ == 2) exp_ = {1, 1};
}

std::uint32_t Field::slow_add(std::uint32_t x, std::uint32_t y) const noexcept {
    if (p_ == 2) return x ^ y;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < a_; ++i) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return out;
}

std::uint32_t Field::slow_mul(std::uint32_t x, std::uint32_t y) const noexcept {
    if (a_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p_);
    ModPoly fx(a_), fy(a_);
    for (std::uint32_t i = 0; i < a_; ++i) {
        fx[i] = x % p_;
        fy[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    const ModPoly r = mod_mulmod(fx, fy, modulus_, p_);
    std::uint32_t out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
}

FieldElement Field::element(std::uint64_t packed) const {
    if (packed >= q_) raise(Errc::OutOfRange, "element " + std::to_string(packed) + " outside GF(" + std::to_string(q_) + ")");
    return {static_cast<std::uint32_t>(packed)};
}

FieldElement Field::add(FieldElement x, FieldElement y) const noexcept {
    if (p_ == 2) return {x.value ^ y.value};
    if (!add_.empty()) return {add_[x.value * q_ + y.value]};
    return {slow_add(x.value, y.value)};
}

FieldElement Field::inv(FieldElement x) const {
    if (x.value == 0) raise(Errc::DivisionByZero, "inverse of zero");
    const std::uint32_t order = q_ - 1;
    return {exp_[(order - log_[x.value]) % order]};
}

FieldElement Field::div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

FieldElement Field::pow(FieldElement x, std::int64_t e) const {
    if (x.value == 0) {
        if (e == 0) return one();
        if (e < 0) raise(Errc::DivisionByZero, "negative power of zero");
        return zero();
    }
    const std::int64_t order = q_ - 1;
    std::int64_t k = (static_cast<std::int64_t>(log_[x.value]) * (e % order)) % order;
    if (k < 0) k += order;
    return {exp_[k]};
}

std::uint32_t Field::log(FieldElement x) const {
    if (x.value == 0) raise(Errc::DivisionByZero, "logarithm of zero");
    return log_[x.value];
}

FieldElement Field::exp(std::int64_t e) const noexcept {
    const std::int64_t order = q_ - 1;
    std::int64_t k = e % order;
    if (k < 0) k += order;
    return {exp_[k]};
}

std::uint32_t Field::order(FieldElement x) const {
    const std::uint32_t l = log(x);
    return (q_ - 1) / std::gcd(q_ - 1, l == 0 ? q_ - 1 : l);
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out(q_);
    for (std::uint32_t v = 0; v < q_; ++v) out[v] = {v};
    return out;
}

// ---------------------------------------------------------------------------

Poly::Poly(std::vector<FieldElement> c) : coeffs(std::move(c)) {
    while (!coeffs.empty() && coeffs.back().value == 0) coeffs.pop_back();
}

Poly Poly::monomial(FieldElement c, std::size_t degree) {
    std::vector<FieldElement> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly poly_add(const Field& field, const Poly& f, const Poly& g) {
    std::vector<FieldElement> out(std::max(f.coeffs.size(), g.coeffs.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.add(f.coeff(i), g.coeff(i));
    return Poly(std::move(out));
}

Poly poly_sub(const Field& field, const Poly& f, const Poly& g) {
    std::vector<FieldElement> out(std::max(f.coeffs.size(), g.coeffs.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.sub(f.coeff(i), g.coeff(i));
    return Poly(std::move(out));
}

Poly poly_mul(const Field& field, const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<FieldElement> out(f.coeffs.size() + g.coeffs.size() - 1);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            out[i + j] = field.add(out[i + j], field.mul(f.coeffs[i], g.coeffs[j]));
        }
    }
    return Poly(std::move(out));
}

Poly poly_scale(const Field& field, const Poly& f, FieldElement c) {
    std::vector<FieldElement> out(f.coeffs);
    for (auto& v : out) v = field.mul(v, c);
    return Poly(std::move(out));
}

Poly poly_pow(const Field& field, const Poly& f, std::uint32_t e) {
    Poly result = Poly::constant(field.one());
    Poly base = f;
    while (e > 0) {
        if (e & 1u) result = poly_mul(field, result, base);
        base = poly_mul(field, base, base);
        e >>= 1;
    }
    return result;
}

FieldElement poly_eval(const Field& field, const Poly& f, FieldElement x) noexcept {
    FieldElement acc{};
    for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = field.add(field.mul(acc, x), f.coeffs[i]);
    return acc;
}

Poly lagrange_interpolate(const Field& field, std::span<const InterpolationPoint> points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i].x == points[j].x) {
                raise(Errc::DuplicateAbscissa, "abscissa " + std::to_string(points[i].x.value) + " repeated");
            }
        }
    }
    if (n == 0) return {};
    // master(x) = prod_j (x - x_j), coefficients constant-first, degree n.
    std::vector<FieldElement> master{field.one()};
    for (const auto& pt : points) {
        std::vector<FieldElement> next(master.size() + 1);
        const FieldElement minus = field.neg(pt.x);
        for (std::size_t i = 0; i < master.size(); ++i) {
            next[i + 1] = field.add(next[i + 1], master[i]);
            next[i] = field.add(next[i], field.mul(master[i], minus));
        }
        master = std::move(next);
    }
    std::vector<FieldElement> out(n);
    std::vector<FieldElement> basis(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (points[i].y.value == 0) continue;
        // basis = master / (x - x_i) by synthetic division.
        FieldElement carry{};
        for (std::size_t d = n; d-- > 0;) {
            carry = field.add(master[d + 1], field.mul(carry, points[i].x));
            basis[d] = carry;
        }
        FieldElement denom = field.one();
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) denom = field.mul(denom, field.sub(points[i].x, points[j].x));
        }
        const FieldElement scale = field.div(points[i].y, denom);
        for (std::size_t d = 0; d < n; ++d) out[d] = field.add(out[d], field.mul(basis[d], scale));
    }
    return Poly(std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

void check_subgroup(const Field& field, std::span<const FieldElement> subgroup, GroupKind kind) {
    if (subgroup.empty()) raise(Errc::InvalidSubgroup, "empty subgroup");
    std::vector<char> member(field.size(), 0);
    for (auto h : subgroup) {
        if (h.value >= field.size()) raise(Errc::InvalidSubgroup, "element outside the field");
        if (member[h.value]) raise(Errc::InvalidSubgroup, "repeated element");
        member[h.value] = 1;
    }
    const FieldElement identity = kind == GroupKind::multiplicative ? field.one() : field.zero();
    if (!member[identity.value]) raise(Errc::InvalidSubgroup, "identity missing");
    for (auto x : subgroup) {
        for (auto y : subgroup) {
            const FieldElement z = kind == GroupKind::multiplicative ? field.mul(x, y) : field.add(x, y);
            if (!member[z.value]) raise(Errc::InvalidSubgroup, "not closed under the group operation");
        }
    }
}

}  // namespace

std::vector<FieldElement> mult_subgroup(const Field& field, std::uint32_t order) {
    const std::uint32_t group = field.size() - 1;
    if (order == 0 || group % order != 0) {
        raise(Errc::OrderDoesNotDivide, std::to_string(order) + " does not divide " + std::to_string(group));
    }
    const std::uint32_t step = group / order;
    FieldElement gen = field.one();
    bool found = false;
    for (std::uint32_t t = 0; t < order; ++t) {
        if (std::gcd(t, order) != 1) continue;
        const FieldElement cand = field.exp(static_cast<std::int64_t>(step) * t);
        if (!found || cand.value < gen.value) gen = cand;
        found = true;
    }
    std::vector<FieldElement> out(order);
    FieldElement cur = field.one();
    for (auto& e : out) {
        e = cur;
        cur = field.mul(cur, gen);
    }
    return out;
}

std::vector<FieldElement> additive_subgroup(const Field& field, std::span<const FieldElement> basis) {
    const std::uint32_t p = field.characteristic();
    if (basis.size() > field.degree()) raise(Errc::DependentBasis, "more basis vectors than the degree");
    const std::uint64_t size = ipow(p, static_cast<std::uint32_t>(basis.size()));
    std::vector<FieldElement> out(size);
    std::vector<char> seen(field.size(), 0);
    for (std::uint64_t t = 0; t < size; ++t) {
        FieldElement acc{};
        std::uint64_t rest = t;
        for (auto b : basis) {
            acc = field.add(acc, field.mul(FieldElement{static_cast<std::uint32_t>(rest % p)}, b));
            rest /= p;
        }
        if (seen[acc.value]) raise(Errc::DependentBasis, "basis is linearly dependent over GF(p)");
        seen[acc.value] = 1;
        out[t] = acc;
    }
    return out;
}

std::vector<std::vector<FieldElement>> cosets(const Field& field, std::span<const FieldElement> subgroup,
                                              GroupKind kind, const CosetSelection& selection) {
    check_subgroup(field, subgroup, kind);
    const bool mult = kind == GroupKind::multiplicative;
    std::vector<char> covered(field.size(), 0);
    std::vector<std::vector<FieldElement>> out;

    auto make = [&](FieldElement rep) {
        std::vector<FieldElement> c;
        c.reserve(subgroup.size());
        for (auto h : subgroup) c.push_back(mult ? field.mul(rep, h) : field.add(rep, h));
        for (auto e : c) {
            if (covered[e.value]) {
                raise(Errc::RepresentativeInSubgroupTwice,
                      "representative " + std::to_string(rep.value) + " lies in an already selected coset");
            }
        }
        for (auto e : c) covered[e.value] = 1;
        out.push_back(std::move(c));
    };

    if (selection.mode == CosetSelection::Mode::representatives) {
        for (auto rep : selection.reps) {
            if (rep.value >= field.size()) raise(Errc::OutOfRange, "representative outside the field");
            if (mult && rep.value == 0) raise(Errc::OutOfRange, "zero is not in the multiplicative group");
            make(rep);
        }
        return out;
    }
    const std::size_t total = (field.size() - (mult ? 1 : 0)) / subgroup.size();
    const std::size_t want = selection.mode == CosetSelection::Mode::all ? total : selection.count;
    if (want > total) raise(Errc::OutOfRange, "only " + std::to_string(total) + " cosets exist");
    for (std::uint32_t v = mult ? 1 : 0; v < field.size() && out.size() < want; ++v) {
        if (!covered[v]) make(FieldElement{v});
    }
    return out;
}

Poly good_polynomial(const Field& field, std::span<const FieldElement> subgroup, GroupKind kind,
                     GoodPolyForm form) {
    check_subgroup(field, subgroup, kind);
    Poly g;
    if (form == GoodPolyForm::power) {
        if (kind != GroupKind::multiplicative) {
            raise(Errc::ConstraintViolated, "power form needs a multiplicative subgroup");
        }
        g = Poly::monomial(field.one(), subgroup.size());
    } else {
        g = Poly::constant(field.one());
        for (auto h : subgroup) g = poly_mul(field, g, Poly({field.neg(h), field.one()}));
    }
    for (const auto& c : cosets(field, subgroup, kind, CosetSelection::all())) {
        const FieldElement v = poly_eval(field, g, c.front());
        for (auto e : c) {
            if (poly_eval(field, g, e) != v) raise(Errc::NotConstantOnCosets, "good polynomial check failed");
        }
    }
    return g;
}

}  // namespace lrc
