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

// Exact arithmetic in small finite fields GF(p^a), polynomials over them,
// and the subgroup/coset machinery used to build good polynomials.

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lrc {

/// Element of GF(p^a) in base-p packed form: c0 + c1*p + ... + c_{a-1}*p^{a-1}
/// stands for c0 + c1*alpha + ..., alpha being the class of the modulus variable.
struct FieldElement {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

/// GF(p^a) with a fixed modulus. Immutable after construction; share it
/// through FieldPtr.
class Field {
public:
    /// Builds GF(p^a). Without a modulus the Conway polynomial is used for
    /// p^a <= 1024 and the least primitive polynomial (same ordering) above.
    /// Coefficients are constant-term-first and must include the leading 1.
    static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t a,
                                               std::optional<std::vector<std::uint32_t>> modulus = {});

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return a_; }
    std::uint32_t size() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool is_prime_field() const noexcept { return a_ == 1; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    /// Range-checked conversion from a packed integer.
    FieldElement element(std::uint64_t packed) const;
    /// The smallest-valued generator of the multiplicative group.
    FieldElement primitive() const noexcept { return {exp_[1]}; }

    FieldElement add(FieldElement x, FieldElement y) const noexcept;
    FieldElement sub(FieldElement x, FieldElement y) const noexcept { return add(x, neg(y)); }
    FieldElement neg(FieldElement x) const noexcept { return {neg_[x.value]}; }
    FieldElement mul(FieldElement x, FieldElement y) const noexcept {
        if (x.value == 0 || y.value == 0) return {0};
        return {exp_[log_[x.value] + log_[y.value]]};
    }
    FieldElement inv(FieldElement x) const;
    FieldElement div(FieldElement x, FieldElement y) const;
    /// Negative exponents are allowed for nonzero x; 0^0 = 1.
    FieldElement pow(FieldElement x, std::int64_t e) const;

    /// Discrete logarithm to base primitive(); x must be nonzero.
    std::uint32_t log(FieldElement x) const;
    /// primitive()^e.
    FieldElement exp(std::int64_t e) const noexcept;
    /// Multiplicative order of a nonzero element.
    std::uint32_t order(FieldElement x) const;

    std::vector<FieldElement> elements() const;

    friend bool operator==(const Field& lhs, const Field& rhs) noexcept {
        return lhs.p_ == rhs.p_ && lhs.a_ == rhs.a_ && lhs.modulus_ == rhs.modulus_;
    }

private:
    Field(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus);

    std::uint32_t slow_add(std::uint32_t x, std::uint32_t y) const noexcept;
    std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y) const noexcept;

    std::uint32_t p_;
    std::uint32_t a_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // 2(q-1) entries
    std::vector<std::uint32_t> log_;  // q entries, log_[0] unused
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint16_t> add_;  // q*q table, only for q <= 1024 and odd p
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility of a monic polynomial over GF(p), coefficients constant-term-first.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Polynomial over a field, constant-term-first. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
struct Poly {
    std::vector<FieldElement> coeffs;

    Poly() = default;
    explicit Poly(std::vector<FieldElement> c);

    static Poly constant(FieldElement c) { return Poly({c}); }
    static Poly monomial(FieldElement c, std::size_t degree);

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const noexcept { return coeffs.empty(); }
    FieldElement coeff(std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : FieldElement{}; }

    friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_add(const Field& field, const Poly& f, const Poly& g);
Poly poly_sub(const Field& field, const Poly& f, const Poly& g);
Poly poly_mul(const Field& field, const Poly& f, const Poly& g);
Poly poly_scale(const Field& field, const Poly& f, FieldElement c);
Poly poly_pow(const Field& field, const Poly& f, std::uint32_t e);
FieldElement poly_eval(const Field& field, const Poly& f, FieldElement x) noexcept;

struct InterpolationPoint {
    FieldElement x;
    FieldElement y;
};

/// Unique polynomial of degree < points.size() through the given points.
Poly lagrange_interpolate(const Field& field, std::span<const InterpolationPoint> points);

enum class GroupKind { multiplicative, additive };

/// The multiplicative subgroup of the given order, as powers of its
/// smallest-valued generator: 1, g, g^2, ...
std::vector<FieldElement> mult_subgroup(const Field& field, std::uint32_t order);

/// GF(p)-span of the basis. Element t of the result is sum_i c_i * basis[i]
/// where c_0 c_1 ... are the base-p digits of t, least significant first.
std::vector<FieldElement> additive_subgroup(const Field& field, std::span<const FieldElement> basis);

/// Which cosets to return: all of them, the first `count` in ambient order
/// (smallest uncovered element becomes the next representative), or the
/// cosets of explicit representatives.
struct CosetSelection {
    enum class Mode { all, first, representatives };

    Mode mode = Mode::all;
    std::size_t count = 0;
    std::vector<FieldElement> reps;

    static CosetSelection all() { return {}; }
    static CosetSelection first(std::size_t n) { return {Mode::first, n, {}}; }
    static CosetSelection of(std::vector<FieldElement> r) { return {Mode::representatives, 0, std::move(r)}; }
};

/// Cosets rep*H (multiplicative) or rep+H (additive), each listed in the
/// subgroup's own order.
std::vector<std::vector<FieldElement>> cosets(const Field& field, std::span<const FieldElement> subgroup,
                                              GroupKind kind, const CosetSelection& selection);

enum class GoodPolyForm { annihilator, power };

/// A degree-|H| polynomial constant on every coset of H: prod (x - h), or
/// x^|H| for multiplicative subgroups.
Poly good_polynomial(const Field& field, std::span<const FieldElement> subgroup, GroupKind kind,
                     GoodPolyForm form);

}  // namespace lrc
