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

#include "lrc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "lrc/error.hpp"

namespace lrc::bounds {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) raise(Errc::OutOfRange, "integer overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) raise(Errc::OutOfRange, "integer overflow");
    return out;
}

std::int64_t checked_pow(std::int64_t base, std::uint32_t e) {
    std::int64_t out = 1;
    for (std::uint32_t i = 0; i < e; ++i) out = checked_mul(out, base);
    return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt out = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

double log_big(const BigInt& v) {
    if (v <= 0) return kNegInf;
    const std::size_t bits = boost::multiprecision::msb(v);
    if (bits < 900) return std::log(v.convert_to<double>());
    const std::size_t shift = bits - 900;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(std::min(a, b) - m));
}

BigInt floor_of(const Rational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    BigInt f = num / den;
    if (num % den != 0 && num < 0) f -= 1;
    return f;
}

}  // namespace

std::string to_string(const Rational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

std::int64_t singleton_rho(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho) {
    if (k < 1 || k > n || r < 1) raise(Errc::ConstraintViolated, "need 1 <= k <= n and r >= 1");
    return n - k + 1 - ((k + r - 1) / r - 1) * (rho - 1);
}

std::int64_t availability_singleton(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t,
                                    AvailabilityBound which) {
    if (t < 1 || r < 1 || k < 1) raise(Errc::ConstraintViolated, "need t, r, k >= 1");
    if (which == AvailabilityBound::ceil_ratio) {
        const std::int64_t num = t * (k - 1) + 1;
        const std::int64_t den = t * (r - 1) + 1;
        return n - k + 2 - (num + den - 1) / den;
    }
    std::int64_t sum = 0;
    std::int64_t power = 1;
    for (std::int64_t i = 0; i <= t; ++i) {
        sum += (k - 1) / power;
        if (power > k) break;  // remaining terms vanish
        power = checked_mul(power, r);
    }
    return n - sum;
}

std::int64_t evaluation_distance_bound(std::int64_t n, std::int64_t r, std::int64_t rho, std::int64_t ell, std::int64_t h) {
    return checked_add(checked_add(n, -checked_mul(ell, r + rho - 1)), -checked_mul(r - 1, h));
}

std::vector<BigInt> mds_weight_coefficients(std::uint64_t q, std::size_t r, std::size_t rho) {
    if (q < 2 || r < 1 || rho < 2) raise(Errc::ConstraintViolated, "need q >= 2, r >= 1, rho >= 2");
    const std::size_t n = r + rho - 1;
    std::vector<BigInt> A(n + 1, 0);
    A[0] = 1;
    for (std::size_t w = rho; w <= n; ++w) {
        BigInt inner = 0;
        for (std::size_t j = 0; j <= w - rho; ++j) {
            BigInt term = binomial(w - 1, j) * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(w - rho - j));
            if (j % 2 == 0) inner += term;
            else inner -= term;
        }
        A[w] = BigInt(q - 1) * binomial(n, w) * inner;
    }
    return A;
}

Rational mds_weight_enumerator(std::uint64_t q, std::size_t r, std::size_t rho, const Rational& s) {
    const auto A = mds_weight_coefficients(q, r, rho);
    Rational acc = 0;
    for (std::size_t w = A.size(); w-- > 0;) acc = acc * s + Rational(A[w]);
    return acc;
}

double mds_weight_enumerator(std::uint64_t q, std::size_t r, std::size_t rho, double s) {
    const auto A = mds_weight_coefficients(q, r, rho);
    long double acc = 0;
    for (std::size_t w = A.size(); w-- > 0;) acc = acc * s + A[w].convert_to<long double>();
    return static_cast<double>(acc);
}

double spc_weight_enumerator(std::uint64_t q, std::size_t r, double s) {
    const double qd = static_cast<double>(q);
    return (std::pow(1 + (qd - 1) * s, static_cast<double>(r + 1)) +
            (qd - 1) * std::pow(1 - s, static_cast<double>(r + 1))) /
           qd;
}

GvLrcBound::GvLrcBound(std::uint64_t q, std::size_t r, std::size_t rho) : GvLrcBound(q, r, rho, false) {}

GvLrcBound GvLrcBound::single_parity(std::uint64_t q, std::size_t r) { return GvLrcBound(q, r, 2, true); }

GvLrcBound::GvLrcBound(std::uint64_t q, std::size_t r, std::size_t rho, bool spc_closed_form)
    : q_(q), r_(r), rho_(rho), spc_(spc_closed_form) {
    if (q < 2 || r < 1 || rho < 2) raise(Errc::ConstraintViolated, "need q >= 2, r >= 1, rho >= 2");
    if (!spc_) {
        for (const auto& a : mds_weight_coefficients(q, r, rho)) log_coeffs_.push_back(log_big(a));
    }
    grid_ln_s_.resize(kGridPoints);
    grid_log_b_.resize(kGridPoints);
    const double lo = std::log(kSMin);
    for (std::size_t i = 0; i < kGridPoints; ++i) {
        grid_ln_s_[i] = i + 1 == kGridPoints ? 0.0 : lo - lo * static_cast<double>(i) / (kGridPoints - 1);
        grid_log_b_[i] = log_b(grid_ln_s_[i]);
    }
}

double GvLrcBound::log_b(double ln_s) const {
    const double ln_q = std::log(static_cast<double>(q_));
    if (spc_) {
        const double s = std::exp(ln_s);
        const double e = static_cast<double>(r_ + 1);
        const double a = e * std::log1p(static_cast<double>(q_ - 1) * s);
        const double b = s >= 1 ? kNegInf : std::log(static_cast<double>(q_ - 1)) + e * std::log1p(-s);
        return log_add(a, b) - ln_q;
    }
    double peak = kNegInf;
    for (std::size_t w = 0; w < log_coeffs_.size(); ++w) {
        if (log_coeffs_[w] != kNegInf) peak = std::max(peak, log_coeffs_[w] + static_cast<double>(w) * ln_s);
    }
    double sum = 0;
    for (std::size_t w = 0; w < log_coeffs_.size(); ++w) {
        if (log_coeffs_[w] != kNegInf) sum += std::exp(log_coeffs_[w] + static_cast<double>(w) * ln_s - peak);
    }
    return peak + std::log(sum);
}

double GvLrcBound::objective_at(double ln_s, double delta) const {
    const double ln_q = std::log(static_cast<double>(q_));
    const double n0 = static_cast<double>(r_ + rho_ - 1);
    return log_b(ln_s) / (n0 * ln_q) - delta * ln_s / ln_q;
}

BoundResult GvLrcBound::evaluate(double delta) const {
    if (!(delta > 0 && delta < 1)) raise(Errc::OutOfRange, "delta must lie in (0, 1)");
    const double ln_q = std::log(static_cast<double>(q_));
    const double n0 = static_cast<double>(r_ + rho_ - 1);

    std::size_t best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < kGridPoints; ++i) {
        const double v = grid_log_b_[i] / (n0 * ln_q) - delta * grid_ln_s_[i] / ln_q;
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    double best_ln_s = grid_ln_s_[best];

    // Golden section on the bracket around the best grid point.
    double a = grid_ln_s_[best == 0 ? 0 : best - 1];
    double b = grid_ln_s_[std::min(best + 1, kGridPoints - 1)];
    const double phi = (std::sqrt(5.0) - 1) / 2;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = objective_at(c, delta);
    double fd = objective_at(d, delta);
    while (std::exp(b) - std::exp(a) > kTolerance) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = objective_at(c, delta);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = objective_at(d, delta);
        }
    }
    const double mid = (a + b) / 2;
    const double fmid = objective_at(mid, delta);
    if (fmid < best_val) {
        best_val = fmid;
        best_ln_s = mid;
    }

    BoundResult out;
    out.value = static_cast<double>(r_) / n0 - best_val;
    out.argmin_s = std::exp(best_ln_s);
    out.formula_id = spc_ ? "gv-lrc-rho2" : "gv-lrc";
    out.inputs = {{"q", static_cast<double>(q_)},
                  {"r", static_cast<double>(r_)},
                  {"rho", static_cast<double>(rho_)},
                  {"delta", delta}};
    return out;
}

BoundResult gv_lrc_rate(std::uint64_t q, std::size_t r, std::size_t rho, double delta) {
    BoundResult out = GvLrcBound(q, r, rho).evaluate(delta);
    if (out.value <= 0) raise(Errc::NoAdmissibleRate, "GV-type rate is not positive at delta = " + std::to_string(delta));
    return out;
}

BoundResult gv_lrc_rate_rho2(std::uint64_t q, std::size_t r, double delta) {
    BoundResult out = GvLrcBound::single_parity(q, r).evaluate(delta);
    if (out.value <= 0) raise(Errc::NoAdmissibleRate, "GV-type rate is not positive at delta = " + std::to_string(delta));
    return out;
}

std::string ag_family_name(AgFamily f) {
    switch (f) {
        case AgFamily::sqrtq_minus1: return "sqrtq_minus1";
        case AgFamily::sqrtq: return "sqrtq";
        case AgFamily::small_r: return "small_r";
        case AgFamily::small_r2: return "small_r2";
        case AgFamily::rho_variant: return "rho_variant";
        case AgFamily::tvz: return "tvz";
    }
    return "?";
}

std::optional<AgFamily> parse_ag_family(const std::string& name) {
    for (auto f : {AgFamily::sqrtq_minus1, AgFamily::sqrtq, AgFamily::small_r, AgFamily::small_r2,
                   AgFamily::rho_variant, AgFamily::tvz}) {
        if (ag_family_name(f) == name) return f;
    }
    return std::nullopt;
}

std::optional<std::size_t> ag_default_r(std::uint32_t q0, AgFamily family) {
    switch (family) {
        case AgFamily::sqrtq_minus1: return q0 - 1;
        case AgFamily::sqrtq: return q0;
        case AgFamily::small_r2: return 2;
        default: return std::nullopt;
    }
}

BoundResult ag_rate(std::uint32_t q0, AgFamily family, double delta, std::optional<std::size_t> r,
                    std::optional<std::size_t> rho) {
    if (q0 < 2) raise(Errc::ConstraintViolated, "q0 must be at least 2");
    const double Q = q0;
    const double q = Q * Q;
    auto require_r = [&](std::size_t expected) {
        if (r && *r != expected) {
            raise(Errc::ConstraintViolated, ag_family_name(family) + " has r = " + std::to_string(expected));
        }
        return static_cast<double>(expected);
    };
    BoundResult out;
    out.formula_id = "ag-" + ag_family_name(family);
    out.inputs = {{"q0", Q}, {"delta", delta}};
    switch (family) {
        case AgFamily::sqrtq_minus1: {
            if (q0 < 3) raise(Errc::ConstraintViolated, "sqrtq_minus1 needs q0 >= 3");
            const double rr = require_r(q0 - 1);
            out.value = rr / (rr + 1) * (1 - delta - 3 / (Q + 1));
            out.inputs["r"] = rr;
            break;
        }
        case AgFamily::sqrtq: {
            const double rr = require_r(q0);
            out.value = rr / (rr + 1) * (1 - delta - 2 * Q / (q - 1));
            out.inputs["r"] = rr;
            break;
        }
        case AgFamily::small_r: {
            if (!r || *r < 1) raise(Errc::ConstraintViolated, "small_r needs r");
            if ((q0 + 1) % (*r + 1) != 0) raise(Errc::ConstraintViolated, "small_r needs (r+1) | (q0+1)");
            const double rr = static_cast<double>(*r);
            out.value = rr / (rr + 1) * (1 - delta - (Q + rr) / (q - 1));
            out.inputs["r"] = rr;
            break;
        }
        case AgFamily::small_r2: {
            require_r(2);
            if ((q0 + 1) % 3 != 0) raise(Errc::ConstraintViolated, "small_r2 needs 3 | (q0+1)");
            out.value = 2.0 / 3.0 * (1 - delta - 1 / (Q - 1) - 1 / (q - 1));
            out.inputs["r"] = 2;
            break;
        }
        case AgFamily::rho_variant: {
            if (!r || *r < 1 || *r >= q0) raise(Errc::ConstraintViolated, "rho_variant needs 1 <= r < q0");
            const std::size_t want = q0 - *r + 1;
            if (rho && *rho != want) raise(Errc::ConstraintViolated, "rho_variant needs r + rho - 1 = q0");
            const double rr = static_cast<double>(*r);
            out.value = rr / Q * (1 - delta - 3 / (Q + 1));
            out.inputs["r"] = rr;
            out.inputs["rho"] = static_cast<double>(want);
            break;
        }
        case AgFamily::tvz:
            if (q0 < 3) raise(Errc::ConstraintViolated, "tvz needs q0 >= 3");
            out.value = 1 - delta - 1 / (Q - 1);
            break;
    }
    return out;
}

namespace {

struct Comparator {
    std::uint32_t q0;
    AgFamily family;
    GvParams gv;
    GvLrcBound bound;

    Comparator(std::uint32_t q0_, AgFamily f, GvParams g)
        : q0(q0_), family(f), gv(g), bound(static_cast<std::uint64_t>(q0_) * q0_, g.r, g.rho) {}

    std::optional<std::size_t> ag_r() const { return family == AgFamily::tvz ? std::nullopt : std::optional(gv.r); }
    std::optional<std::size_t> ag_rho() const {
        return family == AgFamily::rho_variant ? std::optional(gv.rho) : std::nullopt;
    }
    double ag(double delta) const { return ag_rate(q0, family, delta, ag_r(), ag_rho()).value; }
    double gvr(double delta) const { return bound.evaluate(delta).value; }
    bool ag_better(double delta) const {
        const double a = ag(delta);
        return a > 0 && a > gvr(delta);
    }
};

}  // namespace

CrossoverInterval crossover_interval(std::uint32_t q0, AgFamily family, GvParams gv, Axis axis) {
    const Comparator cmp(q0, family, gv);
    cmp.ag(0.5);  // surfaces family constraint violations before the scan

    constexpr double kStep = 1e-3;
    constexpr double kRefine = 1e-6;
    constexpr int kPoints = 999;
    std::vector<bool> better(kPoints + 1, false);
    for (int i = 1; i <= kPoints; ++i) better[i] = cmp.ag_better(i * kStep);

    int best_start = -1, best_len = 0;
    for (int i = 1; i <= kPoints;) {
        if (!better[i]) {
            ++i;
            continue;
        }
        int j = i;
        while (j <= kPoints && better[j]) ++j;
        if (j - i > best_len) {
            best_len = j - i;
            best_start = i;
        }
        i = j;
    }
    if (best_start < 0) {
        raise(Errc::NoCrossover, "the AG rate never exceeds the GV-type rate for q0 = " + std::to_string(q0));
    }

    // Bisect between a point where the predicate is `outside` and one where it is not.
    auto refine = [&](double out_pt, double in_pt) {
        while (std::abs(in_pt - out_pt) > kRefine) {
            const double mid = (out_pt + in_pt) / 2;
            if (cmp.ag_better(mid)) in_pt = mid;
            else out_pt = mid;
        }
        return (out_pt + in_pt) / 2;
    };
    const int last = best_start + best_len - 1;
    double lo = best_start * kStep;
    double hi = last * kStep;
    if (best_start > 1) lo = refine((best_start - 1) * kStep, lo);
    if (last < kPoints) hi = refine((last + 1) * kStep, hi);

    CrossoverInterval out;
    out.axis = axis;
    out.tolerance = kRefine;
    if (axis == Axis::delta) {
        out.lo = lo;
        out.hi = hi;
    } else {
        out.lo = cmp.ag(hi);
        out.hi = cmp.ag(lo);
    }
    return out;
}

void write_crossover_csv(std::ostream& out, std::uint32_t q0, AgFamily family, GvParams gv, double step) {
    if (!(step > 0 && step < 1)) raise(Errc::OutOfRange, "step must lie in (0, 1)");
    const Comparator cmp(q0, family, gv);
    out << "delta,R_gv,R_ag\n";
    char line[96];
    for (int i = 1; i * step < 1 - 1e-12; ++i) {
        const double delta = i * step;
        std::snprintf(line, sizeof line, "%.6f,%.9f,%.9f\n", delta, cmp.gvr(delta), cmp.ag(delta));
        out << line;
    }
}

std::optional<GsVariant> parse_gs_variant(const std::string& name) {
    if (name == "prop43") return GsVariant::prop43;
    if (name == "prop44") return GsVariant::prop44;
    if (name == "prop45") return GsVariant::prop45;
    if (name == "prop46a") return GsVariant::prop46a;
    if (name == "prop46b") return GsVariant::prop46b;
    return std::nullopt;
}

FamilyParams gs_family_params(std::uint32_t q0, std::uint32_t l, std::int64_t ell, GsVariant variant,
                              std::optional<std::int64_t> r) {
    if (q0 < 2) raise(Errc::ConstraintViolated, "q0 must be at least 2");
    if (l < 2) raise(Errc::OutOfRange, "the tower index l must be at least 2");
    const std::int64_t Q = q0;
    const std::int64_t top = checked_pow(Q, l - 1);  // q0^(l-1)
    const std::int64_t n = checked_mul(top, Q * Q - 1);
    const std::int64_t n_prev = checked_mul(checked_pow(Q, l - 2), Q * Q - 1);

    FamilyParams out;
    out.n = n;
    out.ell_max = n_prev;
    // x-projection style: map of degree q0 with h = 2 q0^(l-1).
    auto first_kind = [&](std::int64_t rr) {
        out.r = rr;
        out.ell_min = n_prev / (Q - 1);
        out.k_lb = checked_mul(rr, ell - out.ell_min + 1);
        out.d_lb = n - checked_mul(ell, Q) - checked_mul(2 * (Q - 2), top);
    };
    // y-projection style: map of degree q0 + 1 with h = q0^(l-1).
    auto second_kind = [&](std::int64_t rr) {
        out.r = rr;
        out.ell_min = top;
        out.k_lb = checked_mul(rr, ell - top + 1);
        out.d_lb = n - checked_mul(ell, Q + 1) - checked_mul(Q - 1, top);
    };
    auto need_r = [&]() {
        if (!r || *r < 1) raise(Errc::ConstraintViolated, "this variant needs r");
        return *r;
    };

    switch (variant) {
        case GsVariant::prop43:
            if (r && *r != Q - 1) raise(Errc::ConstraintViolated, "prop43 has r = q0 - 1");
            first_kind(Q - 1);
            break;
        case GsVariant::prop44:
            if (r && *r != Q) raise(Errc::ConstraintViolated, "prop44 has r = q0");
            second_kind(Q);
            break;
        case GsVariant::prop45: {
            const std::int64_t rr = need_r();
            if ((Q + 1) % (rr + 1) != 0) raise(Errc::DivisibilityViolation, "prop45 needs (r+1) | (q0+1)");
            out.r = rr;
            out.ell_min = checked_mul(top, Q + 1) / (rr + 1);
            out.k_lb = checked_mul(rr, ell - out.ell_min + 1);
            out.d_lb = n - checked_mul(ell, rr + 1) - checked_mul(rr - 1, top);
            break;
        }
        case GsVariant::prop46a: {
            const std::int64_t rr = need_r();
            out.rho = Q - rr + 1;
            if (out.rho < 2) raise(Errc::ConstraintViolated, "prop46a needs r + rho - 1 = q0 with rho >= 2");
            first_kind(rr);
            break;
        }
        case GsVariant::prop46b: {
            const std::int64_t rr = need_r();
            out.rho = Q - rr + 2;
            if (out.rho < 2) raise(Errc::ConstraintViolated, "prop46b needs r + rho - 2 = q0 with rho >= 2");
            second_kind(rr);
            break;
        }
    }
    if (ell < out.ell_min || ell > out.ell_max) {
        raise(Errc::OutOfRange, "ell = " + std::to_string(ell) + " outside [" + std::to_string(out.ell_min) + ", " +
                                    std::to_string(out.ell_max) + "]");
    }
    if (out.d_lb < 1) raise(Errc::OutOfRange, "distance estimate is not positive");
    return out;
}

FiberProductParams fiber_product_params(std::uint32_t q0, std::uint32_t d1, std::uint32_t d2, std::int64_t ell) {
    if (q0 < 2 || d1 < 2 || d2 < 2) raise(Errc::ConstraintViolated, "need q0, d1, d2 >= 2");
    if (ell < 0) raise(Errc::OutOfRange, "ell must be nonnegative");
    if ((q0 + 1) % d1 != 0) raise(Errc::DivisibilityViolation, "d1 must divide q0 + 1");
    std::uint32_t rest = q0;
    while (rest % d2 == 0) rest /= d2;
    if (rest != 1) raise(Errc::DivisibilityViolation, "q0 must be a power of d2");

    const std::int64_t Q = q0;
    const std::int64_t e1 = (Q + 1) / d1;
    const std::int64_t e2 = Q / d2;

    FiberProductParams out;
    out.r1 = d1 - 1;
    out.r2 = d2 - 1;
    out.n = (Q * Q - 1) * Q;

    if ((Q == 2 && e1 == 3) || (Q == 3 && e1 == 2)) out.genus.g_y1 = 1;
    else out.genus.g_y1 = Rational((Q - 1) * (e1 - 1), 2);
    if (Q == 2 && e2 == 2 && d2 == 2) out.genus.g_y2 = 1;
    else out.genus.g_y2 = Rational(Q * (e2 - 1), 2);
    if (e1 == 1 || e2 == 1) {
        out.genus.g_y_tilde = 0;
    } else {
        const Rational a = Rational(e2 * (e1 - 1), 2) - Rational(e1 + 1, 2 * static_cast<std::int64_t>(d2)) + 1;
        const Rational b = Rational(e1 * (e2 - 1), 2) - Rational(e2 + 1, 2 * static_cast<std::int64_t>(d1)) + 1;
        out.genus.g_y_tilde = a < b ? a : b;
    }
    const std::int64_t g_floor = floor_of(out.genus.g_y_tilde).convert_to<std::int64_t>();
    out.k_lb = checked_mul(out.r1 * out.r2, ell - g_floor + 1);
    out.d_lb = out.n - checked_mul(ell, static_cast<std::int64_t>(d1) * d2) -
               checked_mul(static_cast<std::int64_t>(d1) + d2 - 4, Q);
    if (d1 == q0 + 1 && d2 == q0) out.bezout_d_lb = (Q + 1) * (Q * Q - 3 * Q + 3);

    // q0 = 3^(2b+1)
    std::uint32_t odd = q0, e = 0;
    while (odd % 3 == 0) {
        odd /= 3;
        ++e;
    }
    if (odd == 1 && e % 2 == 1 && d1 == 4 && d2 == 3) {
        const unsigned b = (e - 1) / 2;
        const BigInt num = 4 * boost::multiprecision::pow(BigInt(3), 4 * b + 2) -
                           13 * boost::multiprecision::pow(BigInt(3), 4 * b + 1) + 19;
        out.tabulated_genus = floor_of(Rational(num, 24)).convert_to<std::int64_t>();
    }
    return out;
}

RateRelation availability_asymptotic(std::uint32_t q0, std::uint32_t r1, std::uint32_t r2) {
    if (q0 < 2 || r1 < 1 || r2 < 1) raise(Errc::ConstraintViolated, "need q0 >= 2 and r1, r2 >= 1");
    if ((q0 + 1) % (r1 + 1) != 0) raise(Errc::DivisibilityViolation, "need (r1+1) | (q0+1)");
    if (q0 % (r2 + 1) != 0) raise(Errc::DivisibilityViolation, "need (r2+1) | q0");
    const std::int64_t Q = q0;
    RateRelation out;
    out.A = Rational(static_cast<std::int64_t>(r1 + 1) * (r2 + 1), static_cast<std::int64_t>(r1) * r2);
    out.B = Rational(Q - 2, Q - 1) - Rational(static_cast<std::int64_t>(r1) + r2 - 2, Q * Q - 1);
    return out;
}

RateRelation singleton_availability_relation(std::uint32_t r) {
    if (r < 1) raise(Errc::ConstraintViolated, "r must be positive");
    const std::int64_t R = r;
    return {Rational(R * R + R + 1, R * R), Rational(1)};
}

}  // namespace lrc::bounds
