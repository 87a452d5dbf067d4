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

#include "lrc/hermitian.hpp"

#include <algorithm>
#include <string>

#include "lrc/bounds.hpp"
#include "lrc/error.hpp"

namespace lrc {

namespace {

struct PrimePower {
    std::uint32_t p;
    std::uint32_t e;
};

std::optional<PrimePower> as_prime_power(std::uint32_t n) {
    if (n < 2) return std::nullopt;
    std::uint32_t p = 2;
    while (n % p != 0) ++p;
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) return std::nullopt;
    return PrimePower{p, e};
}

std::vector<FieldElement> evaluate_monomials(const Field& F, const std::vector<CurvePoint>& pts, std::size_t xe,
                                             std::size_t ye) {
    std::vector<FieldElement> row(pts.size());
    for (std::size_t c = 0; c < pts.size(); ++c) {
        row[c] = F.mul(F.pow(pts[c].x, static_cast<std::int64_t>(xe)), F.pow(pts[c].y, static_cast<std::int64_t>(ye)));
    }
    return row;
}

struct Monomial {
    std::size_t xe;
    std::size_t ye;
};

EvalCode build(const HermitianData& H, const std::vector<CurvePoint>& pts, const std::vector<Monomial>& basis) {
    const Field& F = *H.field;
    EvalCode code;
    code.field = H.field;
    code.n = pts.size();
    code.k = basis.size();
    code.generator = Matrix(code.k, code.n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto row = evaluate_monomials(F, pts, basis[i].xe, basis[i].ye);
        std::copy(row.begin(), row.end(), code.generator.row(i).begin());
    }
    if (rank(F, code.generator) != code.k) raise(Errc::DependentBasis, "monomial evaluations are dependent");
    return code;
}

// Groups points of `pts` by one coordinate, keeping only fibers of the
// expected size, with the other coordinate as local coordinate.
RecoveryStructure fibers(const std::vector<CurvePoint>& pts, bool by_y, std::size_t r, std::string label) {
    RecoveryStructure rs{{}, r, 2, std::move(label), false};
    std::vector<std::pair<FieldElement, std::size_t>> keyed;
    for (std::size_t c = 0; c < pts.size(); ++c) keyed.emplace_back(by_y ? pts[c].y : pts[c].x, c);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < keyed.size();) {
        RepairGroup g;
        g.local_degree_bound = r - 1;
        std::size_t j = i;
        for (; j < keyed.size() && keyed[j].first == keyed[i].first; ++j) {
            const std::size_t c = keyed[j].second;
            g.coordinates.push_back(c);
            g.local_coords.push_back(by_y ? pts[c].x : pts[c].y);
        }
        rs.groups.push_back(std::move(g));
        i = j;
    }
    return rs;
}

std::vector<CurvePoint> off_trace_zero(const HermitianData& H) {
    std::vector<CurvePoint> pts;
    for (const auto& pt : H.points) {
        if (!H.x_in_trace_zero(pt.x)) pts.push_back(pt);
    }
    return pts;
}

}  // namespace

bool HermitianData::x_in_trace_zero(FieldElement x) const {
    return std::binary_search(trace_zero.begin(), trace_zero.end(), x);
}

HermitianData hermitian_points(std::uint32_t q0) {
    const auto pp = as_prime_power(q0);
    if (!pp) raise(Errc::UnsupportedSize, "q0 = " + std::to_string(q0) + " is not a prime power");
    if (q0 > 16) raise(Errc::UnsupportedSize, "q0 = " + std::to_string(q0) + " exceeds 16");

    HermitianData H;
    H.q0 = q0;
    H.field = Field::create(pp->p, 2 * pp->e);
    const Field& F = *H.field;
    const std::uint32_t q = F.size();

    std::vector<FieldElement> norm(q), trace(q);
    for (std::uint32_t v = 0; v < q; ++v) {
        const FieldElement a{v};
        norm[v] = F.pow(a, q0 + 1);
        trace[v] = F.add(F.pow(a, q0), a);
        if (trace[v] == F.zero()) H.trace_zero.push_back(a);
    }
    H.y_fibers.resize(q);
    H.x_fibers.resize(q);
    for (std::uint32_t y = 0; y < q; ++y) {
        for (std::uint32_t x = 0; x < q; ++x) {
            if (trace[x] != norm[y]) continue;
            H.y_fibers[y].push_back(H.points.size());
            H.x_fibers[x].push_back(H.points.size());
            H.points.push_back({FieldElement{x}, FieldElement{y}});
        }
    }
    return H;
}

EvalCode construct_y_projection_code(std::uint32_t q0, std::int64_t ell) {
    if (ell < 1) raise(Errc::ConstraintViolated, "ell must be at least 1");
    const HermitianData H = hermitian_points(q0);
    const std::int64_t Q = q0;
    const std::int64_t n = Q * Q * Q;
    const std::int64_t d_lb = bounds::evaluation_distance_bound(n, Q - 1, 2, ell, Q + 1);
    if (d_lb < 1) raise(Errc::DistanceBoundNonpositive, "d_lb = " + std::to_string(d_lb) + " for ell = " + std::to_string(ell));

    std::vector<Monomial> basis;
    for (std::size_t i = 0; i + 2 <= q0; ++i) {
        for (std::int64_t j = 0; j <= ell; ++j) basis.push_back({i, static_cast<std::size_t>(j)});
    }
    EvalCode code = build(H, H.points, basis);
    code.recovery.push_back(fibers(H.points, true, q0 - 1, "y-fibers"));
    code.meta.family = "hermitian-y";
    code.meta.r = q0 - 1;
    code.meta.rho = 2;
    code.meta.ell = ell;
    code.meta.h = Q + 1;
    code.meta.d_lb = d_lb;
    code.meta.params["q0"] = Q;
    validate(code);
    return code;
}

EvalCode construct_x_projection_code(std::uint32_t q0, std::int64_t ell) {
    if (ell < 1) raise(Errc::ConstraintViolated, "ell must be at least 1");
    const HermitianData H = hermitian_points(q0);
    const std::int64_t Q = q0;
    const std::int64_t n = Q * Q * Q - Q;
    const std::int64_t d_lb = bounds::evaluation_distance_bound(n, Q, 2, ell, Q);
    if (d_lb < 1) raise(Errc::DistanceBoundNonpositive, "d_lb = " + std::to_string(d_lb) + " for ell = " + std::to_string(ell));

    std::vector<Monomial> basis;
    for (std::int64_t j = 0; j <= ell; ++j) {
        for (std::size_t i = 0; i < q0; ++i) basis.push_back({static_cast<std::size_t>(j), i});
    }
    const auto pts = off_trace_zero(H);
    EvalCode code = build(H, pts, basis);
    code.recovery.push_back(fibers(pts, false, q0, "x-fibers"));
    code.meta.family = "hermitian-x";
    code.meta.r = q0;
    code.meta.rho = 2;
    code.meta.ell = ell;
    code.meta.h = Q;
    code.meta.d_lb = d_lb;
    code.meta.params["q0"] = Q;
    validate(code);
    return code;
}

EvalCode construct_availability_code(std::uint32_t q0) {
    const HermitianData H = hermitian_points(q0);
    const std::int64_t Q = q0;
    std::vector<Monomial> basis;
    for (std::size_t i = 0; i + 2 <= q0; ++i) {
        for (std::size_t j = 0; j < q0; ++j) basis.push_back({i, j});
    }
    const auto pts = off_trace_zero(H);
    EvalCode code = build(H, pts, basis);
    code.recovery.push_back(fibers(pts, true, q0 - 1, "y-fibers"));
    code.recovery.push_back(fibers(pts, false, q0, "x-fibers"));
    code.meta.family = "hermitian-avail";
    code.meta.r = q0 - 1;
    code.meta.rho = 2;
    code.meta.d_lb = (Q + 1) * (Q * Q - 3 * Q + 3);
    code.meta.params["q0"] = Q;
    code.meta.params["r1"] = Q - 1;
    code.meta.params["r2"] = Q;
    validate(code);
    return code;
}

std::optional<std::int64_t> ballico_distance(std::uint32_t q0, std::int64_t ell) {
    const std::int64_t q = static_cast<std::int64_t>(q0) * q0;
    if (ell < q - q0 + 1 || ell > q - 1) return std::nullopt;
    return q - ell + 1;
}

}  // namespace lrc
