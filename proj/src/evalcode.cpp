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

#include "lrc/evalcode.hpp"

#include <algorithm>

#include "lrc/error.hpp"

namespace lrc {

std::optional<std::size_t> RecoveryStructure::group_of(std::size_t coordinate) const {
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& c = groups[g].coordinates;
        if (std::find(c.begin(), c.end(), coordinate) != c.end()) return g;
    }
    return std::nullopt;
}

bool operator==(const EvalCode& lhs, const EvalCode& rhs) {
    const bool fields = (lhs.field == rhs.field) || (lhs.field && rhs.field && *lhs.field == *rhs.field);
    return fields && lhs.n == rhs.n && lhs.k == rhs.k && lhs.generator == rhs.generator &&
           lhs.recovery == rhs.recovery && lhs.meta == rhs.meta;
}

std::size_t Codeword::erasure_count() const noexcept {
    return static_cast<std::size_t>(std::count(erased.begin(), erased.end(), true));
}

std::vector<std::size_t> Codeword::erased_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < erased.size(); ++i) {
        if (erased[i]) out.push_back(i);
    }
    return out;
}

void validate_shape(const EvalCode& code) {
    auto fail = [](const std::string& what) { raise(Errc::InvalidCode, what); };
    if (!code.field) fail("missing field");
    if (code.k > code.n) fail("k exceeds n");
    if (code.generator.rows() != code.k || code.generator.cols() != code.n) fail("generator must be k x n");
    for (std::size_t i = 0; i < code.k; ++i) {
        for (auto v : code.generator.row(i)) {
            if (v.value >= code.F().size()) fail("generator entry outside the field");
        }
    }
    if (code.recovery.empty()) fail("at least one recovery structure is required");
    if (code.meta.d_lb < 1) fail("distance lower bound must be at least 1");
    for (std::size_t s = 0; s < code.recovery.size(); ++s) {
        const auto& rs = code.recovery[s];
        const std::string where = "structure " + std::to_string(s) + ": ";
        if (rs.rho < 2) fail(where + "rho must be at least 2");
        if (rs.r < 1) fail(where + "r must be at least 1");
        std::vector<char> seen(code.n, 0);
        std::size_t covered = 0;
        for (const auto& g : rs.groups) {
            if (g.coordinates.size() != rs.r + rs.rho - 1) fail(where + "group size must be r + rho - 1");
            if (g.local_coords.size() != g.coordinates.size()) fail(where + "one local coordinate per index");
            if (g.local_degree_bound + 1 != rs.r) fail(where + "local degree bound must be r - 1");
            for (std::size_t i = 0; i < g.coordinates.size(); ++i) {
                const std::size_t c = g.coordinates[i];
                if (c >= code.n) fail(where + "coordinate out of range");
                if (seen[c]) fail(where + "groups overlap");
                seen[c] = 1;
                ++covered;
                if (g.local_coords[i].value >= code.F().size()) fail(where + "local coordinate outside the field");
                for (std::size_t j = 0; j < i; ++j) {
                    if (g.local_coords[j] == g.local_coords[i]) fail(where + "local coordinates must be distinct");
                }
            }
        }
        if (!rs.partial && covered != code.n) fail(where + "groups do not cover every coordinate");
    }
}

void check_structural_law(const EvalCode& code) {
    const Field& F = code.F();
    std::vector<InterpolationPoint> pts;
    for (std::size_t s = 0; s < code.recovery.size(); ++s) {
        const auto& rs = code.recovery[s];
        for (std::size_t g = 0; g < rs.groups.size(); ++g) {
            const auto& grp = rs.groups[g];
            const std::size_t need = grp.local_degree_bound + 1;
            for (std::size_t row = 0; row < code.k; ++row) {
                pts.clear();
                for (std::size_t i = 0; i < need; ++i) {
                    pts.push_back({grp.local_coords[i], code.generator(row, grp.coordinates[i])});
                }
                const Poly f = lagrange_interpolate(F, pts);
                for (std::size_t i = need; i < grp.size(); ++i) {
                    if (poly_eval(F, f, grp.local_coords[i]) != code.generator(row, grp.coordinates[i])) {
                        raise(Errc::InvalidCode, "generator row " + std::to_string(row) +
                                                     " is not low-degree on group " + std::to_string(g) +
                                                     " of structure " + std::to_string(s));
                    }
                }
            }
        }
    }
}

void validate(const EvalCode& code) {
    validate_shape(code);
    check_structural_law(code);
    if (rank(code.F(), code.generator) != code.k) raise(Errc::InvalidCode, "generator is rank deficient");
}

Codeword encode(const EvalCode& code, std::span<const FieldElement> message) {
    if (message.size() != code.k) {
        raise(Errc::LengthMismatch, "message has " + std::to_string(message.size()) + " symbols, expected " +
                                        std::to_string(code.k));
    }
    return Codeword(vec_mat(code.F(), message, code.generator));
}

Codeword erase(Codeword cw, std::span<const std::size_t> indices) {
    for (auto i : indices) {
        if (i >= cw.size()) raise(Errc::IndexOutOfRange, "index " + std::to_string(i) + " out of range");
        cw.erased[i] = true;
        cw.symbols[i] = FieldElement{};
    }
    return cw;
}

GroupRepair repair_group_in_place(const EvalCode& code, Codeword& cw, std::size_t structure, std::size_t group) {
    if (cw.size() != code.n) raise(Errc::LengthMismatch, "codeword length does not match the code");
    if (structure >= code.recovery.size()) raise(Errc::IndexOutOfRange, "no such recovery structure");
    const auto& rs = code.recovery[structure];
    if (group >= rs.groups.size()) raise(Errc::IndexOutOfRange, "no such group");
    const auto& grp = rs.groups[group];
    const Field& F = code.F();

    GroupRepair out{structure, group, {}, {}};
    const std::size_t need = grp.local_degree_bound + 1;
    std::vector<InterpolationPoint> pts;
    pts.reserve(need);
    std::size_t missing = 0;
    for (std::size_t i = 0; i < grp.size(); ++i) {
        const std::size_t c = grp.coordinates[i];
        if (cw.erased[c]) {
            ++missing;
        } else if (pts.size() < need) {
            pts.push_back({grp.local_coords[i], cw.symbols[c]});
        }
    }
    if (missing == 0) return out;
    if (pts.size() < need) {
        raise(Errc::TooManyErasuresInGroup, std::to_string(missing) + " erasures in group " + std::to_string(group) +
                                                ", at most " + std::to_string(grp.size() - need) + " repairable");
    }
    out.interpolant = lagrange_interpolate(F, pts);
    std::size_t used = 0;
    for (std::size_t i = 0; i < grp.size(); ++i) {
        const std::size_t c = grp.coordinates[i];
        if (cw.erased[c]) continue;
        if (used++ < need) continue;
        if (poly_eval(F, out.interpolant, grp.local_coords[i]) != cw.symbols[c]) {
            raise(Errc::InconsistentGroup, "known symbols of group " + std::to_string(group) +
                                               " do not lie on a polynomial of degree < " + std::to_string(need));
        }
    }
    for (std::size_t i = 0; i < grp.size(); ++i) {
        const std::size_t c = grp.coordinates[i];
        if (!cw.erased[c]) continue;
        cw.symbols[c] = poly_eval(F, out.interpolant, grp.local_coords[i]);
        cw.erased[c] = false;
        out.filled.push_back(c);
    }
    return out;
}

Codeword local_repair_group(const EvalCode& code, const Codeword& cw, std::size_t structure, std::size_t group) {
    Codeword out = cw;
    repair_group_in_place(code, out, structure, group);
    return out;
}

RepairOutcome repair_all(const EvalCode& code, Codeword cw) {
    if (cw.size() != code.n) raise(Errc::LengthMismatch, "codeword length does not match the code");
    RepairOutcome out;
    bool progress = true;
    while (progress && cw.erasure_count() > 0) {
        progress = false;
        for (std::size_t s = 0; s < code.recovery.size(); ++s) {
            const auto& rs = code.recovery[s];
            for (std::size_t g = 0; g < rs.groups.size(); ++g) {
                const auto& grp = rs.groups[g];
                std::size_t missing = 0;
                for (auto c : grp.coordinates) missing += cw.erased[c] ? 1 : 0;
                if (missing == 0 || grp.size() - missing < grp.local_degree_bound + 1) continue;
                out.steps.push_back(repair_group_in_place(code, cw, s, g));
                progress = true;
            }
        }
    }
    out.still_erased = cw.erased_indices();
    out.codeword = std::move(cw);
    return out;
}

EvalCode puncture(const EvalCode& code, std::span<const std::size_t> coordinates) {
    std::vector<char> drop(code.n, 0);
    for (auto c : coordinates) {
        if (c >= code.n) raise(Errc::IndexOutOfRange, "puncture index out of range");
        drop[c] = 1;
    }
    std::vector<std::size_t> remap(code.n, code.n);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < code.n; ++i) {
        if (!drop[i]) {
            remap[i] = kept.size();
            kept.push_back(i);
        }
    }
    EvalCode out;
    out.field = code.field;
    out.n = kept.size();
    out.k = code.k;
    out.generator = select_columns(code.generator, kept);
    for (const auto& rs : code.recovery) {
        RecoveryStructure next{{}, rs.r, rs.rho, rs.label, rs.partial};
        for (const auto& grp : rs.groups) {
            const auto hit = std::count_if(grp.coordinates.begin(), grp.coordinates.end(),
                                           [&](std::size_t c) { return drop[c] != 0; });
            if (hit == static_cast<std::ptrdiff_t>(grp.size())) continue;
            if (hit > 0) {
                next.partial = true;
                continue;
            }
            RepairGroup g = grp;
            for (auto& c : g.coordinates) c = remap[c];
            next.groups.push_back(std::move(g));
        }
        out.recovery.push_back(std::move(next));
    }
    out.meta = code.meta;
    const auto removed = static_cast<std::int64_t>(code.n - out.n);
    out.meta.d_lb = std::max<std::int64_t>(1, code.meta.d_lb - removed);
    out.meta.params["punctured"] = removed;
    validate(out);
    return out;
}

}  // namespace lrc
