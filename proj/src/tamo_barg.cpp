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

#include "lrc/tamo_barg.hpp"

#include "lrc/bounds.hpp"
#include "lrc/error.hpp"

namespace lrc {

TamoBargSpec make_tamo_barg_spec(FieldPtr field, std::size_t r, std::size_t rho, GroupKind kind,
                                 std::vector<FieldElement> subgroup, const CosetSelection& selection,
                                 std::size_t k, std::optional<GoodPolyForm> form) {
    const GoodPolyForm chosen =
        form.value_or(kind == GroupKind::multiplicative ? GoodPolyForm::power : GoodPolyForm::annihilator);
    TamoBargSpec spec;
    spec.field = field;
    spec.r = r;
    spec.rho = rho;
    spec.subgroup_kind = kind;
    spec.cosets = cosets(*field, subgroup, kind, selection);
    spec.g = good_polynomial(*field, subgroup, kind, chosen);
    spec.subgroup = std::move(subgroup);
    spec.k = k;
    return spec;
}

EvalCode construct_tb(const TamoBargSpec& spec) {
    if (!spec.field) raise(Errc::InvalidCode, "missing field");
    const Field& F = *spec.field;
    if (spec.r < 1 || spec.rho < 2) raise(Errc::ConstraintViolated, "need r >= 1 and rho >= 2");
    const std::size_t group = spec.r + spec.rho - 1;
    if (spec.subgroup.size() != group) {
        raise(Errc::DivisibilityViolation, "subgroup order must equal r + rho - 1 = " + std::to_string(group));
    }
    if (spec.g.degree() != static_cast<int>(group)) {
        raise(Errc::DivisibilityViolation, "good polynomial must have degree r + rho - 1");
    }
    if (spec.k == 0 || spec.k % spec.r != 0) raise(Errc::DivisibilityViolation, "r must divide k");
    if (spec.cosets.empty()) raise(Errc::DivisibilityViolation, "no cosets selected");
    for (const auto& c : spec.cosets) {
        if (c.size() != group) raise(Errc::DivisibilityViolation, "every coset must have r + rho - 1 points");
        const FieldElement v = poly_eval(F, spec.g, c.front());
        for (auto x : c) {
            if (poly_eval(F, spec.g, x) != v) raise(Errc::NotConstantOnCosets, "g is not constant on a coset");
        }
    }
    const std::size_t n = group * spec.cosets.size();
    const std::size_t blocks = spec.k / spec.r;
    if (blocks > spec.cosets.size()) {
        raise(Errc::DegreeOverflow, "deg f_a reaches n: k/r = " + std::to_string(blocks) + " exceeds " +
                                        std::to_string(spec.cosets.size()) + " cosets");
    }

    std::vector<FieldElement> points;
    points.reserve(n);
    for (const auto& c : spec.cosets) points.insert(points.end(), c.begin(), c.end());

    EvalCode code;
    code.field = spec.field;
    code.n = n;
    code.k = spec.k;
    code.generator = Matrix(spec.k, n);
    Poly g_power = Poly::constant(F.one());
    for (std::size_t j = 0; j < blocks; ++j) {
        for (std::size_t i = 0; i < spec.r; ++i) {
            const Poly f = poly_mul(F, g_power, Poly::monomial(F.one(), i));
            for (std::size_t c = 0; c < n; ++c) code.generator(j * spec.r + i, c) = poly_eval(F, f, points[c]);
        }
        g_power = poly_mul(F, g_power, spec.g);
    }

    RecoveryStructure rs{{}, spec.r, spec.rho, "cosets", false};
    for (std::size_t b = 0; b < spec.cosets.size(); ++b) {
        RepairGroup grp;
        grp.local_degree_bound = spec.r - 1;
        for (std::size_t i = 0; i < group; ++i) {
            grp.coordinates.push_back(b * group + i);
            grp.local_coords.push_back(points[b * group + i]);
        }
        rs.groups.push_back(std::move(grp));
    }
    code.recovery.push_back(std::move(rs));

    code.meta.family = "tamo-barg";
    code.meta.r = spec.r;
    code.meta.rho = spec.rho;
    code.meta.d_lb = tb_optimal_distance(static_cast<std::int64_t>(n), static_cast<std::int64_t>(spec.k),
                                         static_cast<std::int64_t>(spec.r), static_cast<std::int64_t>(spec.rho));
    code.meta.params["cosets"] = static_cast<std::int64_t>(spec.cosets.size());
    code.meta.params["subgroup_order"] = static_cast<std::int64_t>(group);
    code.meta.params["additive"] = spec.subgroup_kind == GroupKind::additive ? 1 : 0;
    validate(code);
    return code;
}

std::int64_t tb_optimal_distance(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho) {
    return bounds::singleton_rho(n, k, r, rho);
}

}  // namespace lrc
