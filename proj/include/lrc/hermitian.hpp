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

// Codes on the Hermitian curve x^q0 + x = y^(q0+1) over GF(q0^2).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/evalcode.hpp"
#include "lrc/galois.hpp"

namespace lrc {

struct CurvePoint {
    FieldElement x;
    FieldElement y;

    friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

struct HermitianData {
    std::uint32_t q0 = 0;
    FieldPtr field;
    std::vector<CurvePoint> points;       // sorted by (y, x)
    std::vector<FieldElement> trace_zero;  // M = {a : a^q0 + a = 0}
    /// Indices into points. One y-fiber per field element in increasing
    /// order; x-fibers likewise, so fibers over M hold a single point.
    std::vector<std::vector<std::size_t>> y_fibers;
    std::vector<std::vector<std::size_t>> x_fibers;

    bool x_in_trace_zero(FieldElement x) const;
};

/// All q0^3 affine points. q0 must be a prime power <= 16.
HermitianData hermitian_points(std::uint32_t q0);

/// Monomials x^i y^j (i <= q0-2, j <= ell) on all points; repair along
/// y-fibers with x as local coordinate.
EvalCode construct_y_projection_code(std::uint32_t q0, std::int64_t ell);

/// Monomials x^j y^i (j <= ell, i <= q0-1) on the points with y != 0; repair
/// along x-fibers with y as local coordinate.
EvalCode construct_x_projection_code(std::uint32_t q0, std::int64_t ell);

/// Monomials x^i y^j (i <= q0-2, j <= q0-1) on the points with y != 0, with
/// both the y-fibers and the x-fibers as recovery structures.
EvalCode construct_availability_code(std::uint32_t q0);

/// The lower bound q - ell + 1 for q - q0 + 1 <= ell <= q - 1.
std::optional<std::int64_t> ballico_distance(std::uint32_t q0, std::int64_t ell);

}  // namespace lrc
