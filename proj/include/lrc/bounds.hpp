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

// Upper and lower bounds on the parameters of locally recoverable codes,
// family parameter calculators and the asymptotic rate comparisons.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrc::bounds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& v);
double to_double(const Rational& v);

/// n - k + 1 - (ceil(k/r) - 1)(rho - 1).
std::int64_t singleton_rho(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho);

enum class AvailabilityBound {
    ceil_ratio = 1,  // n - k + 2 - ceil((t(k-1)+1)/(t(r-1)+1))
    floor_sum = 2,   // n - sum_{i=0..t} floor((k-1)/r^i)
};

std::int64_t availability_singleton(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t,
                                    AvailabilityBound which);

/// n - ell(r + rho - 1) - (r - 1)h, the distance estimate for evaluation
/// codes built from a degree-(r+rho-1) map with a degree-h coordinate.
std::int64_t evaluation_distance_bound(std::int64_t n, std::int64_t r, std::int64_t rho, std::int64_t ell, std::int64_t h);

/// Weight distribution A_0..A_n of an [r+rho-1, r, rho] MDS code over GF(q).
std::vector<BigInt> mds_weight_coefficients(std::uint64_t q, std::size_t r, std::size_t rho);

/// b(s) = sum_w A_w s^w for the MDS code above.
Rational mds_weight_enumerator(std::uint64_t q, std::size_t r, std::size_t rho, const Rational& s);
double mds_weight_enumerator(std::uint64_t q, std::size_t r, std::size_t rho, double s);

/// ((1 + (q-1)s)^(r+1) + (q-1)(1-s)^(r+1)) / q, the single-parity case.
double spc_weight_enumerator(std::uint64_t q, std::size_t r, double s);

struct BoundResult {
    double value = 0;
    std::optional<double> argmin_s;
    std::string formula_id;
    std::map<std::string, double> inputs;
};

/// Achievable rate r/n0 - min_s { log_q b(s)/n0 - delta log_q s }, n0 = r+rho-1.
/// The objective is tabulated once on a log grid of s; evaluate() then
/// refines the best grid bracket by golden section.
class GvLrcBound {
public:
    GvLrcBound(std::uint64_t q, std::size_t r, std::size_t rho);
    /// rho = 2 with b(s) taken from the closed form instead of the MDS sum.
    static GvLrcBound single_parity(std::uint64_t q, std::size_t r);

    /// Raw value; may be <= 0.
    BoundResult evaluate(double delta) const;

    std::uint64_t q() const noexcept { return q_; }
    std::size_t r() const noexcept { return r_; }
    std::size_t rho() const noexcept { return rho_; }

    static constexpr std::size_t kGridPoints = 10000;
    static constexpr double kSMin = 1e-15;
    static constexpr double kTolerance = 1e-9;

private:
    GvLrcBound(std::uint64_t q, std::size_t r, std::size_t rho, bool spc_closed_form);
    double log_b(double ln_s) const;
    double objective_at(double ln_s, double delta) const;

    std::uint64_t q_;
    std::size_t r_;
    std::size_t rho_;
    bool spc_;
    std::vector<double> log_coeffs_;  // ln A_w, -inf when A_w = 0
    std::vector<double> grid_ln_s_;
    std::vector<double> grid_log_b_;
};

/// Throws NoAdmissibleRate when the rate is not positive.
BoundResult gv_lrc_rate(std::uint64_t q, std::size_t r, std::size_t rho, double delta);

/// Same bound for rho = 2 through the closed-form enumerator.
BoundResult gv_lrc_rate_rho2(std::uint64_t q, std::size_t r, double delta);

enum class AgFamily {
    sqrtq_minus1,  // (r/(r+1))(1 - delta - 3/(q0+1)), r = q0-1
    sqrtq,         // (q0/(q0+1))(1 - delta - 2q0/(q-1)), r = q0
    small_r,       // (r/(r+1))(1 - delta - (q0+r)/(q0^2-1)), (r+1) | (q0+1)
    small_r2,      // (2/3)(1 - delta - 1/(q0-1) - 1/(q-1)), 3 | (q0+1)
    rho_variant,   // (r/(r+rho-1))(1 - delta - 3/(q0+1)), r+rho-1 = q0
    tvz,           // 1 - delta - 1/(q0-1)
};

std::string ag_family_name(AgFamily f);
std::optional<AgFamily> parse_ag_family(const std::string& name);

/// Locality the family uses by default, if it has one.
std::optional<std::size_t> ag_default_r(std::uint32_t q0, AgFamily family);

BoundResult ag_rate(std::uint32_t q0, AgFamily family, double delta, std::optional<std::size_t> r = std::nullopt,
                    std::optional<std::size_t> rho = std::nullopt);

enum class Axis { delta, rate };

struct GvParams {
    std::size_t r = 1;
    std::size_t rho = 2;
};

struct CrossoverInterval {
    double lo = 0;
    double hi = 0;
    Axis axis = Axis::delta;
    double tolerance = 0;
};

/// Longest run of delta where the AG rate is positive and exceeds the GV
/// rate over GF(q0^2), located on a 1e-3 grid and refined by bisection to
/// 1e-6. On the rate axis the endpoints are mapped through the AG curve.
CrossoverInterval crossover_interval(std::uint32_t q0, AgFamily family, GvParams gv, Axis axis);

/// delta,R_gv,R_ag rows on a uniform delta grid.
void write_crossover_csv(std::ostream& out, std::uint32_t q0, AgFamily family, GvParams gv, double step);

enum class GsVariant { prop43, prop44, prop45, prop46a, prop46b };

std::optional<GsVariant> parse_gs_variant(const std::string& name);

struct FamilyParams {
    std::int64_t n = 0;
    std::int64_t k_lb = 0;
    std::int64_t d_lb = 0;
    std::int64_t r = 0;
    std::int64_t rho = 2;
    std::int64_t ell_min = 0;
    std::int64_t ell_max = 0;
};

/// Codes on the l-th curve of the Garcia-Stichtenoth tower over GF(q0^2).
/// prop45 needs r with (r+1) | (q0+1); prop46a/prop46b need r with
/// r + rho - 1 = q0 and r + rho - 2 = q0 respectively.
FamilyParams gs_family_params(std::uint32_t q0, std::uint32_t l, std::int64_t ell, GsVariant variant,
                              std::optional<std::int64_t> r = std::nullopt);

struct GenusData {
    Rational g_y1;
    Rational g_y2;
    Rational g_y_tilde;
};

struct FiberProductParams {
    std::int64_t n = 0;
    std::int64_t k_lb = 0;
    std::int64_t d_lb = 0;
    std::int64_t r1 = 0;
    std::int64_t r2 = 0;
    GenusData genus;
    /// (q0+1)(q0^2-3q0+3), reported when d1 = q0+1 and d2 = q0.
    std::optional<std::int64_t> bezout_d_lb;
    /// floor((4*3^(4b+2) - 13*3^(4b+1) + 19)/24), reported for q0 = 3^(2b+1),
    /// d1 = 4, d2 = 3. It does not agree with g_y_tilde.
    std::optional<std::int64_t> tabulated_genus;
};

/// Two-recovery-set codes on the Hermitian curve from the maps of degree d1
/// and d2; d1 | (q0+1) and q0 is a power of d2. k_lb uses floor(g_y_tilde).
FiberProductParams fiber_product_params(std::uint32_t q0, std::uint32_t d1, std::uint32_t d2, std::int64_t ell);

/// delta + A R >= B.
struct RateRelation {
    Rational A;
    Rational B;
};

RateRelation availability_asymptotic(std::uint32_t q0, std::uint32_t r1, std::uint32_t r2);

/// The comparison relation delta + ((r^2+r+1)/r^2) R >= 1.
RateRelation singleton_availability_relation(std::uint32_t r);

}  // namespace lrc::bounds
