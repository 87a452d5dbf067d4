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

// Brute-force checks on small codes: minimum distance, weight distribution
// and the locality and availability properties, by enumerating messages.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lrc/evalcode.hpp"

namespace lrc {

struct OracleOptions {
    std::uint64_t cap = 10'000'000;  // largest q^k enumerated exhaustively
    unsigned threads = 0;            // 0: hardware concurrency
    std::uint64_t seed = 0;          // for sampling above the cap
    std::size_t samples = 10'000;
};

/// q^k, saturating at UINT64_MAX.
std::uint64_t message_count(std::uint32_t q, std::size_t k);

/// Returning false stops the enumeration.
using CodewordVisitor =
    std::function<bool(std::uint64_t index, std::span<const FieldElement> message, std::span<const FieldElement> word)>;

/// Visits messages with index in [begin, end) in increasing order. Message
/// digit i (least significant first, base q) is symbol i.
void for_each_codeword(const Field& field, const Matrix& generator, std::uint64_t begin, std::uint64_t end,
                       const CodewordVisitor& visit);

/// Throws TooLarge above the cap.
std::size_t min_distance_exhaustive(const EvalCode& code, const OracleOptions& opts = {});

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // A_0..A_n

    std::uint64_t total() const;
    /// Smallest w > 0 with A_w > 0, or 0 for the zero code.
    std::size_t min_nonzero_weight() const;
};

WeightDistribution weight_distribution_exhaustive(const Field& field, const Matrix& generator,
                                                  const OracleOptions& opts = {});
WeightDistribution weight_distribution_exhaustive(const EvalCode& code, const OracleOptions& opts = {});

enum class VerifyStatus { proved, sampled, violated };

std::string_view status_name(VerifyStatus s);

/// Two messages whose codewords agree on the recovery set but not at the
/// coordinate. Sampled violations only carry message_a.
struct LocalityWitness {
    std::size_t coordinate = 0;
    std::vector<std::size_t> recovery_set;
    std::vector<FieldElement> message_a;
    std::vector<FieldElement> message_b;
};

struct LocalityReport {
    VerifyStatus status = VerifyStatus::proved;
    std::size_t structure = 0;
    std::uint64_t codewords_checked = 0;
    std::optional<LocalityWitness> witness;
};

/// The recovery set of coordinate i is the first r other coordinates of its
/// group. Coordinates outside every group of a partial structure are skipped.
LocalityReport verify_locality(const EvalCode& code, std::size_t structure, const OracleOptions& opts = {});

struct LocalDistanceWitness {
    std::size_t group = 0;
    std::vector<FieldElement> local_word;
};

struct LocalDistanceReport {
    VerifyStatus status = VerifyStatus::proved;
    std::size_t structure = 0;
    std::size_t rho = 2;
    /// Over all groups; 0 when every restriction is the zero code.
    std::size_t min_local_distance = 0;
    std::optional<LocalDistanceWitness> witness;
};

/// Each group restriction must be a code of minimum distance >= rho.
LocalDistanceReport verify_local_distance(const EvalCode& code, std::size_t structure, std::size_t rho,
                                          const OracleOptions& opts = {});

struct OverlapWitness {
    std::size_t coordinate = 0;
    std::size_t structure_a = 0;
    std::size_t structure_b = 0;
    std::size_t shared = 0;
};

struct AvailabilityReport {
    VerifyStatus status = VerifyStatus::proved;
    std::size_t t = 0;
    std::vector<std::size_t> recovery_sizes;
    bool disjoint = true;
    std::optional<OverlapWitness> overlap;
    std::vector<LocalityReport> locality;
};

/// Throws NotAvailabilityCode for fewer than two structures.
AvailabilityReport verify_availability(const EvalCode& code, const OracleOptions& opts = {});

}  // namespace lrc
