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

#include "lrc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "lrc/error.hpp"

namespace lrc {

namespace {

unsigned worker_count(const OracleOptions& opts, std::uint64_t work) {
    unsigned t = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (work < 4096) t = 1;
    return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(work, 1)));
}

/// Splits [0, total) into contiguous ranges and runs fn(begin, end, slot).
template <class Fn>
void run_partitioned(std::uint64_t total, unsigned workers, Fn fn) {
    if (workers <= 1) {
        fn(std::uint64_t{0}, total, 0u);
        return;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t b = std::min(total, w * chunk);
        const std::uint64_t e = std::min(total, b + chunk);
        pool.emplace_back([=, &fn] { fn(b, e, w); });
    }
    for (auto& th : pool) th.join();
}

std::uint64_t checked_count(const Field& F, std::size_t k, const OracleOptions& opts) {
    const std::uint64_t total = message_count(F.size(), k);
    if (total > opts.cap) {
        raise(Errc::TooLarge, "q^k = " + (total == std::numeric_limits<std::uint64_t>::max()
                                              ? std::string("overflow")
                                              : std::to_string(total)) +
                                  " exceeds the cap " + std::to_string(opts.cap));
    }
    return total;
}

std::size_t weight(std::span<const FieldElement> w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](FieldElement x) { return x.value != 0; }));
}

std::vector<FieldElement> random_message(std::mt19937_64& rng, const Field& F, std::size_t k) {
    std::uniform_int_distribution<std::uint32_t> dist(0, F.size() - 1);
    std::vector<FieldElement> m(k);
    for (auto& x : m) x = FieldElement{dist(rng)};
    return m;
}

std::vector<FieldElement> decode_index(std::uint64_t index, std::uint32_t q, std::size_t k) {
    std::vector<FieldElement> m(k);
    for (std::size_t i = 0; i < k; ++i) {
        m[i] = FieldElement{static_cast<std::uint32_t>(index % q)};
        index /= q;
    }
    return m;
}

// First r coordinates of the group other than `coord`, with their local coordinates.
struct RecoverySet {
    bool covered = false;
    std::vector<std::size_t> coords;
    std::vector<FieldElement> local;
    FieldElement self_local;
};

std::vector<RecoverySet> recovery_sets(const EvalCode& code, std::size_t structure) {
    const auto& rs = code.recovery.at(structure);
    std::vector<RecoverySet> out(code.n);
    for (const auto& g : rs.groups) {
        for (std::size_t a = 0; a < g.size(); ++a) {
            RecoverySet& set = out[g.coordinates[a]];
            set.covered = true;
            set.self_local = g.local_coords[a];
            for (std::size_t b = 0; b < g.size() && set.coords.size() < rs.r; ++b) {
                if (b == a) continue;
                set.coords.push_back(g.coordinates[b]);
                set.local.push_back(g.local_coords[b]);
            }
        }
    }
    return out;
}

}  // namespace

std::uint64_t message_count(std::uint32_t q, std::size_t k) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        total *= q;
    }
    return total;
}

void for_each_codeword(const Field& F, const Matrix& G, std::uint64_t begin, std::uint64_t end,
                       const CodewordVisitor& visit) {
    const std::size_t k = G.rows();
    const std::size_t n = G.cols();
    const std::uint32_t q = F.size();
    if (begin >= end) return;
    std::vector<FieldElement> msg = decode_index(begin, q, k);
    std::vector<FieldElement> word = vec_mat(F, msg, G);
    for (std::uint64_t index = begin;;) {
        if (!visit(index, msg, word)) return;
        if (++index >= end) return;
        // Increment the base-q counter, patching the codeword one digit at a time.
        for (std::size_t i = 0; i < k; ++i) {
            const FieldElement old = msg[i];
            const FieldElement next{old.value + 1 == q ? 0u : old.value + 1};
            msg[i] = next;
            const auto row = G.row(i);
            for (std::size_t c = 0; c < n; ++c) {
                if (row[c].value == 0) continue;
                word[c] = F.add(F.sub(word[c], F.mul(old, row[c])), F.mul(next, row[c]));
            }
            if (next.value != 0) break;
        }
    }
}

std::size_t min_distance_exhaustive(const EvalCode& code, const OracleOptions& opts) {
    return weight_distribution_exhaustive(code, opts).min_nonzero_weight();
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

std::size_t WeightDistribution::min_nonzero_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w) {
        if (counts[w] != 0) return w;
    }
    return 0;
}

WeightDistribution weight_distribution_exhaustive(const Field& F, const Matrix& G, const OracleOptions& opts) {
    const std::uint64_t total = checked_count(F, G.rows(), opts);
    const unsigned workers = worker_count(opts, total);
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(G.cols() + 1, 0));
    run_partitioned(total, workers, [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
        auto& counts = partial[slot];
        for_each_codeword(F, G, b, e, [&](std::uint64_t, auto, std::span<const FieldElement> w) {
            ++counts[weight(w)];
            return true;
        });
    });
    WeightDistribution out;
    out.counts.assign(G.cols() + 1, 0);
    for (const auto& p : partial) {
        for (std::size_t w = 0; w < p.size(); ++w) out.counts[w] += p[w];
    }
    return out;
}

WeightDistribution weight_distribution_exhaustive(const EvalCode& code, const OracleOptions& opts) {
    return weight_distribution_exhaustive(code.F(), code.generator, opts);
}

std::string_view status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::proved: return "proved";
        case VerifyStatus::sampled: return "sampled";
        case VerifyStatus::violated: return "violated";
    }
    return "?";
}

LocalityReport verify_locality(const EvalCode& code, std::size_t structure, const OracleOptions& opts) {
    if (structure >= code.recovery.size()) raise(Errc::IndexOutOfRange, "no such recovery structure");
    const Field& F = code.F();
    const auto sets = recovery_sets(code, structure);
    LocalityReport report;
    report.structure = structure;

    const std::uint64_t total = message_count(F.size(), code.k);
    if (total <= opts.cap) {
        // By linearity it suffices to find a codeword vanishing on A_i but not at i.
        struct Hit {
            std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
            std::size_t coord = 0;
        };
        const unsigned workers = worker_count(opts, total);
        std::vector<Hit> hits(workers);
        run_partitioned(total, workers, [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
            for_each_codeword(F, code.generator, b, e, [&](std::uint64_t index, auto, std::span<const FieldElement> w) {
                for (std::size_t i = 0; i < code.n; ++i) {
                    if (!sets[i].covered || w[i].value == 0) continue;
                    const bool zero_on_set = std::all_of(sets[i].coords.begin(), sets[i].coords.end(),
                                                         [&](std::size_t j) { return w[j].value == 0; });
                    if (zero_on_set) {
                        hits[slot] = {index, i};
                        return false;
                    }
                }
                return true;
            });
        });
        report.codewords_checked = total;
        const auto first = std::min_element(hits.begin(), hits.end(),
                                            [](const Hit& a, const Hit& b) { return a.index < b.index; });
        if (first->index != std::numeric_limits<std::uint64_t>::max()) {
            report.status = VerifyStatus::violated;
            report.witness = LocalityWitness{first->coord, sets[first->coord].coords,
                                             decode_index(first->index, F.size(), code.k),
                                             std::vector<FieldElement>(code.k, F.zero())};
        }
        return report;
    }

    // Sampling: erase each coordinate and interpolate it back from its recovery set.
    std::mt19937_64 rng(opts.seed);
    report.status = VerifyStatus::sampled;
    std::vector<InterpolationPoint> pts;
    for (std::size_t s = 0; s < opts.samples; ++s) {
        const auto msg = random_message(rng, F, code.k);
        const auto w = vec_mat(F, msg, code.generator);
        ++report.codewords_checked;
        for (std::size_t i = 0; i < code.n; ++i) {
            if (!sets[i].covered) continue;
            pts.clear();
            for (std::size_t a = 0; a < sets[i].coords.size(); ++a) pts.push_back({sets[i].local[a], w[sets[i].coords[a]]});
            const Poly f = lagrange_interpolate(F, pts);
            if (poly_eval(F, f, sets[i].self_local) != w[i]) {
                report.status = VerifyStatus::violated;
                report.witness = LocalityWitness{i, sets[i].coords, msg, {}};
                return report;
            }
        }
    }
    return report;
}

LocalDistanceReport verify_local_distance(const EvalCode& code, std::size_t structure, std::size_t rho,
                                          const OracleOptions& opts) {
    if (structure >= code.recovery.size()) raise(Errc::IndexOutOfRange, "no such recovery structure");
    const Field& F = code.F();
    const auto& rs = code.recovery[structure];
    LocalDistanceReport report;
    report.structure = structure;
    report.rho = rho;
    std::size_t overall = std::numeric_limits<std::size_t>::max();
    std::mt19937_64 rng(opts.seed);

    for (std::size_t g = 0; g < rs.groups.size(); ++g) {
        const Matrix basis = row_reduce(F, select_columns(code.generator, rs.groups[g].coordinates));
        if (basis.rows() == 0) continue;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::vector<FieldElement> best_word;
        const auto consider = [&](std::span<const FieldElement> w) {
            const std::size_t wt = weight(w);
            if (wt != 0 && wt < best) {
                best = wt;
                best_word.assign(w.begin(), w.end());
            }
        };
        const std::uint64_t total = message_count(F.size(), basis.rows());
        if (total <= opts.cap) {
            for_each_codeword(F, basis, 1, total, [&](std::uint64_t, auto, std::span<const FieldElement> w) {
                consider(w);
                return true;
            });
        } else {
            if (report.status == VerifyStatus::proved) report.status = VerifyStatus::sampled;
            for (std::size_t s = 0; s < opts.samples; ++s) consider(vec_mat(F, random_message(rng, F, basis.rows()), basis));
        }
        if (best == std::numeric_limits<std::size_t>::max()) continue;
        overall = std::min(overall, best);
        if (best < rho && !report.witness) {
            report.status = VerifyStatus::violated;
            report.witness = LocalDistanceWitness{g, best_word};
        }
    }
    report.min_local_distance = overall == std::numeric_limits<std::size_t>::max() ? 0 : overall;
    return report;
}

AvailabilityReport verify_availability(const EvalCode& code, const OracleOptions& opts) {
    if (code.recovery.size() < 2) {
        raise(Errc::NotAvailabilityCode, "code has " + std::to_string(code.recovery.size()) + " recovery structure(s)");
    }
    AvailabilityReport report;
    report.t = code.recovery.size();
    std::vector<std::vector<RecoverySet>> sets;
    for (std::size_t s = 0; s < report.t; ++s) {
        report.recovery_sizes.push_back(code.recovery[s].r);
        sets.push_back(recovery_sets(code, s));
    }
    for (std::size_t i = 0; i < code.n && report.disjoint; ++i) {
        for (std::size_t a = 0; a < report.t && report.disjoint; ++a) {
            for (std::size_t b = a + 1; b < report.t; ++b) {
                const auto& A = sets[a][i].coords;
                const auto& B = sets[b][i].coords;
                const auto it = std::find_first_of(A.begin(), A.end(), B.begin(), B.end());
                if (it != A.end()) {
                    report.disjoint = false;
                    report.overlap = OverlapWitness{i, a, b, *it};
                    break;
                }
            }
        }
    }
    if (!report.disjoint) report.status = VerifyStatus::violated;
    for (std::size_t s = 0; s < report.t; ++s) {
        report.locality.push_back(verify_locality(code, s, opts));
        const auto st = report.locality.back().status;
        if (st == VerifyStatus::violated) report.status = VerifyStatus::violated;
        else if (st == VerifyStatus::sampled && report.status == VerifyStatus::proved) report.status = VerifyStatus::sampled;
    }
    return report;
}

}  // namespace lrc
