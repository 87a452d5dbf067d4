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

#include "cli.hpp"

#include <cstdio>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lrc/bounds.hpp"
#include "lrc/error.hpp"
#include "lrc/hermitian.hpp"
#include "lrc/io.hpp"
#include "lrc/oracle.hpp"
#include "lrc/tamo_barg.hpp"

namespace lrc::cli {

namespace {

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.find_first_not_of("0123456789") != std::string::npos) raise(Errc::ParseError, "not a number: " + tok);
        out.push_back(std::stoull(tok));
    }
    return out;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Data goes to the output file, or to stdout when there is none; messages
// then move to stderr so that stdout stays parseable.
struct Sink {
    std::string path;
    std::ostream& out;
    std::ostream& err;

    std::ostream& info() const { return path.empty() ? err : out; }
    void data(const std::string& text) const {
        if (path.empty()) out << text;
        else io::write_file(path, text);
    }
};

EvalCode load_code(const std::string& path) { return io::code_from_json(io::parse_json(io::read_file(path))); }

struct ConstructArgs {
    std::string family;
    std::string field;
    std::string modulus;
    std::size_t r = 0;
    std::size_t rho = 2;
    std::size_t k = 0;
    std::uint32_t mult_order = 0;
    std::string add_basis;
    std::string cosets;
    std::size_t num_cosets = 0;
    std::string form;
    std::uint32_t q0 = 0;
    std::int64_t ell = -1;
    std::string output;
};

EvalCode build_code(const ConstructArgs& a) {
    if (a.family == "hermitian-y") return construct_y_projection_code(a.q0, a.ell);
    if (a.family == "hermitian-x") return construct_x_projection_code(a.q0, a.ell);
    if (a.family == "hermitian-avail") return construct_availability_code(a.q0);
    if (a.family != "tamo-barg") raise(Errc::ConstraintViolated, "unknown family " + a.family);

    const auto pa = parse_list(a.field);
    if (pa.size() != 2) raise(Errc::ParseError, "--field expects p,a");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (!a.modulus.empty()) {
        modulus.emplace();
        for (auto c : parse_list(a.modulus)) modulus->push_back(static_cast<std::uint32_t>(c));
    }
    const FieldPtr F = Field::create(static_cast<std::uint32_t>(pa[0]), static_cast<std::uint32_t>(pa[1]), modulus);
    if (a.r == 0 || a.k == 0) raise(Errc::ConstraintViolated, "tamo-barg needs --r and --k");

    GroupKind kind = GroupKind::multiplicative;
    std::vector<FieldElement> subgroup;
    if (!a.add_basis.empty()) {
        kind = GroupKind::additive;
        std::vector<FieldElement> basis;
        for (auto v : parse_list(a.add_basis)) basis.push_back(F->element(v));
        subgroup = additive_subgroup(*F, basis);
    } else {
        const auto order = a.mult_order != 0 ? a.mult_order : static_cast<std::uint32_t>(a.r + a.rho - 1);
        subgroup = mult_subgroup(*F, order);
    }
    CosetSelection sel = CosetSelection::all();
    if (!a.cosets.empty()) {
        std::vector<FieldElement> reps;
        for (auto v : parse_list(a.cosets)) reps.push_back(F->element(v));
        sel = CosetSelection::of(std::move(reps));
    } else if (a.num_cosets != 0) {
        sel = CosetSelection::first(a.num_cosets);
    }
    std::optional<GoodPolyForm> form;
    if (a.form == "power") form = GoodPolyForm::power;
    else if (a.form == "annihilator") form = GoodPolyForm::annihilator;
    else if (!a.form.empty()) raise(Errc::ParseError, "--form is power or annihilator");
    return construct_tb(make_tamo_barg_spec(F, a.r, a.rho, kind, std::move(subgroup), sel, a.k, form));
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

std::string join_symbols(const std::vector<FieldElement>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x.value);
    return "[" + s + "]";
}

void print_locality_witness(std::ostream& out, const LocalityWitness& w) {
    out << "witness: coordinate " << w.coordinate << ", recovery set {" << join(w.recovery_set) << "}, message "
        << join_symbols(w.message_a);
    if (!w.message_b.empty()) out << " vs " << join_symbols(w.message_b);
    out << "\n";
}

struct BoundArgs {
    std::int64_t n = 0, k = 0, r = 0, rho = 2, t = 0;
    int which = 2;
    std::uint64_t q = 0;
    std::uint32_t q0 = 0;
    double delta = -1;
    std::string family;
    std::string axis = "delta";
    std::string variant;
    std::uint32_t l = 2;
    std::int64_t ell = 0;
    std::uint32_t d1 = 0, d2 = 0, r1 = 0, r2 = 0;
    bool csv = false;
    double step = 0.01;
    std::string output;
};

bounds::AgFamily ag_family(const std::string& name) {
    if (name == "rho") return bounds::AgFamily::rho_variant;
    if (auto f = bounds::parse_ag_family(name)) return *f;
    raise(Errc::ParseError, "unknown AG family " + name);
}

// Locality and rho for a crossover or AG run, filling in family defaults.
bounds::GvParams ag_params(const BoundArgs& b, bounds::AgFamily fam) {
    bounds::GvParams p;
    p.rho = static_cast<std::size_t>(b.rho);
    if (b.r > 0) p.r = static_cast<std::size_t>(b.r);
    else if (auto d = bounds::ag_default_r(b.q0, fam)) p.r = *d;
    else if (fam == bounds::AgFamily::rho_variant) p.r = b.q0 + 1 - p.rho;
    else if (fam == bounds::AgFamily::tvz) p.r = b.q0;
    else raise(Errc::ConstraintViolated, "--r is required for " + bounds::ag_family_name(fam));
    return p;
}

int run_bounds(const std::string& which, const BoundArgs& b, std::ostream& out, std::ostream& err) {
    const Sink sink{b.output, out, err};
    if (which == "singleton") {
        if (b.t > 0) {
            const auto kind = b.which == 1 ? bounds::AvailabilityBound::ceil_ratio : bounds::AvailabilityBound::floor_sum;
            out << "d <= " << bounds::availability_singleton(b.n, b.k, b.r, b.t, kind) << "\n";
        } else {
            out << "d <= " << bounds::singleton_rho(b.n, b.k, b.r, b.rho) << "\n";
        }
        return kOk;
    }
    if (which == "gv") {
        const bounds::GvLrcBound gv(b.q, static_cast<std::size_t>(b.r), static_cast<std::size_t>(b.rho));
        if (b.csv) {
            std::ostringstream s;
            s << "delta,R_gv\n";
            for (int i = 1; i * b.step < 1 - 1e-12; ++i) {
                s << fixed(i * b.step, 6) << "," << fixed(gv.evaluate(i * b.step).value, 9) << "\n";
            }
            sink.data(s.str());
            return kOk;
        }
        const auto res = bounds::gv_lrc_rate(b.q, static_cast<std::size_t>(b.r), static_cast<std::size_t>(b.rho), b.delta);
        out << "R=" << fixed(res.value, 9) << " s=" << fixed(*res.argmin_s, 9) << "\n";
        return kOk;
    }
    if (which == "ag") {
        const auto fam = ag_family(b.family);
        const std::optional<std::size_t> r = b.r > 0 ? std::optional(static_cast<std::size_t>(b.r)) : std::nullopt;
        const std::optional<std::size_t> rho =
            fam == bounds::AgFamily::rho_variant ? std::optional(static_cast<std::size_t>(b.rho)) : std::nullopt;
        std::optional<std::size_t> rr = r;
        if (!rr && fam == bounds::AgFamily::rho_variant) rr = b.q0 + 1 - static_cast<std::size_t>(b.rho);
        if (b.csv) {
            std::ostringstream s;
            s << "delta,R_ag\n";
            for (int i = 1; i * b.step < 1 - 1e-12; ++i) {
                s << fixed(i * b.step, 6) << "," << fixed(bounds::ag_rate(b.q0, fam, i * b.step, rr, rho).value, 9) << "\n";
            }
            sink.data(s.str());
            return kOk;
        }
        out << "R=" << fixed(bounds::ag_rate(b.q0, fam, b.delta, rr, rho).value, 9) << "\n";
        return kOk;
    }
    if (which == "crossover") {
        const auto fam = ag_family(b.family);
        const auto params = ag_params(b, fam);
        if (b.csv) {
            std::ostringstream s;
            bounds::write_crossover_csv(s, b.q0, fam, params, b.step);
            sink.data(s.str());
            return kOk;
        }
        bounds::Axis axis = bounds::Axis::delta;
        if (b.axis == "rate") axis = bounds::Axis::rate;
        else if (b.axis != "delta") raise(Errc::ParseError, "--axis is delta or rate");
        const auto ci = bounds::crossover_interval(b.q0, fam, params, axis);
        out << "[" << fixed(ci.lo, 3) << ", " << fixed(ci.hi, 3) << "]\n";
        return kOk;
    }
    if (which == "gs-params") {
        const auto v = bounds::parse_gs_variant(b.variant);
        if (!v) raise(Errc::ParseError, "unknown variant " + b.variant);
        const auto p = bounds::gs_family_params(b.q0, b.l, b.ell, *v, b.r > 0 ? std::optional(b.r) : std::nullopt);
        out << "n=" << p.n << " k>=" << p.k_lb << " d>=" << p.d_lb << " r=" << p.r << " rho=" << p.rho
            << " ell in [" << p.ell_min << ", " << p.ell_max << "]\n";
        return kOk;
    }
    if (which == "fiber-params") {
        const auto p = bounds::fiber_product_params(b.q0, b.d1, b.d2, b.ell);
        out << "n=" << p.n << " k>=" << p.k_lb << " d>=" << p.d_lb << " r1=" << p.r1 << " r2=" << p.r2 << "\n";
        out << "g(Y1)=" << bounds::to_string(p.genus.g_y1) << " g(Y2)=" << bounds::to_string(p.genus.g_y2)
            << " g_Y<=" << bounds::to_string(p.genus.g_y_tilde) << "\n";
        if (p.bezout_d_lb) out << "bezout d>=" << *p.bezout_d_lb << "\n";
        if (p.tabulated_genus) out << "closed-form genus " << *p.tabulated_genus << " (differs from g_Y bound)\n";
        return kOk;
    }
    if (which == "availability-asym") {
        const auto rel = bounds::availability_asymptotic(b.q0, b.r1, b.r2);
        out << "delta + " << bounds::to_string(rel.A) << " R >= " << bounds::to_string(rel.B) << "\n";
        return kOk;
    }
    err << "unknown bounds subcommand\n";
    return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally recoverable codes: construction, repair, verification and bounds", "lrc"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a code and write its JSON spec");
    construct->add_option("--family", ca.family, "tamo-barg | hermitian-y | hermitian-x | hermitian-avail")->required();
    construct->add_option("--field", ca.field, "p,a");
    construct->add_option("--modulus", ca.modulus, "modulus coefficients, constant term first");
    construct->add_option("--r", ca.r);
    construct->add_option("--rho", ca.rho);
    construct->add_option("--k", ca.k);
    construct->add_option("--mult-subgroup-order", ca.mult_order);
    construct->add_option("--add-subgroup-basis", ca.add_basis, "comma-separated packed elements");
    construct->add_option("--cosets", ca.cosets, "coset representatives");
    construct->add_option("--num-cosets", ca.num_cosets);
    construct->add_option("--form", ca.form, "power | annihilator");
    construct->add_option("--q0", ca.q0);
    construct->add_option("--ell", ca.ell);
    construct->add_option("-o,--output", ca.output);

    std::string code_path, input_path, output_path, message_path, values, indices;
    std::size_t random_count = 0;
    std::uint64_t seed = 0;
    auto* encode = app.add_subcommand("encode", "Encode a message");
    encode->add_option("--code", code_path)->required();
    encode->add_option("--message", message_path, "message file");
    encode->add_option("--values", values, "comma-separated message symbols");
    encode->add_option("-o,--output", output_path);

    auto* erase_cmd = app.add_subcommand("erase", "Mark symbols of a codeword as erased");
    erase_cmd->add_option("--code", code_path)->required();
    erase_cmd->add_option("--input", input_path)->required();
    erase_cmd->add_option("--indices", indices);
    erase_cmd->add_option("--random", random_count);
    erase_cmd->add_option("--seed", seed);
    erase_cmd->add_option("-o,--output", output_path);

    auto* repair = app.add_subcommand("repair", "Repair erasures group by group");
    repair->add_option("--code", code_path)->required();
    repair->add_option("--input", input_path)->required();
    repair->add_option("-o,--output", output_path);

    OracleOptions oo;
    bool as_json = false;
    auto* distance = app.add_subcommand("distance", "Exhaustive minimum distance");
    distance->add_option("--code", code_path)->required();
    distance->add_option("--cap", oo.cap);
    distance->add_option("--threads", oo.threads);

    auto* verify = app.add_subcommand("verify", "Check locality, local distance and availability");
    verify->add_option("--code", code_path)->required();
    verify->add_option("--cap", oo.cap);
    verify->add_option("--threads", oo.threads);
    verify->add_option("--seed", oo.seed);
    verify->add_option("--samples", oo.samples);
    verify->add_flag("--json", as_json);

    BoundArgs ba;
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate bounds and parameter formulas");
    bounds_cmd->require_subcommand(1);
    for (const char* name : {"singleton", "gv", "ag", "crossover", "gs-params", "fiber-params", "availability-asym"}) {
        auto* s = bounds_cmd->add_subcommand(name);
        s->add_option("--n", ba.n);
        s->add_option("--k", ba.k);
        s->add_option("--r", ba.r);
        s->add_option("--rho", ba.rho);
        s->add_option("--t", ba.t);
        s->add_option("--which", ba.which, "1 or 2, for the availability bounds");
        s->add_option("--q", ba.q);
        s->add_option("--q0", ba.q0);
        s->add_option("--delta", ba.delta);
        s->add_option("--family", ba.family);
        s->add_option("--axis", ba.axis);
        s->add_option("--variant", ba.variant);
        s->add_option("--l", ba.l);
        s->add_option("--ell", ba.ell);
        s->add_option("--d1", ba.d1);
        s->add_option("--d2", ba.d2);
        s->add_option("--r1", ba.r1);
        s->add_option("--r2", ba.r2);
        s->add_flag("--csv", ba.csv);
        s->add_option("--step", ba.step);
        s->add_option("-o,--output", ba.output);
    }

    std::vector<const char*> argv{"lrc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (construct->parsed()) {
            const EvalCode code = build_code(ca);
            const Sink sink{ca.output, out, err};
            sink.data(io::dump(io::code_to_json(code)));
            sink.info() << io::summary_line(code) << "\n";
            return kOk;
        }
        if (encode->parsed()) {
            const EvalCode code = load_code(code_path);
            std::vector<FieldElement> msg;
            if (!message_path.empty()) msg = io::read_symbols(io::read_file(message_path), code.F());
            else msg = io::read_symbols(values, code.F());
            const Sink sink{output_path, out, err};
            sink.data(io::write_codeword(lrc::encode(code, msg)));
            return kOk;
        }
        if (erase_cmd->parsed()) {
            const EvalCode code = load_code(code_path);
            Codeword cw = io::read_codeword(io::read_file(input_path), code.F());
            std::vector<std::size_t> which;
            for (auto v : parse_list(indices)) which.push_back(static_cast<std::size_t>(v));
            if (random_count > 0) {
                if (random_count > cw.size()) raise(Errc::IndexOutOfRange, "more erasures than symbols");
                // Partial Fisher-Yates; rng() % m keeps the choice portable across standard libraries.
                std::vector<std::size_t> perm(cw.size());
                for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
                std::mt19937_64 rng(seed);
                for (std::size_t i = 0; i < random_count; ++i) {
                    const std::size_t j = i + static_cast<std::size_t>(rng() % (perm.size() - i));
                    std::swap(perm[i], perm[j]);
                    which.push_back(perm[i]);
                }
            }
            const Sink sink{output_path, out, err};
            sink.data(io::write_codeword(lrc::erase(std::move(cw), which)));
            return kOk;
        }
        if (repair->parsed()) {
            const EvalCode code = load_code(code_path);
            Codeword cw = io::read_codeword(io::read_file(input_path), code.F());
            if (cw.size() != code.n) raise(Errc::LengthMismatch, "codeword has " + std::to_string(cw.size()) + " symbols");
            const RepairOutcome res = repair_all(code, std::move(cw));
            const Sink sink{output_path, out, err};
            sink.data(io::write_codeword(res.codeword));
            for (const auto& step : res.steps) {
                const auto& rs = code.recovery[step.structure];
                for (auto i : step.filled) {
                    sink.info() << "repaired " << i << " = " << res.codeword.symbols[i].value << " via " << rs.label
                                << " group " << step.group << ", f(x) = " << io::format_poly(step.interpolant) << "\n";
                }
            }
            if (!res.complete()) {
                err << "irreparable: " << join(res.still_erased) << "\n";
                return kIrreparable;
            }
            return kOk;
        }
        if (distance->parsed()) {
            const EvalCode code = load_code(code_path);
            const std::size_t d = min_distance_exhaustive(code, oo);
            out << "d=" << d << " (proved)";
            if (static_cast<std::int64_t>(d) < code.meta.d_lb) {
                out << " below d_lb=" << code.meta.d_lb << "\n";
                return kVerificationFailed;
            }
            out << "\n";
            return kOk;
        }
        if (verify->parsed()) {
            const EvalCode code = load_code(code_path);
            bool ok = true;
            io::json report = io::json::object();
            if (code.recovery.size() >= 2) {
                const auto av = verify_availability(code, oo);
                report["availability"] = io::to_json(av);
                ok = av.status != VerifyStatus::violated;
                std::string statuses;
                bool uniform = true;
                for (const auto& l : av.locality) {
                    uniform = uniform && l.status == av.locality.front().status;
                    statuses += (statuses.empty() ? "" : ", ") + std::string(status_name(l.status));
                }
                if (!as_json) {
                    out << "t=" << av.t << " disjoint: " << (av.disjoint ? "yes" : "no") << "; locality: ";
                    if (uniform) out << status_name(av.locality.front().status) << " ×" << av.t << "\n";
                    else out << statuses << "\n";
                    if (av.overlap) {
                        out << "overlap: coordinate " << av.overlap->coordinate << " shares " << av.overlap->shared
                            << " between structures " << av.overlap->structure_a << " and " << av.overlap->structure_b
                            << "\n";
                    }
                    for (const auto& l : av.locality) {
                        if (l.witness) print_locality_witness(out, *l.witness);
                    }
                }
            } else {
                const auto loc = verify_locality(code, 0, oo);
                report["locality"] = io::to_json(loc);
                ok = loc.status != VerifyStatus::violated;
                if (!as_json) {
                    out << "locality: " << status_name(loc.status) << "\n";
                    if (loc.witness) print_locality_witness(out, *loc.witness);
                }
            }
            for (std::size_t s = 0; s < code.recovery.size(); ++s) {
                const std::size_t rho = code.recovery[s].rho;
                if (rho <= 2) continue;
                const auto ld = verify_local_distance(code, s, rho, oo);
                report["local_distance"].push_back(io::to_json(ld));
                ok = ok && ld.status != VerifyStatus::violated;
                if (!as_json) {
                    out << "local distance >= " << rho << ": " << status_name(ld.status) << " (min "
                        << ld.min_local_distance << ")\n";
                    if (ld.witness) {
                        out << "witness: group " << ld.witness->group << ", local word "
                            << join_symbols(ld.witness->local_word) << "\n";
                    }
                }
            }
            if (as_json) out << io::dump(report);
            return ok ? kOk : kVerificationFailed;
        }
        for (auto* sub : bounds_cmd->get_subcommands()) {
            if (sub->parsed()) return run_bounds(sub->get_name(), ba, out, err);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

}  // namespace lrc::cli
