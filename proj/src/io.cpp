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

#include "lrc/io.hpp"

#include <fstream>
#include <sstream>

#include "lrc/error.hpp"

namespace lrc::io {

namespace {

json symbols_json(std::span<const FieldElement> v) {
    json a = json::array();
    for (auto x : v) a.push_back(x.value);
    return a;
}

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) raise(Errc::ParseError, std::string("missing key \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        raise(Errc::ParseError, std::string("bad value for \"") + key + "\": " + e.what());
    }
}

std::optional<std::int64_t> get_optional(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return get<std::int64_t>(j, key);
}

FieldElement to_element(std::uint64_t v, const Field& F) {
    if (v >= F.size()) raise(Errc::ParseError, "symbol " + std::to_string(v) + " is not in GF(" + std::to_string(F.size()) + ")");
    return FieldElement{static_cast<std::uint32_t>(v)};
}

std::vector<std::string> tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',' || ch == '\n' || ch == '\r' || ch == ' ' || ch == '\t') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::uint64_t parse_uint(const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18) {
        raise(Errc::ParseError, "not a symbol: \"" + tok + "\"");
    }
    return std::stoull(tok);
}

}  // namespace

json field_to_json(const Field& F) {
    return {{"p", F.characteristic()}, {"a", F.degree()}, {"modulus", F.modulus()}};
}

FieldPtr field_from_json(const json& j) {
    return Field::create(get<std::uint32_t>(j, "p"), get<std::uint32_t>(j, "a"),
                         get<std::vector<std::uint32_t>>(j, "modulus"));
}

json code_to_json(const EvalCode& code) {
    json j;
    j["field"] = field_to_json(code.F());
    j["family"] = code.meta.family;
    j["n"] = code.n;
    j["k"] = code.k;
    j["meta"] = {{"r", code.meta.r},
                 {"rho", code.meta.rho},
                 {"ell", code.meta.ell ? json(*code.meta.ell) : json(nullptr)},
                 {"h", code.meta.h ? json(*code.meta.h) : json(nullptr)},
                 {"d_lb", code.meta.d_lb}};
    j["params"] = code.meta.params;
    json gen = json::array();
    for (std::size_t i = 0; i < code.generator.rows(); ++i) gen.push_back(symbols_json(code.generator.row(i)));
    j["generator"] = std::move(gen);
    json rec = json::array();
    for (const auto& rs : code.recovery) {
        json groups = json::array();
        for (const auto& g : rs.groups) {
            groups.push_back({{"coordinates", g.coordinates}, {"local_coords", symbols_json(g.local_coords)}});
        }
        rec.push_back({{"label", rs.label}, {"r", rs.r}, {"rho", rs.rho}, {"partial", rs.partial}, {"groups", groups}});
    }
    j["recovery"] = std::move(rec);
    return j;
}

EvalCode code_from_json(const json& j) {
    EvalCode code;
    if (!j.is_object()) raise(Errc::ParseError, "code spec must be a JSON object");
    code.field = field_from_json(get<json>(j, "field"));
    const Field& F = *code.field;
    code.n = get<std::size_t>(j, "n");
    code.k = get<std::size_t>(j, "k");
    code.meta.family = get<std::string>(j, "family");
    const json meta = get<json>(j, "meta");
    code.meta.r = get<std::size_t>(meta, "r");
    code.meta.rho = get<std::size_t>(meta, "rho");
    code.meta.ell = get_optional(meta, "ell");
    code.meta.h = get_optional(meta, "h");
    code.meta.d_lb = get<std::int64_t>(meta, "d_lb");
    code.meta.params = get<std::map<std::string, std::int64_t>>(j, "params");

    const auto rows = get<std::vector<std::vector<std::uint64_t>>>(j, "generator");
    if (rows.size() != code.k) raise(Errc::ParseError, "generator must have k rows");
    code.generator = Matrix(code.k, code.n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != code.n) raise(Errc::ParseError, "generator rows must have n entries");
        for (std::size_t c = 0; c < code.n; ++c) code.generator(i, c) = to_element(rows[i][c], F);
    }
    for (const auto& rj : get<json>(j, "recovery")) {
        RecoveryStructure rs;
        rs.label = get<std::string>(rj, "label");
        rs.r = get<std::size_t>(rj, "r");
        rs.rho = get<std::size_t>(rj, "rho");
        rs.partial = get<bool>(rj, "partial");
        for (const auto& gj : get<json>(rj, "groups")) {
            RepairGroup g;
            g.coordinates = get<std::vector<std::size_t>>(gj, "coordinates");
            for (auto v : get<std::vector<std::uint64_t>>(gj, "local_coords")) g.local_coords.push_back(to_element(v, F));
            g.local_degree_bound = rs.r == 0 ? 0 : rs.r - 1;
            rs.groups.push_back(std::move(g));
        }
        code.recovery.push_back(std::move(rs));
    }
    validate_shape(code);
    return code;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        raise(Errc::ParseError, e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::ParseError, "cannot write " + path);
    out << contents;
}

std::string write_codeword(const Codeword& cw) {
    std::string out;
    for (std::size_t i = 0; i < cw.size(); ++i) {
        out += cw.erased[i] ? "?" : std::to_string(cw.symbols[i].value);
        out += '\n';
    }
    return out;
}

Codeword read_codeword(const std::string& text, const Field& F) {
    Codeword cw;
    for (const auto& tok : tokens(text)) {
        if (tok == "?") {
            cw.symbols.push_back(F.zero());
            cw.erased.push_back(true);
        } else {
            cw.symbols.push_back(to_element(parse_uint(tok), F));
            cw.erased.push_back(false);
        }
    }
    return cw;
}

std::vector<FieldElement> read_symbols(const std::string& text, const Field& F) {
    std::vector<FieldElement> out;
    for (const auto& tok : tokens(text)) out.push_back(to_element(parse_uint(tok), F));
    return out;
}

std::string summary_line(const EvalCode& code) {
    std::ostringstream s;
    s << "n=" << code.n << " k=" << code.k;
    if (code.recovery.size() == 1) {
        s << " r=" << code.recovery[0].r;
    } else {
        for (std::size_t i = 0; i < code.recovery.size(); ++i) s << " r" << i + 1 << "=" << code.recovery[i].r;
    }
    if (code.meta.rho != 2) s << " rho=" << code.meta.rho;
    s << " d_lb=" << code.meta.d_lb;
    return s.str();
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        const auto c = f.coeffs[i].value;
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

json to_json(const LocalityReport& r) {
    json j = {{"status", std::string(status_name(r.status))},
              {"structure", r.structure},
              {"codewords_checked", r.codewords_checked}};
    if (r.witness) {
        j["witness"] = {{"coordinate", r.witness->coordinate},
                        {"recovery_set", r.witness->recovery_set},
                        {"message_a", symbols_json(r.witness->message_a)},
                        {"message_b", symbols_json(r.witness->message_b)}};
    }
    return j;
}

json to_json(const LocalDistanceReport& r) {
    json j = {{"status", std::string(status_name(r.status))},
              {"structure", r.structure},
              {"rho", r.rho},
              {"min_local_distance", r.min_local_distance}};
    if (r.witness) j["witness"] = {{"group", r.witness->group}, {"local_word", symbols_json(r.witness->local_word)}};
    return j;
}

json to_json(const AvailabilityReport& r) {
    json j = {{"status", std::string(status_name(r.status))},
              {"t", r.t},
              {"recovery_sizes", r.recovery_sizes},
              {"disjoint", r.disjoint}};
    if (r.overlap) {
        j["overlap"] = {{"coordinate", r.overlap->coordinate},
                        {"structure_a", r.overlap->structure_a},
                        {"structure_b", r.overlap->structure_b},
                        {"shared", r.overlap->shared}};
    }
    j["locality"] = json::array();
    for (const auto& l : r.locality) j["locality"].push_back(to_json(l));
    return j;
}

json to_json(const WeightDistribution& w) { return {{"counts", w.counts}}; }

}  // namespace lrc::io
