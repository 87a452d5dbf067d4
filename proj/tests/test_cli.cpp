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

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "lrc/hermitian.hpp"
#include "lrc/io.hpp"
#include "lrc/tamo_barg.hpp"

using namespace lrc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run lrc_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("lrc-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const std::vector<std::string> kExampleOne{"construct", "--family", "tamo-barg", "--field", "13,1", "--r", "2",
                                           "--rho", "2", "--mult-subgroup-order", "3", "--cosets", "1,2,4", "--k", "4"};

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> more) {
    base.insert(base.end(), more);
    return base;
}

}  // namespace

TEST_CASE("construct writes the library's JSON") {
    TempDir dir;
    const Run r = lrc_cli(with(kExampleOne, {"-o", dir / "tb.json"}));
    CHECK(r.code == 0);
    CHECK(r.out == "n=9 k=4 r=2 d_lb=5\n");
    const auto F = Field::create(13, 1);
    const EvalCode lib = construct_tb(make_tamo_barg_spec(F, 2, 2, GroupKind::multiplicative, mult_subgroup(*F, 3),
                                                          CosetSelection::of({{1}, {2}, {4}}), 4));
    CHECK(io::read_file(dir / "tb.json") == io::dump(io::code_to_json(lib)));

    const Run to_stdout = lrc_cli(kExampleOne);
    CHECK(to_stdout.out == io::dump(io::code_to_json(lib)));
    CHECK(to_stdout.err == "n=9 k=4 r=2 d_lb=5\n");

    CHECK(lrc_cli({"construct", "--family", "hermitian-y", "--q0", "3", "--ell", "2", "-o", dir / "h.json"}).out ==
          "n=27 k=6 r=2 d_lb=17\n");
    CHECK(lrc_cli({"construct", "--family", "hermitian-avail", "--q0", "3", "-o", dir / "a.json"}).out ==
          "n=24 k=6 r1=2 r2=3 d_lb=12\n");
}

TEST_CASE("usage and construction errors exit 2") {
    CHECK(lrc_cli({}).code == 2);
    CHECK(lrc_cli({"construct"}).code == 2);
    CHECK(lrc_cli({"construct", "--family", "hermitian-y", "--q0", "3", "--ell", "8"}).code == 2);
    const Run bad = lrc_cli({"construct", "--family", "tamo-barg", "--field", "13,1", "--r", "2", "--k", "3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("DivisibilityViolation") != std::string::npos);
    CHECK(lrc_cli({"frobnicate"}).code == 2);
    CHECK(lrc_cli({"--help"}).code == 0);
}

TEST_CASE("distance and verify") {
    TempDir dir;
    lrc_cli(with(kExampleOne, {"-o", dir / "tb.json"}));
    CHECK(lrc_cli({"distance", "--code", dir / "tb.json"}).out == "d=5 (proved)\n");
    CHECK(lrc_cli({"verify", "--code", dir / "tb.json"}).out == "locality: proved\n");

    lrc_cli({"construct", "--family", "hermitian-avail", "--q0", "3", "-o", dir / "a.json"});
    const Run v = lrc_cli({"verify", "--code", dir / "a.json"});
    CHECK(v.code == 0);
    CHECK(v.out == "t=2 disjoint: yes; locality: proved ×2\n");

    const Run js = lrc_cli({"verify", "--code", dir / "a.json", "--json"});
    const auto j = io::parse_json(js.out);
    CHECK(j["availability"]["status"] == "proved");
    CHECK(j["availability"]["recovery_sizes"] == io::json::array({2, 3}));

    auto spec = io::parse_json(io::read_file(dir / "tb.json"));
    spec["generator"][3][7] = (spec["generator"][3][7].get<int>() + 1) % 13;
    io::write_file(dir / "bad.json", io::dump(spec));
    const Run m = lrc_cli({"verify", "--code", dir / "bad.json"});
    CHECK(m.code == 4);
    CHECK(m.out.find("locality: violated") != std::string::npos);
    CHECK(m.out.find("witness: coordinate") != std::string::npos);

    lrc_cli({"construct", "--family", "hermitian-y", "--q0", "3", "--ell", "2", "-o", dir / "h.json"});
    CHECK(lrc_cli({"distance", "--code", dir / "h.json", "--cap", "1000"}).code == 2);
}

TEST_CASE("encode, erase and repair") {
    TempDir dir;
    lrc_cli({"construct", "--family", "hermitian-y", "--q0", "3", "--ell", "2", "-o", dir / "h.json"});
    const EvalCode code = construct_y_projection_code(3, 2);
    const Field& F = code.F();
    std::string message;
    for (int e = 0; e < 6; ++e) message += std::to_string(F.exp(e).value) + "\n";
    io::write_file(dir / "m.txt", message);
    CHECK(lrc_cli({"encode", "--code", dir / "h.json", "--message", dir / "m.txt", "-o", dir / "cw.txt"}).code == 0);
    const std::string cw = io::read_file(dir / "cw.txt");
    CHECK(cw.substr(0, 2) == "1\n");
    std::vector<FieldElement> msg;
    for (int e = 0; e < 6; ++e) msg.push_back(F.exp(e));
    CHECK(cw == io::write_codeword(encode(code, msg)));

    const HermitianData H = hermitian_points(3);
    std::size_t lost = 0;
    while (!(H.points[lost].x == F.exp(1) && H.points[lost].y == F.one())) ++lost;
    CHECK(lrc_cli({"erase", "--code", dir / "h.json", "--input", dir / "cw.txt", "--indices", std::to_string(lost), "-o",
                   dir / "er.txt"})
              .code == 0);
    const Run rep = lrc_cli({"repair", "--code", dir / "h.json", "--input", dir / "er.txt", "-o", dir / "rep.txt"});
    CHECK(rep.code == 0);
    CHECK(rep.out == "repaired " + std::to_string(lost) + " = 0 via y-fibers group 1, f(x) = 8 + 3*x\n");
    CHECK(io::read_file(dir / "rep.txt") == cw);

    CHECK(lrc_cli({"erase", "--code", dir / "h.json", "--input", dir / "cw.txt", "--indices", "3,4,5", "-o",
                   dir / "er3.txt"})
              .code == 0);
    const Run stuck = lrc_cli({"repair", "--code", dir / "h.json", "--input", dir / "er3.txt", "-o", dir / "x.txt"});
    CHECK(stuck.code == 3);
    CHECK(stuck.err == "irreparable: 3 4 5\n");

    const Run r1 = lrc_cli({"erase", "--code", dir / "h.json", "--input", dir / "cw.txt", "--random", "4", "--seed", "9"});
    const Run r2 = lrc_cli({"erase", "--code", dir / "h.json", "--input", dir / "cw.txt", "--random", "4", "--seed", "9"});
    CHECK(r1.out == r2.out);
    CHECK(std::count(r1.out.begin(), r1.out.end(), '?') == 4);

    CHECK(lrc_cli({"encode", "--code", dir / "h.json", "--values", "1,2"}).code == 2);
}

TEST_CASE("bounds subcommands") {
    CHECK(lrc_cli({"bounds", "crossover", "--q0", "23", "--family", "sqrtq"}).out == "[0.413, 0.712]\n");
    CHECK(lrc_cli({"bounds", "singleton", "--n", "12", "--k", "4", "--r", "2", "--rho", "3"}).out == "d <= 7\n");
    CHECK(lrc_cli({"bounds", "singleton", "--n", "24", "--k", "6", "--r", "2", "--t", "2"}).out == "d <= 16\n");
    const Run fp = lrc_cli({"bounds", "fiber-params", "--q0", "27", "--d1", "4", "--d2", "3"});
    CHECK(fp.code == 0);
    CHECK(fp.out.rfind("n=19656 ", 0) == 0);
    CHECK(lrc_cli({"bounds", "gs-params", "--q0", "3", "--l", "3", "--ell", "12", "--variant", "prop43"}).out ==
          "n=72 k>=2 d>=18 r=2 rho=2 ell in [12, 24]\n");
    CHECK(lrc_cli({"bounds", "availability-asym", "--q0", "3", "--r1", "1", "--r2", "2"}).out == "delta + 3 R >= 3/8\n");
    CHECK(lrc_cli({"bounds", "crossover", "--q0", "4", "--family", "sqrtq"}).code == 2);
    CHECK(lrc_cli({"bounds", "ag", "--q0", "4", "--family", "small_r", "--r", "2", "--delta", "0.2"}).code == 2);
    const Run csv = lrc_cli({"bounds", "gv", "--q", "16", "--r", "3", "--csv", "--step", "0.25"});
    CHECK(csv.out.rfind("delta,R_gv\n0.250000,", 0) == 0);
    const Run gv = lrc_cli({"bounds", "gv", "--q", "529", "--r", "23", "--delta", "0.5"});
    CHECK(gv.out.rfind("R=0.389618", 0) == 0);
}
