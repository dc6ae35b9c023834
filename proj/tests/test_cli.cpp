/* Copyright (C) 2026 The nfiso Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>

#include "generators.hpp"
#include "nfiso/cli.hpp"
#include "nfiso/parse.hpp"

using namespace nfiso;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(NFISO_FIXTURES_DIR) + "/" + name; }

std::size_t error_position(const std::string& text) {
    try {
        parse_poly(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("parsing expressions") {
    CHECK(parse_poly("x^2-2") == IntPoly{-2, 0, 1});
    CHECK(parse_poly("[-2,0,1]") == IntPoly{-2, 0, 1});
    CHECK(parse_poly(" [ -2 , 0 , +1 ] ") == IntPoly{-2, 0, 1});
    CHECK(parse_poly("3*x^2 - x + 7") == IntPoly{7, -1, 3});
    CHECK(parse_poly("3x^2-x+7") == IntPoly{7, -1, 3});
    CHECK(parse_poly("-x") == IntPoly{0, -1});
    CHECK(parse_poly("x + x") == IntPoly{0, 2});
    CHECK(parse_poly("y^3 - 2") == IntPoly{-2, 0, 0, 1});
    CHECK(parse_poly("5") == IntPoly{5});
    CHECK(parse_poly("2 x") == IntPoly{0, 2});
    CHECK(parse_poly("x^2 - 2\n") == IntPoly{-2, 0, 1});

    const IntPoly big = parse_poly("2174026154062500000*x^25 - 12927273797812500000*x^24 + 1");
    CHECK(big.degree() == 25);
    CHECK(big.leading() == Integer("2174026154062500000"));
    CHECK(big[24] == Integer("-12927273797812500000"));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_poly("x^2 - 1/2"), ParseError);
    CHECK(error_position("x^2 - 1/2") == 7);
    CHECK(error_position("x^2 + 1.5") == 7);
    CHECK(error_position("[1, 2.5]") == 5);
    CHECK(error_position("x^2 +") == 5);
    CHECK(error_position("x^2 ! 2") == 4);
    CHECK(error_position("x + y") == 4);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x - x"), ParseError);
    CHECK_THROWS_AS(parse_poly("[0, 0]"), ParseError);
    CHECK_THROWS_AS(parse_poly("[]"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
}

TEST_CASE("print and parse round trip") {
    testing::Rng rng(71);
    for (int t = 0; t < 300; ++t) {
        const int deg = static_cast<int>(testing::uniform(rng, 0, 12));
        IntPoly f = testing::random_poly(rng, deg, 5, 3);
        if (t % 3 == 0) f *= Integer("-123456789012345678901234567890");
        CHECK(parse_poly(to_string(f)) == f);
        CHECK(parse_poly(to_string(f, 't')) == f);
    }
}

TEST_CASE("JSON output") {
    const Run r = run({"iso", "x^2-2", "x^2-8", "--json"});
    CHECK(r.code == cli::kDecided);
    const json j = json::parse(r.out);
    CHECK(j["isomorphic"] == true);
    CHECK(j["count"] == 2);
    CHECK(j["status"] == "isomorphic");
    std::set<std::vector<std::string>> coeffs;
    for (const auto& iso : j["isomorphisms"]) {
        CHECK(iso["denom"] == "1");
        coeffs.insert(iso["coeffs_num"].get<std::vector<std::string>>());
    }
    CHECK(coeffs == std::set<std::vector<std::string>>{{"0", "2"}, {"0", "-2"}});
    CHECK(j["primes_used"].is_array());
    CHECK(j["preprocessing_dim"].is_number_integer());

    const json n = json::parse(run({"iso", "x^2-2", "x^2-3", "--json"}).out);
    CHECK(n["isomorphic"] == false);
    CHECK(n["count"] == 0);
    CHECK(n["isomorphisms"].empty());

    const json h = json::parse(run({"iso", "x^2-2", "2*x^2-1", "--json"}).out);
    REQUIRE(h["count"] == 2);
    CHECK(h["isomorphisms"][0]["denom"] == "2");
}

TEST_CASE("human output and exit codes") {
    const Run none = run({"iso", "x^2-2", "x^2-3"});
    CHECK(none.code == cli::kDecided);
    CHECK(none.out.find("no isomorphism") != std::string::npos);

    const Run two = run({"iso", "x^2-2", "[-8,0,1]"});
    CHECK(two.out.find("2 isomorphisms") != std::string::npos);
    CHECK(two.out.find("h(x) = 2*x") != std::string::npos);

    const Run base = run({"iso", "x^2-2", "x^2-8", "--baseline", "--json"});
    CHECK(json::parse(base.out)["count"] == 2);

    CHECK(run({"iso", "x^2-2", "x^3-2"}).out.find("no isomorphism") != std::string::npos);
    CHECK(run({"iso", "x^2-2"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"iso", "x^2-2", "x^2-1/2"}).code == cli::kUsage);
    CHECK(run({"iso", "missing/f.txt", "x^2-2"}).code == cli::kUsage);
    CHECK(run({"iso", "missing/f.txt", "x^2-2"}).err.find("not found") != std::string::npos);
    CHECK(run({"iso", "x^2-2", "x^2-8", "--start-prime", "abc"}).code == cli::kUsage);
    CHECK(run({"iso", "x^2-2", "x^2-8", "--baseline", "--pre-only"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kDecided);
    CHECK(run({"iso", "x^2-2", "x^2-8", "--start-prime", "100"}).code == cli::kDecided);

    const Run verbose = run({"iso", "x^3-2", "x^3-16", "--verbose"});
    CHECK(verbose.out.find("pre-processing dimension: 1") != std::string::npos);
    CHECK_FALSE(verbose.err.empty());
}

TEST_CASE("fixture files") {
    const Run r = run({"iso", fixture("f1.txt"), fixture("f2.txt"), "--pre-only", "--json"});
    CHECK(r.code == cli::kDecided);
    const json j = json::parse(r.out);
    CHECK(j["isomorphic"] == true);
    CHECK(j["count"] == 1);
    CHECK(j["preprocessing_dim"] == 1);

    const Run u = run({"iso", fixture("f14.txt"), fixture("f14.txt"), "--pre-only", "--json"});
    const json k = json::parse(u.out);
    CHECK(k["status"] == "undecided");
    CHECK(k["isomorphic"].is_null());
    CHECK(k["preprocessing_dim"] == 2);
}
