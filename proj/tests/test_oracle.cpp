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

#include "generators.hpp"
#include "oracle.hpp"

using namespace nfiso;
using namespace nfiso::testing;

// The brute-force oracle is itself checked on fields whose automorphisms
// are known in closed form.

TEST_CASE("oracle on known fields") {
    CHECK(oracle_isomorphisms(IntPoly{-2, 0, 1}, IntPoly{-8, 0, 1}).size() == 2);
    CHECK(oracle_isomorphisms(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}).empty());
    CHECK(oracle_isomorphisms(IntPoly{-2, 0, 0, 1}, IntPoly{-2, 0, 0, 1}).size() == 1);
    CHECK(oracle_isomorphisms(IntPoly{1, 0, 0, 0, 1}, IntPoly{1, 0, 0, 0, 1}).size() == 4);
    // Cyclotomic field of 7th roots: Galois of degree 6.
    CHECK(oracle_isomorphisms(IntPoly{1, 1, 1, 1, 1, 1, 1}, IntPoly{1, 1, 1, 1, 1, 1, 1}).size() == 6);
    // Cyclic cubic x^3 - 3x + 1.
    const auto cyc = oracle_isomorphisms(IntPoly{1, -3, 0, 1}, IntPoly{1, -3, 0, 1});
    CHECK(cyc.size() == 3);
    CHECK(oracle_keys(IntPoly{-2, 0, 1}, IntPoly{-1, 0, 2}) ==
          std::set<std::string>{key(QPoly{0, mpq_class(1, 2)}), key(QPoly{0, mpq_class(-1, 2)})});
}

TEST_CASE("oracle finds the planted isomorphism") {
    Rng rng(61);
    for (int t = 0; t < 30; ++t) {
        const auto pr = random_iso_pair(rng, static_cast<int>(uniform(rng, 2, 6)), 9, 3);
        const auto ks = oracle_keys(pr.f, pr.g);
        CAPTURE(describe(pr.f, pr.g));
        CHECK(ks.count(key(rem(pr.r, RatPoly(pr.f)))) == 1);
    }
}
