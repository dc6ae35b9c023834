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

#include <algorithm>

#include "generators.hpp"
#include "nfiso/modpoly.hpp"

using namespace nfiso;
using nfiso::testing::Rng;

namespace {

bool good_prime(const IntPoly& f, long p) { return f.leading() % p != 0 && discriminant(f) % p != 0; }

// All roots in [0, m) by direct search.
std::vector<Integer> brute_roots(const IntPoly& f, long m) {
    std::vector<Integer> out;
    for (long r = 0; r < m; ++r) {
        Integer v = evaluate(f, Integer(r)) % m;
        if (v == 0) out.emplace_back(r);
    }
    return out;
}

ModPoly product(const DistinctDegreeFactorization& dd) {
    ModPoly acc = ModPoly::constant(dd.modulus, Integer(1));
    for (const auto& fac : dd.factors) acc *= fac.factor;
    return acc;
}

}  // namespace

TEST_CASE("modular ring operations") {
    const Modulus m7(7);
    CHECK(ModPoly(m7, {-3, 1}) * ModPoly(m7, {-4, 1}) == ModPoly(m7, {5, 0, 1}));
    CHECK(ModPoly(m7, {5, 0, 1}) == ModPoly(m7, {-2, 0, 1}));
    const Modulus m5(5);
    CHECK(powmod(ModPoly::x(m5), Integer(5), ModPoly(m5, {-2, 0, 0, 1})) == ModPoly(m5, {0, 0, 2}));
    CHECK(eval(ModPoly(m7, {-2, 0, 1}), Integer(3)) == 0);
    CHECK_THROWS_AS(ModPoly(m7, {1, 1}) + ModPoly(m5, {1, 1}), Error);
    CHECK_THROWS_AS(gcd(ModPoly(Modulus(7, 2), {1, 1}), ModPoly(Modulus(7, 2), {2, 1})), Error);
    CHECK(gcd(ModPoly(m7, {5, 0, 1}), ModPoly(m7, {-3, 1})) == ModPoly(m7, {-3, 1}));
    const auto eg = ext_gcd(ModPoly(m7, {-3, 1}), ModPoly(m7, {-4, 1}));
    CHECK(eg.g == ModPoly(m7, {1}));
    CHECK(eg.s * ModPoly(m7, {-3, 1}) + eg.t * ModPoly(m7, {-4, 1}) == eg.g);
    CHECK(Modulus(7, 2).value() == 49);
    CHECK(Modulus(7).symmetric(Integer(6)) == -1);
    CHECK(Modulus(7).inverse(Integer(3)) == 5);
    CHECK_THROWS_AS(Modulus(7, 2).inverse(Integer(14)), Error);
}

TEST_CASE("distinct-degree factorization") {
    const auto a = ddf(IntPoly{1, 0, 0, 0, 1}, Integer(3));
    REQUIRE(a.size() == 1);
    CHECK(a.factors[0].degree == 2);
    CHECK(a.factors[0].factor == ModPoly(Modulus(3), {1, 0, 0, 0, 1}));

    const auto b = ddf(IntPoly{-2, 0, 0, 1}, Integer(5));
    REQUIRE(b.size() == 2);
    CHECK(b.factors[0].degree == 1);
    CHECK(b.factors[0].factor == ModPoly(Modulus(5), {-3, 1}));
    CHECK(b.factors[1].degree == 2);
    CHECK(b.factors[1].factor == ModPoly(Modulus(5), {4, 3, 1}));
    CHECK(b.pattern() == std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 2}});
    CHECK(b.linear_degree() == 1);

    const auto c = ddf(IntPoly{-2, 0, 1}, Integer(7));
    REQUIRE(c.size() == 1);
    CHECK(c.factors[0].factor == ModPoly(Modulus(7), {5, 0, 1}));

    CHECK_THROWS_AS(ddf(IntPoly{-2, 0, 1}, Integer(2)), BadPrime);
    CHECK_THROWS_AS(ddf(IntPoly{-2, 0, 3}, Integer(3)), BadPrime);

    // Non-monic input is normalized.
    const auto d = ddf(IntPoly{-1, 0, 2}, Integer(7));
    CHECK(product(d) == ModPoly(Modulus(7), IntPoly{-1, 0, 2}).monic());
}

TEST_CASE("Hensel lifting") {
    const IntPoly f{-2, 0, 1};
    const auto lifted = hensel_lift_factors(f, ddf(f, Integer(7)), 2);
    CHECK(lifted.modulus.value() == 49);
    CHECK(product(lifted) == ModPoly(Modulus(7, 2), f));
    CHECK(lift_roots(lifted.factors[0].factor, 2) == std::vector<Integer>{10, 39});

    const auto same = hensel_lift_factors(f, ddf(f, Integer(7)), 1);
    CHECK(same.factors[0].factor == ddf(f, Integer(7)).factors[0].factor);

    // The lift of the root 3 of x^3 - 2 mod 25 is found by direct search.
    const IntPoly cube{-2, 0, 0, 1};
    const auto lc = hensel_lift_factors(cube, ddf(cube, Integer(5)), 2);
    const auto want = brute_roots(cube, 25);
    REQUIRE(want.size() == 1);
    CHECK(lift_roots(lc.factors[0].factor, 2) == want);
    CHECK(lift_root(cube, Integer(3), Integer(5), 1, 2) == want[0]);
}

TEST_CASE("roots modulo p and p^a") {
    CHECK(lift_roots(ModPoly(Modulus(11, 3), {-1, 1}), 3) == std::vector<Integer>{1});
    CHECK_THROWS_AS(lift_roots(ModPoly(Modulus(11), {-1, 1}), 3), Error);
    CHECK(lift_roots(ModPoly(Modulus(7), {-1, 0, 0, 1}), 1) == std::vector<Integer>{1, 2, 4});
    CHECK(roots_mod_p(ModPoly(Modulus(2), {0, 1, 1})) == std::vector<Integer>{0, 1});
    CHECK(roots_mod_p(ModPoly(Modulus(5), {2, 0, 1})).empty());
    CHECK_THROWS_AS(lift_roots(ModPoly(Modulus(7, 2), {1, 2, 1}), 2), Error);

    Rng rng(21);
    const long primes[] = {3, 5, 7, 11, 13, 101, 1009};
    for (int t = 0; t < 60; ++t) {
        const long p = primes[t % 7];
        const IntPoly f = testing::random_poly(rng, static_cast<int>(testing::uniform(rng, 1, 6)), 50, 1);
        const ModPoly fp(Modulus(p), f);
        const auto got = roots_mod_p(fp);
        CHECK(got == brute_roots(f, p));
    }
    for (int t = 0; t < 40; ++t) {
        // Product of distinct linear factors lifted to p^a.
        const long p = primes[t % 5];
        std::vector<long> rs;
        IntPoly f{1};
        for (long r = 0; r < p && rs.size() < 4; ++r)
            if (testing::uniform(rng, 0, 1)) {
                rs.push_back(r);
                f *= IntPoly{-r, 1};
            }
        if (rs.empty()) continue;
        const unsigned a = static_cast<unsigned>(testing::uniform(rng, 1, 6));
        const Modulus m(p, a);
        const auto roots = lift_roots(ModPoly(m, f), a);
        CHECK(roots.size() == rs.size());
        for (const auto& r : roots) CHECK(m.reduce(evaluate(f, r)) == 0);
    }
}

TEST_CASE("inverse of f'") {
    const Modulus m5(5);
    CHECK(inv_fprime(IntPoly{-2, 0, 0, 1}, Integer(5), 1) == ModPoly(m5, {0, 1}));
    CHECK(inv_fprime(IntPoly{-2, 0, 1}, Integer(7), 1) == ModPoly(Modulus(7), {0, 2}));
    const ModPoly hi = inv_fprime(IntPoly{-2, 0, 0, 1}, Integer(5), 4);
    CHECK(hi.reduce_to(m5) == ModPoly(m5, {0, 1}));
    CHECK_THROWS_AS(inv_fprime(IntPoly{-2, 0, 1}, Integer(2), 1), Error);

    Rng rng(22);
    for (int t = 0; t < 60; ++t) {
        const IntPoly f = testing::random_poly(rng, static_cast<int>(testing::uniform(rng, 2, 7)), 30, 5);
        const long p = std::vector<long>{3, 5, 7, 11, 13, 17, 19, 23}[t % 8];
        if (!good_prime(f, p)) continue;
        const unsigned a = static_cast<unsigned>(testing::uniform(rng, 1, 9));
        const Modulus m(p, a);
        const ModPoly u = inv_fprime(f, Integer(p), a);
        const ModPoly monic = ModPoly(m, f).monic();
        CHECK(u.degree() < f.degree());
        CHECK(rem(u * ModPoly(m, derivative(f)), monic) == ModPoly::constant(m, Integer(1)));
    }
}

TEST_CASE("power sums") {
    CHECK(power_sums(ModPoly(Modulus(7), {2, -3, 1}), 2) == std::vector<Integer>{2, 3, 5});
    CHECK(power_sums(ModPoly(Modulus(101, 2), {2, -3, 1}), 3) == std::vector<Integer>{2, 3, 5, 9});
    CHECK(power_sums(ModPoly(Modulus(5), {4, 3, 1}), 2) == std::vector<Integer>{2, 2, 1});
    const Modulus m(13, 3);
    const auto ps = power_sums(ModPoly(m, {-6, 1}), 5);
    for (std::size_t k = 1; k <= 5; ++k) {
        Integer want;
        mpz_powm_ui(want.get_mpz_t(), Integer(6).get_mpz_t(), k, m.value().get_mpz_t());
        CHECK(ps[k] == want);
    }
    CHECK_THROWS_AS(power_sums(ModPoly(Modulus(7), {1, 2}), 2), Error);
}

TEST_CASE("power sums agree with explicit roots when F splits") {
    Rng rng(23);
    const long primes[] = {7, 11, 13, 29, 53};
    for (int t = 0; t < 60; ++t) {
        const long p = primes[t % 5];
        const int e = static_cast<int>(testing::uniform(rng, 1, 5));
        IntPoly F{1};
        std::vector<long> rs;
        for (int i = 0; i < e; ++i) {
            rs.push_back(testing::uniform(rng, 0, p - 1));
            F *= IntPoly{-rs.back(), 1};
        }
        const auto ps = power_sums(ModPoly(Modulus(p), F), 6);
        for (std::size_t k = 0; k <= 6; ++k) {
            Integer want(0);
            for (long r : rs) {
                Integer rk;
                mpz_pow_ui(rk.get_mpz_t(), Integer(r).get_mpz_t(), k);
                want += rk;
            }
            CHECK(ps[k] == Modulus(p).reduce(want));
        }
    }
}

TEST_CASE("DDF and Hensel round trip") {
    Rng rng(24);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 100; ++t) {
        const IntPoly f = testing::random_poly(rng, static_cast<int>(testing::uniform(rng, 2, 8)), 40, 4);
        const long p = std::vector<long>{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 97}[t % 16];
        if (!good_prime(f, p)) continue;
        ++checked;
        const auto dd = ddf(f, Integer(p));
        unsigned total = 0;
        for (const auto& fac : dd.factors) {
            CHECK(fac.factor.is_monic());
            CHECK(fac.factor.degree() % fac.degree == 0);
            total += fac.factor.degree();
        }
        CHECK(total == static_cast<unsigned>(f.degree()));
        CHECK(product(dd) == ModPoly(Modulus(p), f).monic());
        CHECK(std::is_sorted(dd.factors.begin(), dd.factors.end(),
                             [](const DegreeFactor& a, const DegreeFactor& b) { return a.degree < b.degree; }));

        const unsigned a = static_cast<unsigned>(testing::uniform(rng, 1, 12));
        const auto lifted = hensel_lift_factors(f, dd, a);
        CHECK(product(lifted) == ModPoly(Modulus(p, a), f).monic());
        for (std::size_t i = 0; i < dd.size(); ++i) {
            CHECK(lifted.factors[i].factor.reduce_to(Modulus(p)) == dd.factors[i].factor);
            CHECK(lifted.factors[i].factor.is_monic());
        }
    }
    CHECK(checked == 100);
}
