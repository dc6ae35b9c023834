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

#include <cmath>
#include <optional>

#include "generators.hpp"
#include "nfiso/lattice.hpp"

using namespace nfiso;
using nfiso::testing::Rng;

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long h) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = testing::uniform(rng, -h, h);
    return m;
}

// Rational inverse of a square matrix, or nullopt if singular.
std::optional<std::vector<std::vector<Rational>>> inverse(const IntMatrix& B) {
    const std::size_t n = B.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = B(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational t = a[r][c] / a[c][c];
            for (std::size_t k = c; k < 2 * n; ++k) a[r][k] -= t * a[c][k];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j] / a[i][i];
    return inv;
}

// Squared length of a shortest nonzero vector by enumerating coefficients
// in the box that Cramer's rule allows; nullopt when the box is too large.
std::optional<Integer> brute_force_svp(const IntMatrix& B) {
    const auto inv = inverse(B);
    if (!inv) return std::nullopt;
    const std::size_t n = B.rows();
    Integer best = norm_squared(B.row(0));
    for (std::size_t i = 1; i < n; ++i) best = std::min(best, norm_squared(B.row(i)));
    const double R = std::sqrt(best.get_d());
    std::vector<long> box(n);
    double volume = 1;
    for (std::size_t i = 0; i < n; ++i) {
        double col = 0;
        for (std::size_t j = 0; j < n; ++j) col += (*inv)[j][i].get_d() * (*inv)[j][i].get_d();
        box[i] = static_cast<long>(std::floor(R * std::sqrt(col) + 1e-9));
        volume *= 2.0 * box[i] + 1;
    }
    if (volume > 3e6) return std::nullopt;
    std::vector<long> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = -box[i];
    while (true) {
        bool nonzero = false;
        IntVector v(B.cols(), Integer(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (c[i] == 0) continue;
            nonzero = true;
            for (std::size_t j = 0; j < B.cols(); ++j) v[j] += c[i] * B(i, j);
        }
        if (nonzero) best = std::min(best, norm_squared(v));
        std::size_t k = 0;
        while (k < n && c[k] == box[k]) c[k] = -box[k], ++k;
        if (k == n) break;
        ++c[k];
    }
    return best;
}

// Integer solution of x B = v through the rational inverse (square B only).
bool in_span_square(const IntMatrix& B, const IntVector& v) {
    const auto inv = inverse(B);
    if (!inv) return false;
    for (std::size_t j = 0; j < B.rows(); ++j) {
        Rational x(0);
        for (std::size_t i = 0; i < B.cols(); ++i) x += Rational(v[i]) * (*inv)[i][j];
        if (x.get_den() != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("Gram-Schmidt lengths") {
    CHECK(gso_lengths(IntMatrix{{2, 0}, {0, 3}}).sq_lengths == std::vector<Rational>{4, 9});
    CHECK(gso_lengths(IntMatrix{{1, 1}, {0, 1}}).sq_lengths == std::vector<Rational>{2, Rational(1, 2)});
    CHECK_THROWS_AS(gso_lengths(IntMatrix{{1, 0}, {1, 0}}), DependentRows);
    const GsoData d = gso(IntMatrix{{1, 1}, {0, 1}});
    CHECK(d.mu[1][0] == Rational(1, 2));
}

TEST_CASE("matrix basics") {
    const IntMatrix a{{1, 2}, {3, 4}};
    CHECK(a * IntMatrix::identity(2) == a);
    CHECK(a * IntMatrix{{0}, {1}} == IntMatrix{{2}, {4}});
    CHECK(a.hcat(IntMatrix{{5}, {6}}) == IntMatrix{{1, 2, 5}, {3, 4, 6}});
    CHECK(a.columns(1, 1) == IntMatrix{{2}, {4}});
    CHECK(IntMatrix(2, 3).is_zero());
    CHECK(dot(a.row(0), a.row(1)) == 11);
}

TEST_CASE("LLL with removals") {
    const IntMatrix out = lll_with_removals(IntMatrix{{1, 0}, {0, 100}}, Rational(10));
    REQUIRE(out.rows() == 1);
    CHECK(norm_squared(out.row(0)) == 1);
    CHECK(out(0, 1) == 0);

    const IntMatrix reduced{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
    const IntMatrix same = lll_with_removals(reduced, Rational(10));
    CHECK(same.rows() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(norm_squared(same.row(i)) == norm_squared(reduced.row(i)));

    CHECK(lll_with_removals(IntMatrix{{100, 0}, {0, 100}}, Rational(10)).rows() == 0);
    CHECK_THROWS_AS(lll_with_removals(reduced, Rational(0)), Error);

    // Dependent and zero rows are absorbed.
    const IntMatrix dep = lll_reduce(IntMatrix{{2, 4}, {1, 2}, {0, 0}, {3, 1}});
    CHECK(dep.rows() == 2);
    CHECK(is_lll_reduced(dep));
    CHECK(in_lattice(dep, IntVector{1, 2}));
    CHECK(in_lattice(dep, IntVector{3, 1}));
}

TEST_CASE("LLL first vector against brute-force shortest vector") {
    Rng rng(31);
    int checked = 0;
    while (checked < 60) {
        const IntMatrix A = random_matrix(rng, 4, 4, 20);
        const auto lambda = brute_force_svp(A);
        if (!lambda) continue;
        ++checked;
        const IntMatrix L = lll_with_removals(A, Rational(1000000));
        REQUIRE(L.rows() == 4);
        CHECK(is_lll_reduced(L));
        CHECK(norm_squared(L.row(0)) <= 8 * *lambda);
    }
}

TEST_CASE("reduction output is a reduced basis of the same lattice") {
    Rng rng(32);
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 6));
        const IntMatrix A = random_matrix(rng, n, n, 1000);
        if (!inverse(A)) continue;
        LllStats stats;
        const IntMatrix L = lll_reduce(A, &stats);
        CHECK(stats.calls == 1);
        REQUIRE(L.rows() == n);
        CHECK(is_lll_reduced(L));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(in_span_square(A, L.row(i)));
            CHECK(in_span_square(L, A.row(i)));
        }
        const GsoData g = gso(L);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) CHECK(abs(g.mu[i][j]) <= Rational(1, 2));
            CHECK(g.sq_lengths[i] >= (Rational(3, 4) - g.mu[i][i - 1] * g.mu[i][i - 1]) * g.sq_lengths[i - 1]);
        }
    }
}

TEST_CASE("removals keep every short vector") {
    Rng rng(33);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 6));
        IntMatrix A = random_matrix(rng, n, n, 200);
        IntVector v(n);
        for (auto& x : v) x = testing::uniform(rng, -5, 5);
        if (norm_squared(v) == 0) continue;
        A.row(0) = v;
        if (!inverse(A)) continue;
        // Hide v behind a unimodular mix.
        for (std::size_t i = 1; i < n; ++i) {
            const long k = testing::uniform(rng, -9, 9);
            for (std::size_t j = 0; j < n; ++j) A(0, j) += k * A(i, j);
        }
        const Rational bound(ceil_sqrt(norm_squared(v)));
        const IntMatrix L = lll_with_removals(A, bound);
        CHECK(in_lattice(L, v));
        if (L.rows() == n) CHECK(in_span_square(L, v));
    }
}

TEST_CASE("lattice coordinates") {
    const IntMatrix B{{2, 0, 0}, {0, 3, 0}};
    CHECK(lattice_coordinates(B, IntVector{4, -3, 0}) == IntVector{2, -1});
    CHECK_FALSE(lattice_coordinates(B, IntVector{1, 0, 0}));
    CHECK_FALSE(lattice_coordinates(B, IntVector{0, 0, 1}));
    CHECK(in_lattice(IntMatrix(0, 3), IntVector{0, 0, 0}));
    CHECK_FALSE(in_lattice(IntMatrix(0, 3), IntVector{0, 1, 0}));
    const IntMatrix H = hermite_basis(IntMatrix{{2, 4}, {4, 2}, {6, 6}});
    CHECK(H.rows() == 2);
    CHECK(in_lattice(H, IntVector{6, 6}));
    CHECK(in_lattice(IntMatrix{{2, 4}, {4, 2}}, H.row(0)));
}
