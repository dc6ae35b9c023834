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
#include "nfiso/lattice.hpp"

#include <algorithm>
#include <utility>

namespace nfiso {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows, IntVector(cols, Integer(0))), cols_(cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    cols_ = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("IntMatrix: ragged initializer");
        IntVector v;
        for (long x : r) v.emplace_back(x);
        rows_.push_back(std::move(v));
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<IntVector> rows, std::size_t cols) {
    IntMatrix m;
    m.cols_ = cols;
    for (auto& r : rows) {
        if (r.size() != cols) throw Error("IntMatrix: row length mismatch");
    }
    m.rows_ = std::move(rows);
    return m;
}

void IntMatrix::append_row(IntVector row) {
    if (rows_.empty() && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw Error("IntMatrix::append_row: row length mismatch");
    rows_.push_back(std::move(row));
}

bool IntMatrix::is_zero() const {
    for (const auto& r : rows_)
        for (const auto& x : r)
            if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw Error("IntMatrix::columns: out of range");
    IntMatrix out(rows(), count);
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < count; ++c) out(r, c) = rows_[r][first + c];
    return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& rhs) const {
    if (rows() != rhs.rows()) throw Error("IntMatrix::hcat: row count mismatch");
    IntMatrix out(rows(), cols_ + rhs.cols_);
    for (std::size_t r = 0; r < rows(); ++r) {
        std::copy(rows_[r].begin(), rows_[r].end(), out.rows_[r].begin());
        std::copy(rhs.rows_[r].begin(), rhs.rows_[r].end(), out.rows_[r].begin() + static_cast<long>(cols_));
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error("IntMatrix product: shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Integer& x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(out(i, j).get_mpz_t(), x.get_mpz_t(), b(l, j).get_mpz_t());
        }
    return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s(0);
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

Integer norm_squared(std::span<const Integer> v) { return dot(v, v); }

// ---------------------------------------------------------------- GSO

GsoData gso(const IntMatrix& B) {
    const std::size_t n = B.rows(), m = B.cols();
    GsoData out;
    out.mu.assign(n, std::vector<Rational>(n, Rational(0)));
    out.sq_lengths.assign(n, Rational(0));
    std::vector<std::vector<Rational>> star(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < m; ++c) star[i][c] = B(i, c);
        for (std::size_t j = 0; j < i; ++j) {
            Rational num(0);
            for (std::size_t c = 0; c < m; ++c) num += Rational(B(i, c)) * star[j][c];
            const Rational mu = num / out.sq_lengths[j];
            out.mu[i][j] = mu;
            if (mu == 0) continue;
            for (std::size_t c = 0; c < m; ++c) star[i][c] -= mu * star[j][c];
        }
        Rational len(0);
        for (std::size_t c = 0; c < m; ++c) len += star[i][c] * star[i][c];
        if (len == 0) throw DependentRows("Gram-Schmidt: rows are linearly dependent");
        out.sq_lengths[i] = len;
    }
    return out;
}

GsoProfile gso_lengths(const IntMatrix& B) { return {gso(B).sq_lengths}; }

bool is_lll_reduced(const IntMatrix& B) {
    GsoData g;
    try {
        g = gso(B);
    } catch (const DependentRows&) {
        return false;
    }
    const Rational half(1, 2), delta(3, 4);
    for (std::size_t i = 0; i < B.rows(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (abs(g.mu[i][j]) > half) return false;
        if (i > 0) {
            const Rational& mu = g.mu[i][i - 1];
            if (g.sq_lengths[i] < (delta - mu * mu) * g.sq_lengths[i - 1]) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- HNF

IntMatrix hermite_basis(const IntMatrix& A) {
    std::vector<IntVector> rows;
    for (const auto& r : A.row_data())
        if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; })) rows.push_back(r);
    const std::size_t m = A.cols();
    std::size_t pivot_row = 0;
    auto axpy = [m](IntVector& dst, const Integer& q, const IntVector& src) {
        for (std::size_t c = 0; c < m; ++c) mpz_submul(dst[c].get_mpz_t(), q.get_mpz_t(), src[c].get_mpz_t());
    };
    for (std::size_t col = 0; col < m && pivot_row < rows.size(); ++col) {
        while (true) {
            // Row with the smallest nonzero entry in this column becomes the pivot.
            std::size_t best = rows.size();
            for (std::size_t r = pivot_row; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[pivot_row], rows[best]);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
                axpy(rows[r], q, rows[pivot_row]);
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (pivot_row < rows.size() && rows[pivot_row][col] != 0) {
            if (rows[pivot_row][col] < 0)
                for (auto& x : rows[pivot_row]) x = -x;
            for (std::size_t r = 0; r < pivot_row; ++r) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
                if (q != 0) axpy(rows[r], q, rows[pivot_row]);
            }
            ++pivot_row;
        }
    }
    rows.resize(pivot_row);
    return IntMatrix::from_rows(std::move(rows), m);
}

// ---------------------------------------------------------------- integral LLL

namespace {

struct Dependent {};

// Fraction-free LLL (de Weger's integral variant) with delta = 3/4.
// d[i] = prod_{j <= i} ||b_j*||^2 and lam[i][j] = d[j] * mu_ij, all exact.
class IntegralLll {
  public:
    explicit IntegralLll(std::vector<IntVector> basis) : b_(std::move(basis)), n_(b_.size()) {
        d_.assign(n_ + 1, Integer(0));
        lam_.assign(n_ + 1, IntVector(n_ + 1, Integer(0)));
        d_[0] = 1;
    }

    void run(LllStats& stats) {
        if (n_ == 0) return;
        d_[1] = dot(b_[0], b_[0]);
        if (d_[1] == 0) throw Dependent{};
        std::size_t k = 2, kmax = 1;
        Integer lhs, rhs, t;
        while (k <= n_) {
            if (k > kmax) {
                kmax = k;
                for (std::size_t j = 1; j <= k; ++j) {
                    Integer u = dot(row(k), row(j));
                    for (std::size_t i = 1; i < j; ++i) {
                        u = d_[i] * u - lam_[k][i] * lam_[j][i];
                        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i - 1].get_mpz_t());
                    }
                    if (j < k) {
                        lam_[k][j] = std::move(u);
                    } else {
                        if (u == 0) throw Dependent{};
                        d_[k] = std::move(u);
                    }
                }
            }
            reduce(k, k - 1, stats);
            // Lovasz test: d_k d_{k-2} < (3/4) d_{k-1}^2 - lam_{k,k-1}^2
            lhs = 4 * d_[k] * d_[k - 2];
            rhs = 3 * d_[k - 1] * d_[k - 1] - 4 * lam_[k][k - 1] * lam_[k][k - 1];
            if (lhs < rhs) {
                swap(k, kmax);
                ++stats.swaps;
                if (k > 2) --k;
            } else {
                for (std::size_t l = k - 1; l-- > 1;) reduce(k, l, stats);
                ++k;
            }
        }
    }

    std::size_t size() const noexcept { return n_; }

    /// ||b_n*|| > bound, i.e. d_n * den^2 > num^2 * d_{n-1}.
    bool last_exceeds(const Rational& bound) const {
        const Integer lhs = d_[n_] * bound.get_den() * bound.get_den();
        const Integer rhs = d_[n_ - 1] * bound.get_num() * bound.get_num();
        return lhs > rhs;
    }

    void pop() {
        b_.pop_back();
        --n_;
    }

    std::vector<IntVector> take() { return std::move(b_); }

  private:
    IntVector& row(std::size_t i) { return b_[i - 1]; }

    void reduce(std::size_t k, std::size_t l, LllStats& stats) {
        Integer& lkl = lam_[k][l];
        if (2 * abs(lkl) <= d_[l]) return;
        Integer q = 2 * lkl + d_[l];
        Integer den = 2 * d_[l];
        mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
        IntVector& bk = row(k);
        const IntVector& bl = row(l);
        for (std::size_t c = 0; c < bk.size(); ++c) mpz_submul(bk[c].get_mpz_t(), q.get_mpz_t(), bl[c].get_mpz_t());
        mpz_submul(lkl.get_mpz_t(), q.get_mpz_t(), d_[l].get_mpz_t());
        for (std::size_t i = 1; i < l; ++i)
            mpz_submul(lam_[k][i].get_mpz_t(), q.get_mpz_t(), lam_[l][i].get_mpz_t());
        ++stats.reductions;
    }

    void swap(std::size_t k, std::size_t kmax) {
        std::swap(row(k), row(k - 1));
        for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
        const Integer lambda = lam_[k][k - 1];
        Integer B = d_[k - 2] * d_[k] + lambda * lambda;
        mpz_divexact(B.get_mpz_t(), B.get_mpz_t(), d_[k - 1].get_mpz_t());
        Integer t, u;
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            t = lam_[i][k];
            u = d_[k] * lam_[i][k - 1] - lambda * t;
            mpz_divexact(lam_[i][k].get_mpz_t(), u.get_mpz_t(), d_[k - 1].get_mpz_t());
            u = B * t + lambda * lam_[i][k];
            mpz_divexact(lam_[i][k - 1].get_mpz_t(), u.get_mpz_t(), d_[k].get_mpz_t());
        }
        d_[k - 1] = std::move(B);
    }

    std::vector<IntVector> b_;
    std::size_t n_;
    IntVector d_;
    std::vector<IntVector> lam_;
};

std::vector<IntVector> nonzero_rows(const IntMatrix& A) {
    std::vector<IntVector> rows;
    for (const auto& r : A.row_data())
        if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; })) rows.push_back(r);
    return rows;
}

template <class AfterReduce>
IntMatrix run_lll(const IntMatrix& A, LllStats* stats, AfterReduce&& after) {
    LllStats local;
    LllStats& st = stats ? *stats : local;
    ++st.calls;
    std::vector<IntVector> rows = nonzero_rows(A);
    IntegralLll lll(rows);
    try {
        lll.run(st);
    } catch (const Dependent&) {
        lll = IntegralLll(hermite_basis(A).row_data());
        lll.run(st);
    }
    after(lll, st);
    return IntMatrix::from_rows(lll.take(), A.cols());
}

}  // namespace

IntMatrix lll_reduce(const IntMatrix& A, LllStats* stats) {
    return run_lll(A, stats, [](IntegralLll&, LllStats&) {});
}

IntMatrix lll_with_removals(const IntMatrix& A, const Rational& bound, LllStats* stats) {
    if (bound <= 0) throw Error("lll_with_removals: bound must be positive");
    return run_lll(A, stats, [&bound](IntegralLll& lll, LllStats& st) {
        // Dropping the last vector of an LLL-reduced basis leaves it reduced.
        while (lll.size() > 0 && lll.last_exceeds(bound)) {
            lll.pop();
            ++st.removed;
        }
    });
}

// ---------------------------------------------------------------- membership

std::optional<IntVector> lattice_coordinates(const IntMatrix& B, std::span<const Integer> v) {
    const std::size_t r = B.rows(), c = B.cols();
    if (v.size() != c) throw Error("lattice_coordinates: dimension mismatch");
    if (r == 0) {
        if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) return IntVector{};
        return std::nullopt;
    }
    // Solve x * B = v, i.e. B^T x^T = v^T, by Gauss-Jordan over Q.
    std::vector<std::vector<Rational>> M(c, std::vector<Rational>(r + 1, Rational(0)));
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < r; ++j) M[i][j] = B(j, i);
        M[i][r] = v[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r && row < c; ++col) {
        std::size_t p = row;
        while (p < c && M[p][col] == 0) ++p;
        if (p == c) continue;
        std::swap(M[p], M[row]);
        const Rational inv = 1 / M[row][col];
        for (auto& x : M[row]) x *= inv;
        for (std::size_t i = 0; i < c; ++i) {
            if (i == row || M[i][col] == 0) continue;
            const Rational f = M[i][col];
            for (std::size_t j = col; j <= r; ++j) M[i][j] -= f * M[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() != r) throw DependentRows("lattice_coordinates: basis rows are dependent");
    for (std::size_t i = row; i < c; ++i)
        if (M[i][r] != 0) return std::nullopt;
    IntVector x(r);
    for (std::size_t i = 0; i < r; ++i) {
        const Rational& q = M[i][r];
        if (q.get_den() != 1) return std::nullopt;
        x[pivot_col[i]] = q.get_num();
    }
    return x;
}

}  // namespace nfiso
