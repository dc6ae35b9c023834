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
#ifndef NFISO_LATTICE_HPP
#define NFISO_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "nfiso/polyz.hpp"

namespace nfiso {

using IntVector = std::vector<Integer>;

/// Row-major integer matrix; every row has exactly cols() entries.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<IntVector> rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_.empty(); }

    Integer& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    const IntVector& row(std::size_t r) const { return rows_[r]; }
    IntVector& row(std::size_t r) { return rows_[r]; }
    const std::vector<IntVector>& row_data() const noexcept { return rows_; }

    void append_row(IntVector row);
    void pop_row() { rows_.pop_back(); }
    bool is_zero() const;

    /// Columns [first, first + count) as a new matrix.
    IntMatrix columns(std::size_t first, std::size_t count) const;
    /// [this | rhs], same number of rows.
    IntMatrix hcat(const IntMatrix& rhs) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::vector<IntVector> rows_;
    std::size_t cols_ = 0;
};

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Integer norm_squared(std::span<const Integer> v);

/// Squared Gram-Schmidt lengths ||b_i*||^2, one per row.
struct GsoProfile {
    std::vector<Rational> sq_lengths;
};

class DependentRows : public Error {
  public:
    using Error::Error;
};

/// Exact squared GSO lengths. Throws DependentRows if the rows are dependent.
GsoProfile gso_lengths(const IntMatrix& B);

/// Exact Gram-Schmidt coefficients mu_ij (i > j) together with the lengths.
struct GsoData {
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> sq_lengths;
};
GsoData gso(const IntMatrix& B);

/// Swap and size-reduction counters; the total swap count is the work
/// measure used when comparing reduction strategies.
struct LllStats {
    std::uint64_t swaps = 0;
    std::uint64_t reductions = 0;
    std::uint64_t calls = 0;
    std::uint64_t removed = 0;

    LllStats& operator+=(const LllStats& o) {
        swaps += o.swaps;
        reductions += o.reductions;
        calls += o.calls;
        removed += o.removed;
        return *this;
    }
};

/// LLL with delta = 3/4 on the lattice spanned by the rows of A. Dependent
/// and zero rows are folded away first (Hermite normal form), so the result
/// is always a basis.
IntMatrix lll_reduce(const IntMatrix& A, LllStats* stats = nullptr);

/// LLL-reduces A, then drops trailing rows whose Gram-Schmidt length exceeds
/// `bound`. Every vector of the input lattice with norm <= bound stays in the
/// span of the output. The output may be empty.
IntMatrix lll_with_removals(const IntMatrix& A, const Rational& bound, LllStats* stats = nullptr);

/// Basis of the lattice generated by the rows (row Hermite normal form,
/// zero rows dropped).
IntMatrix hermite_basis(const IntMatrix& A);

/// True if |mu_ij| <= 1/2 and the Lovasz condition with delta = 3/4 holds.
bool is_lll_reduced(const IntMatrix& B);

/// Integer coefficients x with x * B = v when v lies in the lattice spanned
/// by the (independent) rows of B; nullopt otherwise.
std::optional<IntVector> lattice_coordinates(const IntMatrix& B, std::span<const Integer> v);
inline bool in_lattice(const IntMatrix& B, std::span<const Integer> v) {
    return lattice_coordinates(B, v).has_value();
}

}  // namespace nfiso

#endif  // NFISO_LATTICE_HPP
