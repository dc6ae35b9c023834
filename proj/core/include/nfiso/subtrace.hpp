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
#ifndef NFISO_SUBTRACE_HPP
#define NFISO_SUBTRACE_HPP

#include <vector>

#include "nfiso/lattice.hpp"
#include "nfiso/modpoly.hpp"
#include "nfiso/polyz.hpp"

namespace nfiso {

/// Images of the rational representation basis alpha^(i-1) / f'(alpha),
/// i = 1..n, as polynomials of degree < n modulo (f, p^a).
struct BasisImage {
    Modulus modulus;
    std::vector<ModPoly> base;
};

/// Base_i = x^(i-1) * inv_fprime(f) mod (f, p^a); each one is checked
/// against Base_i * f' = x^(i-1).
BasisImage base_polynomials(const IntPoly& f, const Integer& p, unsigned a);

/// Sum of Base_i(gamma) over the roots gamma of F_d, for every i, computed
/// from the power sums of F_d.
std::vector<Integer> subtrace_f(const BasisImage& basis, const ModPoly& F_d);

/// Sum of the roots of G_d, i.e. the sub-trace of beta.
Integer subtrace_g(const ModPoly& G_d);

/// One factor pair of a prime shared by f and g.
struct FactorPair {
    unsigned degree;
    ModPoly F;
    ModPoly G;
};

/// (n+1) x m sub-trace matrix modulo p^a. Rows 1..n hold the sub-traces of
/// Base_i; row n+1 holds the negated sub-trace of beta, so that
/// (g_n vec(h), g_n) * T = 0 mod p^a for every isomorphism h.
struct SubTraceMatrix {
    Modulus modulus;
    IntMatrix T;
    std::vector<unsigned> degrees;
};

/// Throws Error if a pair's factor degrees differ or the moduli disagree.
SubTraceMatrix build_T(const BasisImage& basis, const std::vector<FactorPair>& pairs);

/// Single column for a p-adic root pairing: Base_i(alpha_j) for i = 1..n and
/// -beta as the last entry, all modulo p^a.
IntMatrix root_column(const BasisImage& basis, const Integer& alpha, const Integer& beta);

}  // namespace nfiso

#endif  // NFISO_SUBTRACE_HPP
