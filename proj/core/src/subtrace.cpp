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
#include "nfiso/subtrace.hpp"

#include <algorithm>

namespace nfiso {

BasisImage base_polynomials(const IntPoly& f, const Integer& p, unsigned a) {
    const Modulus mod(p, a);
    const ModPoly M = ModPoly(mod, f).monic();
    const ModPoly df(mod, derivative(f));
    const ModPoly x = ModPoly::x(mod);
    BasisImage out{mod, {}};
    ModPoly cur = inv_fprime(f, p, a);
    ModPoly power = ModPoly::constant(mod, Integer(1));
    for (int i = 0; i < f.degree(); ++i) {
        if (!(rem(cur * df, M) == rem(power, M))) throw Error("base_polynomials: Base_i * f' != x^(i-1)");
        out.base.push_back(cur);
        cur = rem(cur * x, M);
        power = power * x;
    }
    return out;
}

std::vector<Integer> subtrace_f(const BasisImage& basis, const ModPoly& F_d) {
    if (!(F_d.modulus() == basis.modulus)) throw Error("subtrace_f: modulus mismatch");
    int top = 0;
    for (const auto& b : basis.base) top = std::max(top, b.degree());
    const std::vector<Integer> P = power_sums(F_d, static_cast<std::size_t>(top));
    std::vector<Integer> out;
    out.reserve(basis.base.size());
    for (const auto& b : basis.base) {
        Integer acc(0);
        for (int j = 0; j <= b.degree(); ++j) mpz_addmul(acc.get_mpz_t(), b[j].get_mpz_t(), P[j].get_mpz_t());
        out.push_back(basis.modulus.reduce(acc));
    }
    return out;
}

Integer subtrace_g(const ModPoly& G_d) { return power_sums(G_d, 1)[1]; }

SubTraceMatrix build_T(const BasisImage& basis, const std::vector<FactorPair>& pairs) {
    const std::size_t n = basis.base.size();
    SubTraceMatrix out{basis.modulus, IntMatrix(n + 1, pairs.size()), {}};
    for (std::size_t col = 0; col < pairs.size(); ++col) {
        const auto& pr = pairs[col];
        if (pr.F.degree() != pr.G.degree())
            throw Error("build_T: factor degree mismatch for d = " + std::to_string(pr.degree));
        if (!(pr.G.modulus() == basis.modulus)) throw Error("build_T: modulus mismatch");
        const std::vector<Integer> tf = subtrace_f(basis, pr.F);
        for (std::size_t i = 0; i < n; ++i) out.T(i, col) = tf[i];
        out.T(n, col) = basis.modulus.reduce(-subtrace_g(pr.G));
        out.degrees.push_back(pr.degree);
    }
    return out;
}

IntMatrix root_column(const BasisImage& basis, const Integer& alpha, const Integer& beta) {
    const std::size_t n = basis.base.size();
    IntMatrix T(n + 1, 1);
    for (std::size_t i = 0; i < n; ++i) T(i, 0) = eval(basis.base[i], alpha);
    T(n, 0) = basis.modulus.reduce(-beta);
    return T;
}

}  // namespace nfiso
