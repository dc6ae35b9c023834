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
#ifndef NFISO_MODPOLY_HPP
#define NFISO_MODPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "nfiso/polyz.hpp"

namespace nfiso {

/// The modulus p^a. Two moduli compare equal when p and a agree.
class Modulus {
  public:
    Modulus(Integer p, unsigned exponent = 1);

    const Integer& prime() const noexcept { return p_; }
    unsigned exponent() const noexcept { return a_; }
    const Integer& value() const noexcept { return m_; }
    bool is_prime() const noexcept { return a_ == 1; }

    Modulus with_exponent(unsigned a) const { return Modulus(p_, a); }
    /// Canonical residue in [0, p^a).
    Integer reduce(const Integer& x) const;
    /// Residue in (-p^a/2, p^a/2].
    Integer symmetric(const Integer& x) const;
    /// Inverse of x modulo p^a; throws Error when x is not a unit.
    Integer inverse(const Integer& x) const;

    friend bool operator==(const Modulus& a, const Modulus& b) {
        return a.a_ == b.a_ && a.p_ == b.p_;
    }

  private:
    Integer p_;
    unsigned a_;
    Integer m_;
};

/// Dense polynomial over Z/p^a; coefficients are kept in [0, p^a).
class ModPoly {
  public:
    explicit ModPoly(Modulus mod) : mod_(std::move(mod)) {}
    ModPoly(Modulus mod, std::vector<Integer> coeffs);
    ModPoly(Modulus mod, std::initializer_list<long> coeffs);
    ModPoly(Modulus mod, const IntPoly& f);

    static ModPoly x(const Modulus& mod);
    static ModPoly constant(const Modulus& mod, const Integer& c);

    const Modulus& modulus() const noexcept { return mod_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const Integer& operator[](std::size_t i) const noexcept;
    const Integer& leading() const;
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    /// Integer polynomial with coefficients in [0, p^a).
    IntPoly lift() const { return IntPoly(coeffs_); }
    /// Same coefficients read modulo a divisor p^b of p^a (b <= a).
    ModPoly reduce_to(const Modulus& coarser) const;
    /// Divides by the (unit) leading coefficient.
    ModPoly monic() const;

    ModPoly& operator+=(const ModPoly& rhs);
    ModPoly& operator-=(const ModPoly& rhs);
    ModPoly& operator*=(const ModPoly& rhs);
    ModPoly& operator*=(const Integer& c);

    friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
    friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
    friend ModPoly operator*(ModPoly a, const ModPoly& b) { return a *= b; }
    friend ModPoly operator*(ModPoly a, const Integer& c) { return a *= c; }

    friend bool operator==(const ModPoly&, const ModPoly&) = default;

  private:
    void normalize();
    void require_same(const ModPoly& rhs) const;
    Modulus mod_;
    std::vector<Integer> coeffs_;
};

/// Division by a divisor whose leading coefficient is a unit mod p^a.
std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b);
ModPoly rem(const ModPoly& a, const ModPoly& b);
/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);
/// Monic gcd; prime modulus only.
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic; prime modulus only.
struct ExtGcd {
    ModPoly g, s, t;
};
ExtGcd ext_gcd(const ModPoly& a, const ModPoly& b);
Integer eval(const ModPoly& f, const Integer& x);
ModPoly derivative(const ModPoly& f);

/// Thrown when a prime divides the leading coefficient or the discriminant.
class BadPrime : public Error {
  public:
    using Error::Error;
};

/// One distinct-degree block: the product of all irreducible factors of
/// degree `degree`.
struct DegreeFactor {
    unsigned degree;
    ModPoly factor;
};

/// f / f_n = prod F_d over Z/p^a, blocks sorted by degree.
struct DistinctDegreeFactorization {
    Modulus modulus;
    std::vector<DegreeFactor> factors;

    /// Number of distinct degrees present.
    std::size_t size() const noexcept { return factors.size(); }
    /// (d, deg F_d) pairs in ascending d.
    std::vector<std::pair<unsigned, unsigned>> pattern() const;
    /// deg F_1, or 0 if f has no linear factors.
    unsigned linear_degree() const;
};

/// Distinct-degree factorization of f modulo the prime p. Throws BadPrime if
/// p divides f_n or f mod p is not squarefree.
DistinctDegreeFactorization ddf(const IntPoly& f, const Integer& p);

/// Lifts a mod-p DDF of f to modulus p^a with quadratic Hensel lifting.
DistinctDegreeFactorization hensel_lift_factors(const IntPoly& f, const DistinctDegreeFactorization& dd,
                                                unsigned a);

/// Distinct roots in [0, p) of a polynomial over the prime field.
std::vector<Integer> roots_mod_p(const ModPoly& f);

/// Roots of F modulo p^a, one per root of F mod p, ascending by the residue
/// mod p. Requires 1 <= a <= exponent of F's modulus and F mod p a product of
/// distinct linear factors.
std::vector<Integer> lift_roots(const ModPoly& F, unsigned a);

/// Newton-lifts a simple root of f known modulo p^from to modulo p^to.
Integer lift_root(const IntPoly& f, const Integer& root, const Integer& p, unsigned from, unsigned to);

/// u of degree < n with u * f' = 1 mod (f, p^a).
ModPoly inv_fprime(const IntPoly& f, const Integer& p, unsigned a);

/// P_0 .. P_kmax: power sums of the roots of a monic F, by Newton's identities.
std::vector<Integer> power_sums(const ModPoly& F, std::size_t k_max);

}  // namespace nfiso

#endif  // NFISO_MODPOLY_HPP
