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
#ifndef NFISO_POLYZ_HPP
#define NFISO_POLYZ_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nfiso {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dense polynomial in Z[x]; coefficient i multiplies x^i.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t k);
    /// The polynomial x.
    static IntPoly x();

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^i; zero past the degree.
    const Integer& operator[](std::size_t i) const noexcept;
    const Integer& leading() const;
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
    IntPoly operator-() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

  private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// Polynomial in Q[x] kept as numerator / denominator with a positive
/// denominator coprime to the numerator's content.
class RatPoly {
  public:
    RatPoly() : den_(1) {}
    RatPoly(IntPoly numerator, Integer denominator = 1);  // NOLINT: implicit from IntPoly

    static RatPoly from_rationals(const std::vector<Rational>& coeffs);

    const IntPoly& numerator() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }
    int degree() const noexcept { return num_.degree(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    Rational coeff(std::size_t i) const;
    Rational leading() const;
    std::vector<Rational> to_rationals() const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const Rational& c);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
    RatPoly operator-() const;

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

  private:
    void normalize();
    IntPoly num_;
    Integer den_;
};

IntPoly derivative(const IntPoly& f);
Integer evaluate(const IntPoly& f, const Integer& x);
Rational evaluate(const RatPoly& f, const Rational& x);
/// Non-negative gcd of the coefficients; zero for the zero polynomial.
Integer content(const IntPoly& f);
/// f / content(f) with a positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

/// Quotient and remainder over Q. Throws Error on a zero divisor.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
RatPoly rem(const RatPoly& a, const RatPoly& b);
/// Inverse of a modulo m over Q; throws Error when gcd(a, m) != 1.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& m);
/// c(a(x)) mod m, Horner style.
RatPoly compose_mod(const IntPoly& c, const RatPoly& a, const RatPoly& m);

/// Res(a, b) via the subresultant PRS.
Integer resultant(const IntPoly& a, const IntPoly& b);
/// Discriminant (-1)^{n(n-1)/2} Res(f, f') / f_n. Requires deg f >= 1.
Integer discriminant(const IntPoly& f);
bool is_squarefree(const IntPoly& f);

/// Smallest t >= 0 with t^2 >= x.
Integer ceil_sqrt(const Integer& x);
/// Smallest integer t >= 0 with t^2 >= q (q >= 0).
Integer ceil_sqrt(const Rational& q);

/// Upper bound for the 2-norm: ceil(||f|| * 2^k) / 2^k with k = scale_bits.
Rational norm2_upper(const IntPoly& f, unsigned scale_bits = 32);
/// Floating-point 2-norm, for reporting only.
double norm2(const IntPoly& f);

/// Upper bound S for the sum of absolute values of the complex roots of g:
/// the smaller of deg(g) times the Cauchy root bound and the
/// Mahler-measure bound ||g|| / |g_n| + (deg g - 1).
Rational sum_abs_roots_bound(const IntPoly& g);

/// Bounds controlling lattice removals for the isomorphism search.
struct BoundData {
    Rational S;       ///< bound for the sum of |roots of g|
    Rational norm_f;  ///< upper-rounded ||f||
    Rational b;       ///< bound for ||vec(h)||: n * S * ||f||
    Integer b_ext;    ///< ceil(sqrt((g_n b)^2 + g_n^2)), covers (g_n vec(h), g_n)
};

/// Throws Error if deg f != deg g.
BoundData iso_vector_bound(const IntPoly& f, const IntPoly& g);

/// Characteristic polynomial of r(alpha) where f(alpha) = 0, i.e.
/// Res_y(f(y), x - r(y)) made primitive with positive leading coefficient.
/// Throws NotPrimitiveElement when the result is not squarefree.
IntPoly resultant_minpoly(const IntPoly& f, const RatPoly& r);

class NotPrimitiveElement : public Error {
  public:
    explicit NotPrimitiveElement(IntPoly charpoly);
    const IntPoly& charpoly() const noexcept { return charpoly_; }

  private:
    IntPoly charpoly_;
};

/// Human-readable form, e.g. "3*x^2 - x + 7". Parses back with parse_poly.
std::string to_string(const IntPoly& f, char var = 'x');
/// "(num)/den" or just "num" when the denominator is one.
std::string to_string(const RatPoly& f, char var = 'x');
std::ostream& operator<<(std::ostream& os, const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const RatPoly& f);

}  // namespace nfiso

#endif  // NFISO_POLYZ_HPP
