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
#include "nfiso/polyz.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace nfiso {

namespace {

const Integer kZero(0);

using RatVec = std::vector<Rational>;

void trim(RatVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Schoolbook division over Q; b must be nonzero after trimming.
void divrem_rat(RatVec a, const RatVec& b, RatVec& q, RatVec& r) {
    trim(a);
    q.clear();
    if (a.size() < b.size()) {
        r = std::move(a);
        return;
    }
    const std::size_t db = b.size() - 1;
    q.assign(a.size() - db, Rational(0));
    const Rational inv_lc = 1 / b.back();
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k] == 0) continue;
        Rational c = a[k] * inv_lc;
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    a.resize(db);
    trim(a);
    trim(q);
    r = std::move(a);
}

RatVec mul_rat(const RatVec& a, const RatVec& b) {
    if (a.empty() || b.empty()) return {};
    RatVec out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exact over Z.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const Integer& lc = b.leading();
    int da = a.degree();
    int e = da - db + 1;
    while (da >= db && !r.empty()) {
        Integer c = r[da];
        for (auto& x : r) x *= lc;
        for (int j = 0; j <= db; ++j) r[da - db + j] -= c * b[j];
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
        da = static_cast<int>(r.size()) - 1;
        --e;
    }
    if (e > 0) {
        Integer s;
        mpz_pow_ui(s.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& x : r) x *= s;
    }
    return IntPoly(std::move(r));
}

Integer pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

void append_term(std::ostringstream& os, const Integer& c, std::size_t k, char var, bool first) {
    Integer mag = abs(c);
    if (first) {
        if (c < 0) os << '-';
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
        os << mag.get_str();
        return;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1, Integer(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(Integer(1), 1); }

const Integer& IntPoly::operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Integer& IntPoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
        }
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& x : out.coeffs_) x = -x;
    return out;
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(IntPoly numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw Error("RatPoly with zero denominator");
    normalize();
}

void RatPoly::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = gcd(content(num_), den_);
    if (g != 1) {
        std::vector<Integer> c(num_.coeffs().begin(), num_.coeffs().end());
        for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        num_ = IntPoly(std::move(c));
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

RatPoly RatPoly::from_rationals(const std::vector<Rational>& coeffs) {
    Integer l(1);
    for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> num;
    num.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Integer t = l / c.get_den();
        num.push_back(t * c.get_num());
    }
    return RatPoly(IntPoly(std::move(num)), l);
}

Rational RatPoly::coeff(std::size_t i) const {
    Rational q(num_[i], den_);
    q.canonicalize();
    return q;
}

Rational RatPoly::leading() const { return coeff(static_cast<std::size_t>(num_.degree())); }

std::vector<Rational> RatPoly::to_rationals() const {
    std::vector<Rational> out;
    out.reserve(num_.coeffs().size());
    for (std::size_t i = 0; i < num_.coeffs().size(); ++i) out.push_back(coeff(i));
    return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    Integer l = lcm(den_, rhs.den_);
    num_ = num_ * Integer(l / den_) + rhs.num_ * Integer(l / rhs.den_);
    den_ = l;
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) { return *this += -rhs; }

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
    num_ *= Integer(c.get_num());
    den_ *= c.get_den();
    normalize();
    return *this;
}

RatPoly RatPoly::operator-() const { return RatPoly(-num_, den_); }

// ---------------------------------------------------------------- basics

IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1) return {};
    std::vector<Integer> d;
    d.reserve(static_cast<std::size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i) d.push_back(f[i] * i);
    return IntPoly(std::move(d));
}

Integer evaluate(const IntPoly& f, const Integer& x) {
    Integer acc(0);
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f[i];
    return acc;
}

Rational evaluate(const RatPoly& f, const Rational& x) {
    Rational acc(0);
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.numerator()[i];
    return acc / f.denominator();
}

Integer content(const IntPoly& f) {
    Integer g(0);
    for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Integer g = content(f);
    if (f.leading() < 0) g = -g;
    std::vector<Integer> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    RatVec q, r;
    divrem_rat(a.to_rationals(), b.to_rationals(), q, r);
    return {RatPoly::from_rationals(q), RatPoly::from_rationals(r)};
}

RatPoly rem(const RatPoly& a, const RatPoly& b) { return divrem(a, b).second; }

RatPoly inverse_mod(const RatPoly& a, const RatPoly& m) {
    if (m.degree() < 1) throw Error("inverse_mod: modulus must have positive degree");
    // Extended Euclid tracking only the cofactor of a.
    RatVec r0 = m.to_rationals();
    RatVec r1 = rem(a, m).to_rationals();
    RatVec s0, s1{Rational(1)};
    while (!r1.empty()) {
        RatVec q, r;
        divrem_rat(r0, r1, q, r);
        RatVec qs = mul_rat(q, s1);
        RatVec s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw Error("inverse_mod: arguments are not coprime");
    const Rational inv = 1 / r0[0];
    for (auto& c : s0) c *= inv;
    return rem(RatPoly::from_rationals(s0), m);
}

RatPoly compose_mod(const IntPoly& c, const RatPoly& a, const RatPoly& m) {
    if (m.degree() < 1) throw Error("compose_mod: modulus must have positive degree");
    RatVec mv = m.to_rationals();
    RatVec av = rem(a, m).to_rationals();
    RatVec acc;
    for (int i = c.degree(); i >= 0; --i) {
        acc = mul_rat(acc, av);
        if (acc.empty()) acc.push_back(Rational(0));
        acc[0] += Rational(c[i]);
        trim(acc);
        if (acc.size() >= mv.size()) {
            RatVec q, r;
            divrem_rat(std::move(acc), mv, q, r);
            acc = std::move(r);
        }
    }
    return RatPoly::from_rationals(acc);
}

// ---------------------------------------------------------------- resultants

Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) return Integer(0);
    IntPoly A = a_in, B = b_in;
    Integer ca = content(A), cb = content(B);
    Integer t = pow(ca, static_cast<unsigned long>(B.degree())) *
                pow(cb, static_cast<unsigned long>(A.degree()));
    auto divide_content = [](IntPoly& p, const Integer& c) {
        std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        p = IntPoly(std::move(v));
    };
    divide_content(A, ca);
    divide_content(B, cb);
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -1;
    }
    if (B.degree() == 0) return s * t * pow(B.leading(), static_cast<unsigned long>(A.degree()));

    Integer g(1), h(1);
    while (true) {
        const int delta = A.degree() - B.degree();
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
        IntPoly R = pseudo_rem(A, B);
        A = B;
        Integer divisor = g * pow(h, static_cast<unsigned long>(delta));
        std::vector<Integer> rv(R.coeffs().begin(), R.coeffs().end());
        for (auto& x : rv) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
        B = IntPoly(std::move(rv));
        if (B.is_zero()) return Integer(0);
        g = A.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            Integer num = pow(g, static_cast<unsigned long>(delta));
            Integer den = pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.degree() <= 0) break;
    }
    const unsigned long da = static_cast<unsigned long>(A.degree());
    Integer num = pow(B.leading(), da);
    Integer den = pow(h, da - 1);
    Integer hh;
    mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * hh;
}

Integer discriminant(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1) throw Error("discriminant requires degree >= 1");
    Integer r = resultant(f, derivative(f));
    Integer d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

bool is_squarefree(const IntPoly& f) {
    if (f.degree() < 1) return !f.is_zero();
    return discriminant(f) != 0;
}

// ---------------------------------------------------------------- bounds

Integer ceil_sqrt(const Integer& x) {
    if (x < 0) throw Error("ceil_sqrt of a negative number");
    Integer s;
    mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
    if (s * s < x) ++s;
    return s;
}

Integer ceil_sqrt(const Rational& q) {
    if (q < 0) throw Error("ceil_sqrt of a negative number");
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return ceil_sqrt(c);
}

Rational norm2_upper(const IntPoly& f, unsigned scale_bits) {
    Integer sq(0);
    for (const auto& c : f.coeffs()) sq += c * c;
    Integer scale = Integer(1) << scale_bits;
    Rational out(ceil_sqrt(Integer(sq * scale * scale)), scale);
    out.canonicalize();
    return out;
}

double norm2(const IntPoly& f) {
    double s = 0;
    for (const auto& c : f.coeffs()) {
        double d = c.get_d();
        s += d * d;
    }
    return std::sqrt(s);
}

Rational sum_abs_roots_bound(const IntPoly& g) {
    if (g.is_zero()) throw Error("sum_abs_roots_bound of the zero polynomial");
    const int n = g.degree();
    if (n < 1) throw Error("sum_abs_roots_bound requires degree >= 1");
    const Integer lc = abs(g.leading());
    Integer mx(0);
    for (int i = 0; i < n; ++i) mx = std::max(mx, Integer(abs(g[i])));
    Rational cauchy = 1 + Rational(mx, lc);
    cauchy.canonicalize();
    Rational by_cauchy = n * cauchy;
    Rational by_mahler = norm2_upper(g) / Rational(lc) + (n - 1);
    return std::min(by_cauchy, by_mahler);
}

BoundData iso_vector_bound(const IntPoly& f, const IntPoly& g) {
    if (f.degree() != g.degree()) throw Error("iso_vector_bound: degree mismatch");
    if (f.degree() < 1) throw Error("iso_vector_bound: degree must be >= 1");
    BoundData out;
    const int n = f.degree();
    out.S = sum_abs_roots_bound(g);
    out.norm_f = norm2_upper(f);
    out.b = n * out.S * out.norm_f;
    const Rational gn = Rational(abs(g.leading()));
    out.b_ext = ceil_sqrt(Rational(gn * out.b * gn * out.b + gn * gn));
    return out;
}

// ---------------------------------------------------------------- minpoly

NotPrimitiveElement::NotPrimitiveElement(IntPoly charpoly)
    : Error("characteristic polynomial is not squarefree; element generates a proper subfield"),
      charpoly_(std::move(charpoly)) {}

IntPoly resultant_minpoly(const IntPoly& f, const RatPoly& r) {
    const int n = f.degree();
    if (n < 1) throw Error("resultant_minpoly: f must have positive degree");
    const RatPoly fm(f);
    // Multiplication-by-r matrix: row j holds r * x^j mod f.
    std::vector<RatVec> M(n, RatVec(n, Rational(0)));
    RatPoly cur = rem(r, fm);
    const RatPoly xp(IntPoly::x());
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i <= cur.degree(); ++i) M[j][i] = cur.coeff(i);
        cur = rem(cur * xp, fm);
    }
    // Faddeev-LeVerrier; the characteristic polynomial is transpose invariant.
    RatVec c(n + 1, Rational(0));
    c[n] = 1;
    std::vector<RatVec> Mk(n, RatVec(n, Rational(0)));
    for (int k = 1; k <= n; ++k) {
        std::vector<RatVec> next(n, RatVec(n, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (M[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += M[i][l] * Mk[l][j];
            }
        for (int i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        Rational tr(0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) tr += M[i][l] * next[l][i];
        c[n - k] = -tr / k;
        Mk = std::move(next);
    }
    IntPoly poly = primitive_part(RatPoly::from_rationals(c).numerator());
    if (!is_squarefree(poly)) throw NotPrimitiveElement(poly);
    return poly;
}

// ---------------------------------------------------------------- printing

std::string to_string(const IntPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        if (f[k] == 0) continue;
        append_term(os, f[k], static_cast<std::size_t>(k), var, first);
        first = false;
    }
    return os.str();
}

std::string to_string(const RatPoly& f, char var) {
    if (f.denominator() == 1) return to_string(f.numerator(), var);
    return "(" + to_string(f.numerator(), var) + ")/" + f.denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const RatPoly& f) { return os << to_string(f); }

}  // namespace nfiso
