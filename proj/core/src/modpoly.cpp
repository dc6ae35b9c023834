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
#include "nfiso/modpoly.hpp"

#include <algorithm>

namespace nfiso {

namespace {

const Integer kZero(0);

Integer ipow(const Integer& p, unsigned e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), e);
    return out;
}

void require_prime_field(const ModPoly& f, const char* what) {
    if (!f.modulus().is_prime()) throw Error(std::string(what) + " requires a prime modulus");
}

}  // namespace

// ---------------------------------------------------------------- Modulus

Modulus::Modulus(Integer p, unsigned exponent) : p_(std::move(p)), a_(exponent) {
    if (p_ < 2) throw Error("modulus prime must be >= 2");
    if (a_ == 0) throw Error("modulus exponent must be >= 1");
    m_ = ipow(p_, a_);
}

Integer Modulus::reduce(const Integer& x) const {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m_.get_mpz_t());
    return r;
}

Integer Modulus::symmetric(const Integer& x) const {
    Integer r = reduce(x);
    if (2 * r > m_) r -= m_;
    return r;
}

Integer Modulus::inverse(const Integer& x) const {
    Integer r;
    Integer y = reduce(x);
    if (mpz_invert(r.get_mpz_t(), y.get_mpz_t(), m_.get_mpz_t()) == 0)
        throw Error("residue " + y.get_str() + " is not invertible modulo " + m_.get_str());
    return r;
}

// ---------------------------------------------------------------- ModPoly

ModPoly::ModPoly(Modulus mod, std::vector<Integer> coeffs) : mod_(std::move(mod)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = mod_.reduce(c);
    normalize();
}

ModPoly::ModPoly(Modulus mod, std::initializer_list<long> coeffs) : mod_(std::move(mod)) {
    for (long c : coeffs) coeffs_.push_back(mod_.reduce(Integer(c)));
    normalize();
}

ModPoly::ModPoly(Modulus mod, const IntPoly& f)
    : ModPoly(std::move(mod), std::vector<Integer>(f.coeffs().begin(), f.coeffs().end())) {}

ModPoly ModPoly::x(const Modulus& mod) { return ModPoly(mod, {0, 1}); }

ModPoly ModPoly::constant(const Modulus& mod, const Integer& c) { return ModPoly(mod, std::vector<Integer>{c}); }

const Integer& ModPoly::operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const Integer& ModPoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void ModPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void ModPoly::require_same(const ModPoly& rhs) const {
    if (!(mod_ == rhs.mod_))
        throw Error("modulus mismatch: " + mod_.value().get_str() + " vs " + rhs.mod_.value().get_str());
}

ModPoly ModPoly::reduce_to(const Modulus& coarser) const {
    if (coarser.prime() != mod_.prime() || coarser.exponent() > mod_.exponent())
        throw Error("reduce_to: target modulus does not divide the current one");
    return ModPoly(coarser, coeffs_);
}

ModPoly ModPoly::monic() const {
    Integer inv = mod_.inverse(leading());
    ModPoly out = *this;
    return out *= inv;
}

ModPoly& ModPoly::operator+=(const ModPoly& rhs) {
    require_same(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
        if (coeffs_[i] >= mod_.value()) coeffs_[i] -= mod_.value();
    }
    normalize();
    return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& rhs) {
    require_same(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
        if (coeffs_[i] < 0) coeffs_[i] += mod_.value();
    }
    normalize();
    return *this;
}

ModPoly& ModPoly::operator*=(const ModPoly& rhs) {
    require_same(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
    for (auto& c : out) c = mod_.reduce(c);
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

ModPoly& ModPoly::operator*=(const Integer& c) {
    for (auto& x : coeffs_) x = mod_.reduce(x * c);
    normalize();
    return *this;
}

// ---------------------------------------------------------------- algorithms

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
    if (!(a.modulus() == b.modulus())) throw Error("divrem: modulus mismatch");
    if (b.is_zero()) throw Error("polynomial division by zero");
    const Modulus& mod = a.modulus();
    if (a.degree() < b.degree()) return {ModPoly(mod), a};
    const Integer inv = mod.inverse(b.leading());
    std::vector<Integer> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Integer> q(r.size() - db, Integer(0));
    Integer c;
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        c = mod.reduce(r[k] * inv);
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(r[k - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
            r[k - db + j] = mod.reduce(r[k - db + j]);
        }
    }
    r.resize(db);
    return {ModPoly(mod, std::move(q)), ModPoly(mod, std::move(r))};
}

ModPoly rem(const ModPoly& a, const ModPoly& b) { return divrem(a, b).second; }

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
    if (e < 0) throw Error("powmod: negative exponent");
    ModPoly result = rem(ModPoly::constant(base.modulus(), Integer(1)), m);
    ModPoly b = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(result * result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, m);
    }
    return result;
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
    require_prime_field(a, "gcd");
    ModPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        ModPoly r2 = rem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.is_zero() ? r0 : r0.monic();
}

ExtGcd ext_gcd(const ModPoly& a, const ModPoly& b) {
    require_prime_field(a, "ext_gcd");
    const Modulus& mod = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(mod, Integer(1)), s1(mod);
    ModPoly t0(mod), t1 = ModPoly::constant(mod, Integer(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        ModPoly s2 = s0 - q * s1;
        ModPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Integer inv = mod.inverse(r0.leading());
    return {r0 * inv, s0 * inv, t0 * inv};
}

Integer eval(const ModPoly& f, const Integer& x) {
    const Modulus& mod = f.modulus();
    Integer acc(0);
    for (int i = f.degree(); i >= 0; --i) acc = mod.reduce(acc * x + f[i]);
    return acc;
}

ModPoly derivative(const ModPoly& f) {
    std::vector<Integer> d;
    for (int i = 1; i <= f.degree(); ++i) d.push_back(f[i] * i);
    return ModPoly(f.modulus(), std::move(d));
}

// ---------------------------------------------------------------- DDF

std::vector<std::pair<unsigned, unsigned>> DistinctDegreeFactorization::pattern() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.emplace_back(f.degree, static_cast<unsigned>(f.factor.degree()));
    return out;
}

unsigned DistinctDegreeFactorization::linear_degree() const {
    for (const auto& f : factors)
        if (f.degree == 1) return static_cast<unsigned>(f.factor.degree());
    return 0;
}

DistinctDegreeFactorization ddf(const IntPoly& f, const Integer& p) {
    const Modulus mod(p);
    if (f.degree() < 1) throw Error("ddf: polynomial must have positive degree");
    if (mod.reduce(f.leading()) == 0) throw BadPrime("prime " + p.get_str() + " divides the leading coefficient");
    ModPoly F = ModPoly(mod, f).monic();
    if (gcd(F, derivative(F)).degree() > 0)
        throw BadPrime("polynomial is not squarefree modulo " + p.get_str());

    DistinctDegreeFactorization out{mod, {}};
    const ModPoly x = ModPoly::x(mod);
    ModPoly rest = F;
    ModPoly h = rem(x, rest);
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
        h = powmod(h, p, rest);
        ModPoly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.factors.push_back({d, g});
            rest = divrem(rest, g).first;
            h = rem(h, rest);
        }
    }
    if (rest.degree() > 0) out.factors.push_back({static_cast<unsigned>(rest.degree()), rest});
    return out;
}

namespace {

struct LiftedPair {
    ModPoly g, h;
};

// Quadratic Hensel lifting of target = g0 * h0 (all monic) from p to p^a,
// refreshing the Bezout cofactors at every level.
LiftedPair hensel_pair(const IntPoly& target, const ModPoly& g0, const ModPoly& h0, unsigned a) {
    const Modulus base = g0.modulus();
    ExtGcd eg = ext_gcd(g0, h0);
    if (eg.g.degree() != 0) throw BadPrime("Hensel lifting: factors are not coprime modulo " + base.prime().get_str());
    ModPoly g = g0, h = h0, s = eg.s, t = eg.t;
    unsigned k = 1;
    while (k < a) {
        const unsigned next = std::min(2 * k, a);
        const Modulus mod = base.with_exponent(next);
        auto up = [&](const ModPoly& u) { return ModPoly(mod, u.coeffs()); };
        g = up(g);
        h = up(h);
        s = up(s);
        t = up(t);
        const ModPoly T(mod, target);
        const ModPoly e = T - g * h;
        auto [q, r] = divrem(s * e, h);
        ModPoly g_new = g + t * e + q * g;
        ModPoly h_new = h + r;
        if (next < a) {
            const ModPoly one = ModPoly::constant(mod, Integer(1));
            const ModPoly b = s * g_new + t * h_new - one;
            auto [c, d] = divrem(s * b, h_new);
            s = s - d;
            t = t - t * b - c * g_new;
        }
        g = std::move(g_new);
        h = std::move(h_new);
        k = next;
    }
    return {g, h};
}

}  // namespace

DistinctDegreeFactorization hensel_lift_factors(const IntPoly& f, const DistinctDegreeFactorization& dd, unsigned a) {
    if (!dd.modulus.is_prime()) throw Error("hensel_lift_factors expects a factorization modulo a prime");
    if (a == 0) throw Error("hensel_lift_factors: precision must be >= 1");
    const Modulus target_mod = dd.modulus.with_exponent(a);
    DistinctDegreeFactorization out{target_mod, {}};
    if (dd.factors.empty()) return out;

    IntPoly target = ModPoly(target_mod, f).monic().lift();
    for (std::size_t i = 0; i + 1 < dd.factors.size(); ++i) {
        ModPoly rest = ModPoly::constant(dd.modulus, Integer(1));
        for (std::size_t j = i + 1; j < dd.factors.size(); ++j) rest *= dd.factors[j].factor;
        LiftedPair lp = hensel_pair(target, dd.factors[i].factor, rest, a);
        out.factors.push_back({dd.factors[i].degree, lp.g});
        target = lp.h.lift();
    }
    out.factors.push_back({dd.factors.back().degree, ModPoly(target_mod, target)});

    ModPoly prod = ModPoly::constant(target_mod, Integer(1));
    for (const auto& df : out.factors) prod *= df.factor;
    if (!(prod == ModPoly(target_mod, f).monic())) throw Error("Hensel lifting failed: product mismatch");
    return out;
}

// ---------------------------------------------------------------- roots

namespace {

void split_linear(const ModPoly& g, std::vector<Integer>& roots) {
    const Modulus& mod = g.modulus();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        ModPoly m = g.monic();
        roots.push_back(mod.reduce(-m[0]));
        return;
    }
    const Integer& p = mod.prime();
    if (p == 2) {
        for (long r : {0L, 1L})
            if (eval(g, Integer(r)) == 0) roots.emplace_back(r);
        return;
    }
    const Integer half = (p - 1) / 2;
    const ModPoly one = ModPoly::constant(mod, Integer(1));
    for (Integer delta = 1;; ++delta) {
        ModPoly shift(mod, std::vector<Integer>{delta, Integer(1)});
        ModPoly w = gcd(g, powmod(shift, half, g) - one);
        if (w.degree() > 0 && w.degree() < g.degree()) {
            split_linear(w, roots);
            split_linear(divrem(g, w).first, roots);
            return;
        }
        if (delta > p) throw Error("root splitting did not converge");
    }
}

}  // namespace

std::vector<Integer> roots_mod_p(const ModPoly& f) {
    require_prime_field(f, "roots_mod_p");
    std::vector<Integer> roots;
    if (f.degree() < 1) return roots;
    const Modulus& mod = f.modulus();
    ModPoly F = f.monic();
    const ModPoly x = ModPoly::x(mod);
    ModPoly g = gcd(F, powmod(x, mod.prime(), F) - x);
    if (eval(g, Integer(0)) == 0) {
        roots.emplace_back(0);
        g = divrem(g, x).first;
    }
    split_linear(g, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

Integer lift_root(const IntPoly& f, const Integer& root, const Integer& p, unsigned from, unsigned to) {
    const IntPoly df = derivative(f);
    Integer r = root;
    unsigned k = from;
    if (k == 0) throw Error("lift_root: starting precision must be >= 1");
    while (k < to) {
        const unsigned next = std::min(2 * k, to);
        const Modulus mod(p, next);
        r = mod.reduce(r - evaluate(f, r) * mod.inverse(evaluate(df, r)));
        k = next;
    }
    return Modulus(p, std::max(to, from)).reduce(r);
}

std::vector<Integer> lift_roots(const ModPoly& F, unsigned a) {
    if (a == 0 || a > F.modulus().exponent())
        throw Error("lift_roots: precision must be between 1 and the exponent of the modulus");
    const Modulus p_mod(F.modulus().prime());
    const ModPoly Fp = F.reduce_to(p_mod);
    if (gcd(Fp, derivative(Fp)).degree() > 0) throw BadPrime("lift_roots: repeated roots modulo p");
    std::vector<Integer> roots = roots_mod_p(Fp);
    if (static_cast<int>(roots.size()) != Fp.degree())
        throw Error("lift_roots: polynomial does not split into linear factors modulo p");
    const IntPoly lifted = F.lift();
    for (auto& r : roots) r = lift_root(lifted, r, p_mod.prime(), 1, a);
    return roots;
}

ModPoly inv_fprime(const IntPoly& f, const Integer& p, unsigned a) {
    const Modulus pm(p);
    if (pm.reduce(f.leading()) == 0) throw BadPrime("inv_fprime: prime divides the leading coefficient");
    const IntPoly df = derivative(f);
    ModPoly M = ModPoly(pm, f).monic();
    ExtGcd eg = ext_gcd(rem(ModPoly(pm, df), M), M);
    if (eg.g.degree() != 0) throw BadPrime("inv_fprime: gcd(f, f') != 1 modulo " + p.get_str());
    ModPoly u = rem(eg.s, M);
    unsigned k = 1;
    while (k < a) {
        const unsigned next = std::min(2 * k, a);
        const Modulus mod(p, next);
        const ModPoly Mk = ModPoly(mod, f).monic();
        const ModPoly D(mod, df);
        const ModPoly uk(mod, u.coeffs());
        const ModPoly two = ModPoly::constant(mod, Integer(2));
        u = rem(uk * rem(two - rem(D * uk, Mk), Mk), Mk);
        k = next;
    }
    const Modulus mod(p, a);
    const ModPoly Ma = ModPoly(mod, f).monic();
    if (!(rem(ModPoly(mod, df) * u, Ma) == ModPoly::constant(mod, Integer(1))))
        throw Error("inv_fprime: lifted inverse failed verification");
    return u;
}

std::vector<Integer> power_sums(const ModPoly& F, std::size_t k_max) {
    if (!F.is_monic()) throw Error("power_sums requires a monic polynomial");
    const Modulus& mod = F.modulus();
    const std::size_t e = static_cast<std::size_t>(F.degree());
    std::vector<Integer> P(k_max + 1, Integer(0));
    P[0] = mod.reduce(Integer(static_cast<unsigned long>(e)));
    for (std::size_t k = 1; k <= k_max; ++k) {
        Integer acc(0);
        const std::size_t top = std::min(k - 1, e);
        for (std::size_t j = 1; j <= top; ++j) mpz_addmul(acc.get_mpz_t(), F[e - j].get_mpz_t(), P[k - j].get_mpz_t());
        if (k <= e) acc += Integer(static_cast<unsigned long>(k)) * F[e - k];
        P[k] = mod.reduce(-acc);
    }
    return P;
}

}  // namespace nfiso
