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
#include "nfiso/driver.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace nfiso {

namespace {

Integer next_prime(const Integer& p) {
    Integer q;
    mpz_nextprime(q.get_mpz_t(), p.get_mpz_t());
    return q;
}

bool divides(const Integer& p, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

void check_deadline(const IsoConfig& cfg) {
    if (cfg.deadline && std::chrono::steady_clock::now() > *cfg.deadline) throw Timeout();
}

void log(const IsoConfig& cfg, const std::string& msg) {
    if (cfg.log) cfg.log(msg);
}

std::string pattern_string(const std::vector<std::pair<unsigned, unsigned>>& pat) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < pat.size(); ++i) {
        if (i) os << ", ";
        os << "d=" << pat[i].first << ":" << pat[i].second;
    }
    os << ']';
    return os.str();
}

// f and g with their discriminants, so prime searches do not recompute them.
struct Pair {
    const IntPoly& f;
    const IntPoly& g;
    Integer disc_f, disc_g;

    Pair(const IntPoly& f_, const IntPoly& g_) : f(f_), g(g_), disc_f(discriminant(f_)), disc_g(discriminant(g_)) {}

    bool good(const Integer& p) const {
        return !divides(p, f.leading()) && !divides(p, disc_f) && !divides(p, g.leading()) && !divides(p, disc_g);
    }
};

std::vector<FactorPair> lift_pairs(const Pair& pr, const DistinctDegreeFactorization& df,
                                   const DistinctDegreeFactorization& dg, unsigned a) {
    const auto lf = hensel_lift_factors(pr.f, df, a);
    const auto lg = hensel_lift_factors(pr.g, dg, a);
    std::vector<FactorPair> pairs;
    for (std::size_t i = 0; i < lf.factors.size(); ++i)
        pairs.push_back({lf.factors[i].degree, lf.factors[i].factor, lg.factors[i].factor});
    return pairs;
}

PrimeData make_prime_data(const Pair& pr, const Integer& p, const DistinctDegreeFactorization& df,
                          const DistinctDegreeFactorization& dg, unsigned a) {
    PrimeData pd;
    pd.p = p;
    pd.a = a;
    pd.pa = Modulus(p, a).value();
    pd.pairs = lift_pairs(pr, df, dg, a);
    pd.deg_F1 = df.linear_degree();
    return pd;
}

PrimeSearch suitable_prime(const Pair& pr, const Integer& bp, const Rational& b, std::size_t e,
                           const IsoConfig& cfg) {
    Integer p = bp;
    unsigned counter = 0;
    while (true) {
        check_deadline(cfg);
        p = next_prime(p);
        if (!pr.good(p)) continue;
        DistinctDegreeFactorization df = ddf(pr.f, p);
        if (df.size() == 1) {
            ++counter;
            if (counter >= cfg.galois_threshold) {
                log(cfg, "prime search: " + std::to_string(counter) + " primes with one distinct degree; appears Galois");
                return GaloisSuspect{p};
            }
            continue;
        }
        DistinctDegreeFactorization dg = ddf(pr.g, p);
        if (df.pattern() != dg.pattern()) return PatternMismatch{p, df.pattern(), dg.pattern()};
        const unsigned a = hensel_precision(p, b, e);
        return make_prime_data(pr, p, df, dg, a);
    }
}

// Like suitable_prime but accepts a single distinct degree; only needs
// deg F_1 > 0. Used when no stored prime has linear factors.
std::variant<PrimeData, PatternMismatch> root_prime(const Pair& pr, const Integer& bp, const Rational& b,
                                                    std::size_t e, const IsoConfig& cfg) {
    Integer p = bp;
    while (true) {
        check_deadline(cfg);
        p = next_prime(p);
        if (!pr.good(p)) continue;
        DistinctDegreeFactorization df = ddf(pr.f, p);
        DistinctDegreeFactorization dg = ddf(pr.g, p);
        if (df.pattern() != dg.pattern()) return PatternMismatch{p, df.pattern(), dg.pattern()};
        if (df.linear_degree() == 0) continue;
        const unsigned a = hensel_precision(p, b, e);
        return make_prime_data(pr, p, df, dg, a);
    }
}

struct Reduction {
    IntMatrix C;
    bool informative = false;
};

// Adds the columns T (taken mod P) as constraints on the row space of C:
// reduces [[C, CT], [0, P I]] with removals, then scales the trailing block
// until it vanishes.
Reduction reduce_with_columns(const IntMatrix& C, const IntMatrix& T, const Modulus& mod, const Integer& bound,
                              const IsoConfig& cfg, LllStats& stats) {
    const std::size_t e = C.rows(), w = C.cols(), m = T.cols();
    IntMatrix CT = C * T;
    bool zero = true;
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            CT(i, j) = mod.symmetric(CT(i, j));
            if (CT(i, j) != 0) zero = false;
        }
    if (zero) return {C, false};

    IntMatrix A(e + m, w + m);
    for (std::size_t i = 0; i < e; ++i) {
        for (std::size_t j = 0; j < w; ++j) A(i, j) = C(i, j);
        for (std::size_t j = 0; j < m; ++j) A(i, w + j) = CT(i, j);
    }
    for (std::size_t j = 0; j < m; ++j) A(e + j, w + j) = mod.value();

    const Rational b(bound);
    IntMatrix L = lll_with_removals(A, b, &stats);
    while (true) {
        check_deadline(cfg);
        IntMatrix B = L.columns(w, m);
        if (B.is_zero()) break;
        for (std::size_t i = 0; i < L.rows(); ++i)
            for (std::size_t j = 0; j < m; ++j) L(i, w + j) *= cfg.rescale;
        L = lll_with_removals(L, b, &stats);
    }
    return {L.columns(0, w), true};
}

std::optional<IsoCandidate> verified_candidate(const IntPoly& f, const IntPoly& g, const IntVector& row) {
    auto cand = candidate_from_row(f, g, row);
    if (cand && verify_isomorphism(f, g, cand->h)) return cand;
    return std::nullopt;
}

// Shared state of one pre-processing run; FindIsomorphism continues from it.
struct Session {
    const IntPoly& f;
    const IntPoly& g;
    const IsoConfig& cfg;
    Pair pair;
    BoundData bound;
    IntMatrix C;
    Integer p;
    std::vector<PrimeData> stored;
    IsoResult result;

    Session(const IntPoly& f_, const IntPoly& g_, const IsoConfig& cfg_)
        : f(f_), g(g_), cfg(cfg_), pair(f_, g_), bound(iso_vector_bound(f_, g_)),
          C(IntMatrix::identity(static_cast<std::size_t>(f_.degree()) + 1)), p(cfg_.start_prime) {}
};

void certify_inputs(const IntPoly& f, const IntPoly& g, const IsoConfig& cfg, IsoResult& res) {
    res.f_certified_irreducible = irreducibility_certificate(f, cfg.certificate_primes);
    res.g_certified_irreducible = irreducibility_certificate(g, cfg.certificate_primes);
    if (!res.f_certified_irreducible)
        res.notes.push_back("warning: no irreducibility certificate for f; irreducibility is assumed");
    if (!res.g_certified_irreducible)
        res.notes.push_back("warning: no irreducibility certificate for g; irreducibility is assumed");
}

bool validate_inputs(const IntPoly& f, const IntPoly& g, IsoResult& res) {
    if (f.degree() < 1 || g.degree() < 1) throw Error("polynomials must have positive degree");
    if (f.degree() != g.degree()) {
        res.verdict = Verdict::NoIsomorphism;
        res.decided_by_preprocessing = true;
        res.notes.push_back("degrees differ: " + std::to_string(f.degree()) + " vs " + std::to_string(g.degree()));
        return false;
    }
    if (!is_squarefree(f) || !is_squarefree(g)) throw Error("input polynomials must be squarefree (irreducible)");
    return true;
}

void run_preprocessing(Session& s) {
    const std::size_t n = static_cast<std::size_t>(s.f.degree());
    IsoResult& res = s.result;
    unsigned uninformative = 0;
    log(s.cfg, "pre-processing: n = " + std::to_string(n) + ", b_ext bits = " +
                   std::to_string(mpz_sizeinbase(s.bound.b_ext.get_mpz_t(), 2)));

    auto finish_undecided = [&](bool galois) {
        res.verdict = Verdict::Undecided;
        res.preprocessing_dim = s.C.rows();
        res.lattice = LatticeState{s.C, s.bound, uninformative, galois};
    };

    while (true) {
        check_deadline(s.cfg);
        PrimeSearch found = suitable_prime(s.pair, s.p, s.bound.b, s.C.rows(), s.cfg);
        if (auto* gs = std::get_if<GaloisSuspect>(&found)) {
            s.p = gs->last_prime;
            finish_undecided(true);
            res.notes.push_back("prime search suggests a Galois extension");
            return;
        }
        if (auto* pm = std::get_if<PatternMismatch>(&found)) {
            res.verdict = Verdict::NoIsomorphism;
            res.decided_by_preprocessing = true;
            res.preprocessing_dim = s.C.rows();
            res.primes_used.push_back(pm->p);
            res.notes.push_back("factorization patterns differ at p = " + pm->p.get_str() + ": " +
                                pattern_string(pm->pattern_f) + " vs " + pattern_string(pm->pattern_g));
            return;
        }
        PrimeData pd = std::move(std::get<PrimeData>(found));
        s.p = pd.p;
        res.primes_used.push_back(pd.p);

        const BasisImage basis = base_polynomials(s.f, pd.p, pd.a);
        const SubTraceMatrix st = build_T(basis, pd.pairs);
        if (pd.deg_F1 > 0) s.stored.push_back(pd);

        Reduction red = reduce_with_columns(s.C, st.T, st.modulus, s.bound.b_ext, s.cfg, res.preprocessing_lll);
        if (!red.informative) {
            ++uninformative;
            log(s.cfg, "p = " + pd.p.get_str() + ": uninformative (" + std::to_string(uninformative) + ")");
            if (uninformative >= s.cfg.uninformative_threshold) {
                finish_undecided(false);
                return;
            }
            continue;
        }
        s.C = std::move(red.C);
        if (s.cfg.on_lattice) s.cfg.on_lattice(s.C, LatticeStage::PreProcessing);
        log(s.cfg, "p = " + pd.p.get_str() + ", a = " + std::to_string(pd.a) + ", m = " + std::to_string(pd.m()) +
                       ": dim C = " + std::to_string(s.C.rows()));

        if (s.C.rows() == 0) {
            res.verdict = Verdict::NoIsomorphism;
            res.decided_by_preprocessing = true;
            res.preprocessing_dim = 0;
            return;
        }
        if (s.C.rows() == 1) {
            res.preprocessing_dim = 1;
            res.decided_by_preprocessing = true;
            if (auto cand = verified_candidate(s.f, s.g, s.C.row(0))) {
                res.verdict = Verdict::Isomorphisms;
                res.isomorphisms.push_back(std::move(*cand));
            } else {
                res.verdict = Verdict::NoIsomorphism;
            }
            return;
        }
    }
}

struct RootOutcome {
    std::optional<IsoCandidate> iso;
    LllStats stats;
};

// One root pairing alpha_j -> beta: adds the evaluation constraint to C,
// doubling the p-adic precision until the lattice has at most one row.
RootOutcome process_root(const IntPoly& f, const IntPoly& g, IntMatrix C, const Integer& p, unsigned a,
                         const Integer& alpha_p, const Integer& beta_p, const Integer& bound, const IsoConfig& cfg) {
    RootOutcome out;
    Integer alpha = lift_root(f, alpha_p, p, 1, a);
    Integer beta = lift_root(g, beta_p, p, 1, a);
    for (unsigned doubling = 0; doubling <= cfg.max_doublings; ++doubling) {
        check_deadline(cfg);
        const BasisImage basis = base_polynomials(f, p, a);
        const IntMatrix T = root_column(basis, alpha, beta);
        Reduction red = reduce_with_columns(C, T, basis.modulus, bound, cfg, out.stats);
        C = std::move(red.C);
        if (cfg.on_lattice) cfg.on_lattice(C, LatticeStage::PerRoot);
        if (C.rows() == 0) return out;
        if (C.rows() == 1) {
            out.iso = verified_candidate(f, g, C.row(0));
            return out;
        }
        alpha = lift_root(f, alpha, p, a, 2 * a);
        beta = lift_root(g, beta, p, a, 2 * a);
        a *= 2;
    }
    throw Error("per-root reduction did not reach dimension <= 1 after " + std::to_string(cfg.max_doublings) +
                " precision doublings");
}

void run_roots(const IntPoly& f, const IntPoly& g, const IntMatrix& C, const PrimeData& pd, const Integer& bound,
               const IsoConfig& cfg, IsoResult& res) {
    const FactorPair* lin = nullptr;
    for (const auto& pr : pd.pairs)
        if (pr.degree == 1) lin = &pr;
    if (!lin) throw Error("root search prime has no linear factors");
    const Modulus pm(pd.p);
    const std::vector<Integer> alphas = roots_mod_p(lin->F.reduce_to(pm));
    const std::vector<Integer> betas = roots_mod_p(lin->G.reduce_to(pm));
    if (alphas.empty() || alphas.size() != betas.size()) throw Error("root search: root counts of f and g differ");
    res.root_prime = pd.p;
    if (std::find(res.primes_used.begin(), res.primes_used.end(), pd.p) == res.primes_used.end())
        res.primes_used.push_back(pd.p);
    log(cfg, "root search: p = " + pd.p.get_str() + ", a = " + std::to_string(pd.a) + ", " +
                 std::to_string(alphas.size()) + " roots, dim C = " + std::to_string(C.rows()));

    std::vector<RootOutcome> outcomes(alphas.size());
    if (cfg.parallel_roots && alphas.size() > 1) {
        std::vector<std::future<RootOutcome>> jobs;
        for (const auto& alpha : alphas)
            jobs.push_back(std::async(std::launch::async, process_root, std::cref(f), std::cref(g), C, pd.p, pd.a,
                                      alpha, betas.front(), bound, std::cref(cfg)));
        for (std::size_t j = 0; j < jobs.size(); ++j) outcomes[j] = jobs[j].get();
    } else {
        for (std::size_t j = 0; j < alphas.size(); ++j)
            outcomes[j] = process_root(f, g, C, pd.p, pd.a, alphas[j], betas.front(), bound, cfg);
    }
    for (auto& o : outcomes) {
        res.per_root_lll += o.stats;
        if (!o.iso) continue;
        const bool dup = std::any_of(res.isomorphisms.begin(), res.isomorphisms.end(),
                                     [&](const IsoCandidate& c) { return c.h == o.iso->h; });
        if (!dup) res.isomorphisms.push_back(std::move(*o.iso));
    }
    res.verdict = res.isomorphisms.empty() ? Verdict::NoIsomorphism : Verdict::Isomorphisms;
}

// A prime with deg F_1 > 0 for the root-by-root stage; nullopt if the search
// proved there is no isomorphism (recorded in res).
std::optional<PrimeData> choose_root_prime(Session& s) {
    if (!s.stored.empty()) {
        auto best = std::min_element(s.stored.begin(), s.stored.end(),
                                     [](const PrimeData& a, const PrimeData& b) { return a.deg_F1 < b.deg_F1; });
        return *best;
    }
    auto found = root_prime(s.pair, s.cfg.start_prime, s.bound.b, s.C.rows(), s.cfg);
    if (auto* pm = std::get_if<PatternMismatch>(&found)) {
        s.result.verdict = Verdict::NoIsomorphism;
        s.result.primes_used.push_back(pm->p);
        s.result.notes.push_back("factorization patterns differ at p = " + pm->p.get_str() + ": " +
                                 pattern_string(pm->pattern_f) + " vs " + pattern_string(pm->pattern_g));
        return std::nullopt;
    }
    PrimeData pd = std::move(std::get<PrimeData>(found));
    s.p = pd.p;
    return pd;
}

}  // namespace

// ---------------------------------------------------------------- public API

unsigned hensel_precision(const Integer& p, const Rational& b, std::size_t e) {
    if (p < 2) throw Error("hensel_precision: invalid prime");
    // p^(40a) * den^(4e) >= num^(4e) * 2^(10e)
    const unsigned long ee = static_cast<unsigned long>(e);
    Integer target, scale, step;
    mpz_pow_ui(target.get_mpz_t(), b.get_num_mpz_t(), 4 * ee);
    target <<= static_cast<mp_bitcnt_t>(10 * ee);
    mpz_pow_ui(scale.get_mpz_t(), b.get_den_mpz_t(), 4 * ee);
    mpz_pow_ui(step.get_mpz_t(), p.get_mpz_t(), 40);
    unsigned a = 1;
    scale *= step;
    while (scale < target) {
        scale *= step;
        ++a;
    }
    return a;
}

PrimeSearch find_suitable_prime(const IntPoly& f, const IntPoly& g, const Integer& bp, const Rational& b,
                                std::size_t e, const IsoConfig& cfg) {
    if (f.degree() != g.degree()) throw Error("find_suitable_prime: degree mismatch");
    return suitable_prime(Pair(f, g), bp, b, e, cfg);
}

RatPoly iso_vector(const IntPoly& f, const IntPoly& g, const RatPoly& h) {
    RatPoly v = rem(RatPoly(derivative(f)) * h, RatPoly(f));
    return v * Rational(g.leading());
}

IntVector lattice_target(const IntPoly& f, const IntPoly& g, const RatPoly& h) {
    const RatPoly v = iso_vector(f, g, h);
    if (v.denominator() != 1) throw Error("lattice_target: g_n * vec(h) is not integral");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    IntVector out(n + 1, Integer(0));
    for (std::size_t i = 0; i < n; ++i) out[i] = v.numerator()[i];
    out[n] = g.leading();
    return out;
}

std::optional<IsoCandidate> candidate_from_row(const IntPoly& f, const IntPoly& g, const IntVector& row) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    if (row.size() != n + 1) throw Error("candidate_from_row: row length must be deg f + 1");
    const Integer& v = row[n];
    if (v == 0) return std::nullopt;
    const Integer& gn = g.leading();
    // Row = k * (g_n vec(h), g_n) with k = v / g_n, so g_n vec(h) = V * g_n / v.
    std::vector<Integer> num(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer t = row[i] * gn;
        if (!mpz_divisible_p(t.get_mpz_t(), v.get_mpz_t())) return std::nullopt;
        mpz_divexact(num[i].get_mpz_t(), t.get_mpz_t(), v.get_mpz_t());
    }
    IsoCandidate cand;
    cand.numerator = IntPoly(num);
    cand.denominator_gn = gn;
    const RatPoly fr(f);
    const RatPoly inv_df = inverse_mod(RatPoly(derivative(f)), fr);
    cand.h = rem(RatPoly(cand.numerator, gn) * inv_df, fr);
    return cand;
}

bool verify_isomorphism(const IntPoly& f, const IntPoly& g, const RatPoly& h) {
    if (f.degree() < 1) return false;
    if (h.degree() >= f.degree()) return verify_isomorphism(f, g, rem(h, RatPoly(f)));
    return compose_mod(g, h, RatPoly(f)).is_zero();
}

bool verify_isomorphism(const IntPoly& f, const IntPoly& g, const IsoCandidate& cand) {
    return verify_isomorphism(f, g, cand.h);
}

bool irreducibility_certificate(const IntPoly& f, unsigned tries) {
    const int n = f.degree();
    if (n == 1) return true;
    if (n < 1) return false;
    const Integer disc = discriminant(f);
    if (disc == 0) return false;
    // Degrees of possible factors over Q must be subset sums of the factor
    // degrees mod every good p; only 0 and n surviving proves irreducibility.
    std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
    Integer p(1);
    unsigned tried = 0;
    while (tried < tries) {
        p = next_prime(p);
        if (divides(p, f.leading()) || divides(p, disc)) continue;
        ++tried;
        std::vector<bool> sums(possible.size(), false);
        sums[0] = true;
        for (const auto& [d, deg] : ddf(f, p).pattern())
            for (unsigned k = 0; k < deg / d; ++k)
                for (std::size_t s = sums.size(); s-- > d;)
                    if (sums[s - d]) sums[s] = true;
        bool only_trivial = true;
        for (std::size_t s = 1; s < possible.size() - 1; ++s) {
            possible[s] = possible[s] && sums[s];
            if (possible[s]) only_trivial = false;
        }
        if (only_trivial) return true;
    }
    return false;
}

IsoResult pre_processing(const IntPoly& f, const IntPoly& g, const IsoConfig& cfg) {
    IsoResult early;
    if (!validate_inputs(f, g, early)) return early;
    Session s(f, g, cfg);
    certify_inputs(f, g, cfg, s.result);
    run_preprocessing(s);
    return std::move(s.result);
}

IsoResult find_isomorphism(const IntPoly& f, const IntPoly& g, const IsoConfig& cfg) {
    IsoResult early;
    if (!validate_inputs(f, g, early)) return early;
    Session s(f, g, cfg);
    certify_inputs(f, g, cfg, s.result);
    run_preprocessing(s);
    if (s.result.verdict != Verdict::Undecided) return std::move(s.result);

    std::optional<PrimeData> pd = choose_root_prime(s);
    if (!pd) return std::move(s.result);
    run_roots(f, g, s.C, *pd, s.bound.b_ext, cfg, s.result);
    return std::move(s.result);
}

IsoResult method2_baseline(const IntPoly& f, const IntPoly& g, const IsoConfig& cfg) {
    IsoResult early;
    if (!validate_inputs(f, g, early)) return early;
    Session s(f, g, cfg);
    certify_inputs(f, g, cfg, s.result);
    s.result.preprocessing_dim = s.C.rows();
    std::optional<PrimeData> pd = choose_root_prime(s);
    if (!pd) return std::move(s.result);
    run_roots(f, g, s.C, *pd, s.bound.b_ext, cfg, s.result);
    return std::move(s.result);
}

}  // namespace nfiso
