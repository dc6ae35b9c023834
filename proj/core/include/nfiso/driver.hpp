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
#ifndef NFISO_DRIVER_HPP
#define NFISO_DRIVER_HPP

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nfiso/lattice.hpp"
#include "nfiso/modpoly.hpp"
#include "nfiso/polyz.hpp"
#include "nfiso/subtrace.hpp"

namespace nfiso {

/// Where a lattice snapshot handed to IsoConfig::on_lattice was taken.
enum class LatticeStage { PreProcessing, PerRoot };

struct IsoConfig {
    /// Prime search starts after this value.
    Integer start_prime{3};
    /// Consecutive-call count of primes where f has a single distinct degree
    /// before the pair is treated as Galois.
    unsigned galois_threshold = 25;
    /// Primes whose sub-traces add nothing before pre-processing gives up.
    unsigned uninformative_threshold = 10;
    /// Scale applied to the sub-trace columns until they vanish.
    Integer rescale{"100000000000000000000"};
    /// Precision doublings per root before giving up.
    unsigned max_doublings = 8;
    /// Good primes tried when looking for an irreducibility certificate.
    unsigned certificate_primes = 40;
    /// Run the per-root reductions concurrently.
    bool parallel_roots = false;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Progress messages, one line each.
    std::function<void(const std::string&)> log;
    /// Called with C after every reduction; used to audit the lattice invariant.
    std::function<void(const IntMatrix&, LatticeStage)> on_lattice;
};

class Timeout : public Error {
  public:
    Timeout() : Error("time limit exceeded") {}
};

/// Output of a successful prime search: f and g have matching distinct-degree
/// patterns at p and both factorizations are lifted to p^a.
struct PrimeData {
    Integer p;
    unsigned a = 1;
    Integer pa;
    std::vector<FactorPair> pairs;
    unsigned deg_F1 = 0;

    std::size_t m() const noexcept { return pairs.size(); }
};

/// Every good prime tried gave f a single distinct degree.
struct GaloisSuspect {
    Integer last_prime;
};

/// f and g factor differently at p, which rules out an isomorphism.
struct PatternMismatch {
    Integer p;
    std::vector<std::pair<unsigned, unsigned>> pattern_f, pattern_g;
};

using PrimeSearch = std::variant<PrimeData, GaloisSuspect, PatternMismatch>;

/// Smallest a >= 1 with p^a >= b^(e/10) * 2^(e/4).
unsigned hensel_precision(const Integer& p, const Rational& b, std::size_t e);

/// Tries primes after bp, skipping bad ones, until f has more than one
/// distinct degree; compares with g's pattern and lifts both to p^a.
PrimeSearch find_suitable_prime(const IntPoly& f, const IntPoly& g, const Integer& bp, const Rational& b,
                                std::size_t e, const IsoConfig& cfg = {});

/// Candidate isomorphism beta -> h(alpha). `numerator` holds g_n * vec(h),
/// the power-basis coordinates of g_n f'(alpha) h(alpha).
struct IsoCandidate {
    IntPoly numerator;
    Integer denominator_gn;
    RatPoly h;
};

struct LatticeState {
    IntMatrix C;
    BoundData bound;
    unsigned uninformative_counter = 0;
    bool galois_suspect = false;
};

enum class Verdict { NoIsomorphism, Isomorphisms, Undecided };

struct IsoResult {
    Verdict verdict = Verdict::Undecided;
    std::vector<IsoCandidate> isomorphisms;
    /// Present when pre-processing stops without a verdict.
    std::optional<LatticeState> lattice;

    /// Rows of C when pre-processing finished.
    std::size_t preprocessing_dim = 0;
    bool decided_by_preprocessing = false;
    std::vector<Integer> primes_used;
    /// Prime used for the root-by-root search, if one ran.
    std::optional<Integer> root_prime;
    LllStats preprocessing_lll;
    LllStats per_root_lll;
    bool f_certified_irreducible = false;
    bool g_certified_irreducible = false;
    std::vector<std::string> notes;

    bool isomorphic() const noexcept { return verdict == Verdict::Isomorphisms; }
};

/// Exact check that g(h(x)) = 0 mod f(x) over Q.
bool verify_isomorphism(const IntPoly& f, const IntPoly& g, const RatPoly& h);
bool verify_isomorphism(const IntPoly& f, const IntPoly& g, const IsoCandidate& cand);

/// g_n * vec(h): coordinates of g_n f'(alpha) h(alpha) in the power basis.
RatPoly iso_vector(const IntPoly& f, const IntPoly& g, const RatPoly& h);
/// The lattice vector (g_n vec(h), g_n); throws Error if it is not integral.
IntVector lattice_target(const IntPoly& f, const IntPoly& g, const RatPoly& h);

/// Builds the candidate from a lattice row (g_n vec(h) * k, g_n * k); nullopt
/// if the row cannot encode an isomorphism.
std::optional<IsoCandidate> candidate_from_row(const IntPoly& f, const IntPoly& g, const IntVector& row);

/// Shrinks the lattice of candidate vectors with sub-trace information only.
IsoResult pre_processing(const IntPoly& f, const IntPoly& g, const IsoConfig& cfg = {});

/// All isomorphisms Q[x]/(g) -> Q[x]/(f): pre-processing, then per-root
/// reductions started from the pre-processed lattice.
IsoResult find_isomorphism(const IntPoly& f, const IntPoly& g, const IsoConfig& cfg = {});

/// Same contract as find_isomorphism, starting every root from the identity
/// lattice. Kept for differential testing and benchmarks.
IsoResult method2_baseline(const IntPoly& f, const IntPoly& g, const IsoConfig& cfg = {});

/// Proves f irreducible over Q from the factor degrees of f modulo the first
/// `tries` good primes; false means no proof was found.
bool irreducibility_certificate(const IntPoly& f, unsigned tries);

}  // namespace nfiso

#endif  // NFISO_DRIVER_HPP
