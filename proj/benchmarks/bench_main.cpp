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
#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "nfiso/driver.hpp"
#include "nfiso/parse.hpp"

using namespace nfiso;

namespace {

IntPoly fixture(const std::string& name) {
    std::ifstream in(std::string(NFISO_FIXTURES_DIR) + "/" + name);
    std::stringstream s;
    s << in.rdbuf();
    return parse_poly(s.str());
}

IntMatrix random_matrix(std::size_t n, long height, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-height, height);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

// x^n + x + 3 style family with one automorphism for most n.
IntPoly trinomial(int n) {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
    c[0] = 3;
    c[1] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

void BM_LllReduce(benchmark::State& state) {
    const IntMatrix A = random_matrix(static_cast<std::size_t>(state.range(0)), 1L << 20, 7);
    LllStats stats;
    for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(A, &stats));
    state.counters["swaps/call"] = static_cast<double>(stats.swaps) / static_cast<double>(stats.calls);
}
BENCHMARK(BM_LllReduce)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Ddf(benchmark::State& state) {
    const IntPoly f = fixture("f1.txt");
    const Integer p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ddf(f, p));
}
BENCHMARK(BM_Ddf)->Arg(7)->Arg(101)->Arg(10007)->Unit(benchmark::kMillisecond);

void BM_HenselLift(benchmark::State& state) {
    const IntPoly f = fixture("f1.txt");
    const auto dd = ddf(f, Integer(47));
    for (auto _ : state) benchmark::DoNotOptimize(hensel_lift_factors(f, dd, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_HenselLift)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_FindIsomorphism(benchmark::State& state) {
    const IntPoly f = trinomial(static_cast<int>(state.range(0)));
    const IntPoly g = resultant_minpoly(f, RatPoly(IntPoly{1, 1, 0, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(f, g));
}
BENCHMARK(BM_FindIsomorphism)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_Method2Baseline(benchmark::State& state) {
    const IntPoly f = trinomial(static_cast<int>(state.range(0)));
    const IntPoly g = resultant_minpoly(f, RatPoly(IntPoly{1, 1, 0, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(method2_baseline(f, g));
}
BENCHMARK(BM_Method2Baseline)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_Degree14(benchmark::State& state) {
    const IntPoly f = fixture("f14.txt");
    for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(f, f));
}
BENCHMARK(BM_Degree14)->Unit(benchmark::kMillisecond);

void BM_Degree25(benchmark::State& state) {
    const IntPoly f1 = fixture("f1.txt"), f2 = fixture("f2.txt");
    for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(f1, f2));
}
BENCHMARK(BM_Degree25)->Iterations(1)->Unit(benchmark::kSecond);

}  // namespace

BENCHMARK_MAIN();
