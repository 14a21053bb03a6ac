#include <benchmark/benchmark.h>

#include "ntdiv/arith.hpp"
#include "ntdiv/search.hpp"

namespace arith = ntdiv::arith;
namespace search = ntdiv::search;

using arith::Integer;
using search::Sign;

namespace {

void BM_ModPowWord(benchmark::State& state) {
    const Integer base = 1234567;
    const Integer exp = 999999937;
    const Integer modulus = Integer(1) << 61;
    for (auto _ : state) benchmark::DoNotOptimize(arith::mod_pow(base, exp, modulus));
}
BENCHMARK(BM_ModPowWord);

void BM_ModPowWide(benchmark::State& state) {
    const Integer base = 97;
    const Integer exp = 100;
    const Integer modulus = arith::ipow(100, 100);
    for (auto _ : state) benchmark::DoNotOptimize(arith::mod_pow(base, exp, modulus));
}
BENCHMARK(BM_ModPowWide);

// The common case inside window searches: the word-sized screen rejects.
void BM_DividesScreenReject(benchmark::State& state) {
    const search::SignedPower q{87, 31, 9973, 10, Sign::plus};
    for (auto _ : state) benchmark::DoNotOptimize(search::divides_signed_power(q));
}
BENCHMARK(BM_DividesScreenReject);

// Divisible instance with an oversized modulus: screen passes, wide path runs.
void BM_DividesWideAccept(benchmark::State& state) {
    const search::SignedPower q{arith::ipow(3, 45) + 2, 2, 3, 46, Sign::minus};
    for (auto _ : state) benchmark::DoNotOptimize(search::divides_signed_power(q));
}
BENCHMARK(BM_DividesWideAccept);

void BM_RsetEnumerate(benchmark::State& state) {
    const auto n_max = static_cast<long long>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(search::rset_enumerate(2, 1, 2, Sign::plus, n_max));
    state.SetItemsProcessed(state.iterations() * n_max);
}
BENCHMARK(BM_RsetEnumerate)->Arg(1000)->Arg(10000);

void BM_VerifyCorollary(benchmark::State& state) {
    const auto bound = static_cast<long long>(state.range(0));
    search::SearchWindow w;
    w.m_max = bound;
    w.n_max = bound;
    for (auto _ : state) benchmark::DoNotOptimize(search::verify_corollary(w));
}
BENCHMARK(BM_VerifyCorollary)->Arg(30)->Arg(100);

void BM_VerifyTheoremPartI(benchmark::State& state) {
    const auto bound = static_cast<long long>(state.range(0));
    search::SearchWindow w;
    w.a_max = bound;
    w.n_max = 4 * bound;
    for (auto _ : state) benchmark::DoNotOptimize(search::verify_theorem1_part_i(w));
}
BENCHMARK(BM_VerifyTheoremPartI)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
