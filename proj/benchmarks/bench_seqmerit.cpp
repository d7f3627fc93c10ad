#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "seqmerit/autocorr.hpp"
#include "seqmerit/designs.hpp"
#include "seqmerit/families.hpp"
#include "seqmerit/quadrature.hpp"
#include "seqmerit/search.hpp"
#include "seqmerit/sequence.hpp"

using namespace seqmerit;

namespace {

Sequence random_binary(int n)
{
    std::mt19937 rng(static_cast<unsigned>(n) * 2654435761u);
    std::vector<int> signs(static_cast<std::size_t>(n));
    std::bernoulli_distribution coin;
    for (auto& s : signs) {
        s = coin(rng) ? 1 : -1;
    }
    return Sequence::binary(std::move(signs));
}

void bm_autocorr_direct(benchmark::State& state)
{
    const auto s = random_binary(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(aperiodic_autocorrelation(s));
    }
}

void bm_autocorr_fft(benchmark::State& state)
{
    const auto s = random_binary(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(aperiodic_autocorrelation_fft(s));
    }
}

void bm_l4_exact_integral(benchmark::State& state)
{
    const auto s = random_binary(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_l4_integral(s));
    }
}

void bm_l4_qmc(benchmark::State& state)
{
    const auto s = random_binary(64);
    const auto nodes = NodeSet::golden_ratio(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qmc_l4_integral(s, nodes).value);
    }
}

void bm_enumerate_bounded(benchmark::State& state)
{
    SearchSpec spec;
    spec.n = static_cast<int>(state.range(0));
    spec.c = 1.0;
    spec.mode = SearchMode::Count;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_bounded(spec).count);
    }
}

void bm_merit_records(benchmark::State& state)
{
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(merit_records(n_max));
    }
}

void bm_hadamard_scan(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hadamard_scan(n).perfect_rows.size());
    }
}

BENCHMARK(bm_autocorr_direct)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(bm_autocorr_fft)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(bm_l4_exact_integral)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(bm_l4_qmc)->Arg(1000)->Arg(10000);
BENCHMARK(bm_enumerate_bounded)->Arg(13)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_merit_records)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_hadamard_scan)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
