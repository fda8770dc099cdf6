#include <benchmark/benchmark.h>

#include "ola/mult.hpp"
#include "ola/order.hpp"
#include "ola/partition.hpp"

namespace {

using namespace ola;

void bm_kostka(benchmark::State& state) {
    long long n = state.range(0);
    Partition mu({n, n / 2 + 1, 1});
    CompositionVector content(static_cast<size_t>(n) + 2, 1);
    content[0] = n / 2;
    for (auto _ : state) {
        set_kostka_cache_limit(1);  // defeat the cache so work is real
        set_kostka_cache_limit(1 << 20);
        benchmark::DoNotOptimize(kostka(mu, content));
    }
}
BENCHMARK(bm_kostka)->Arg(6)->Arg(10)->Arg(14);

void bm_kl_full_s_n(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        KLContext ctx(n);
        Permutation w0 = longest_element(n);
        for (const Permutation& x : ctx.elements())
            benchmark::DoNotOptimize(ctx.kl_poly(x, w0).eval_one());
    }
}
BENCHMARK(bm_kl_full_s_n)->Arg(4)->Arg(5)->Arg(6);

void bm_stable_mult(benchmark::State& state) {
    Weight mu(LieFlavor::SL);
    mu.set(1, Rat(-2));
    mu.set(2, Rat(1));
    mu.set(3, Rat(1));
    mu.set(-1, Rat(1));
    mu.set(-2, Rat(-1));
    for (auto _ : state) {
        Int total = 0;
        for (const Weight& lam : fin_up_set(mu)) total += stable_mult(lam, mu);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_stable_mult);

void bm_standard_mult(benchmark::State& state) {
    Weight lam(LieFlavor::O);
    lam.set(1, Rat(2));
    lam.set(2, Rat(1));
    for (auto _ : state) {
        MultTable t = layer_mults(lam, 1);
        benchmark::DoNotOptimize(t.entries.size());
    }
}
BENCHMARK(bm_standard_mult);

}  // namespace

BENCHMARK_MAIN();
