#include <benchmark/benchmark.h>

#include <tempspan/tempspan.hpp>

using namespace tempspan;

namespace {

TemporalBiClique instance(int family, Index n) {
    switch (family) {
        case 0: return ringshift(n);
        case 1: return smsmbg(n, n).graph;
        default: return random_biclique(n, n, 1);
    }
}

constexpr const char* family_names[] = {"ringshift", "smsmbg", "random"};

void args_families_sizes(benchmark::internal::Benchmark* b) {
    for (int family = 0; family < 3; ++family)
        for (Index n : {4, 16, 64}) b->Args({family, n});
    b->ArgNames({"family", "n"});
}

void note_result(benchmark::State& state, int family, const AlgoReport& r) {
    state.SetLabel(family_names[family]);
    state.counters["size"] = static_cast<double>(r.size);
    if (r.bound_claimed) state.counters["bound"] = static_cast<double>(*r.bound_claimed);
}

void bm_nlogn(benchmark::State& state) {
    const int family = static_cast<int>(state.range(0));
    const TemporalBiClique g = instance(family, static_cast<Index>(state.range(1)));
    AlgoReport r;
    for (auto _ : state) {
        r = bispanner_nlogn(g);
        benchmark::DoNotOptimize(r.size);
    }
    note_result(state, family, r);
}
BENCHMARK(bm_nlogn)->Apply(args_families_sizes);

void bm_pivot(benchmark::State& state) {
    const int family = static_cast<int>(state.range(0));
    const TemporalBiClique g = instance(family, static_cast<Index>(state.range(1)));
    AlgoReport r;
    for (auto _ : state) {
        r = bispanner_pivot(g);
        benchmark::DoNotOptimize(r.size);
    }
    note_result(state, family, r);
}
BENCHMARK(bm_pivot)->Apply(args_families_sizes);

void bm_reverted(benchmark::State& state) {
    const int family = static_cast<int>(state.range(0));
    const TemporalBiClique g = instance(family, static_cast<Index>(state.range(1)));
    AlgoReport r;
    for (auto _ : state) {
        r = bispanner_reverted_reduced(g);
        benchmark::DoNotOptimize(r.size);
    }
    note_result(state, family, r);
}
BENCHMARK(bm_reverted)->Apply(args_families_sizes);

void bm_portfolio(benchmark::State& state) {
    const int family = static_cast<int>(state.range(0));
    const TemporalBiClique g = instance(family, static_cast<Index>(state.range(1)));
    AlgoReport r;
    for (auto _ : state) {
        r = bispanner_portfolio(g);
        benchmark::DoNotOptimize(r.size);
    }
    note_result(state, family, r);
}
BENCHMARK(bm_portfolio)->Apply(args_families_sizes);

void bm_clique(benchmark::State& state) {
    const TemporalClique c = random_clique(static_cast<Index>(state.range(0)), 1);
    AlgoReport r;
    for (auto _ : state) {
        r = clique_spanner(c);
        benchmark::DoNotOptimize(r.size);
    }
    state.counters["size"] = static_cast<double>(r.size);
}
BENCHMARK(bm_clique)->Arg(8)->Arg(32)->Arg(64)->ArgName("n");

void bm_verify(benchmark::State& state) {
    const TemporalBiClique g = ringshift(static_cast<Index>(state.range(0)));
    const Spanner s = bispanner_reverted_best(g).spanner;
    for (auto _ : state) {
        VerificationReport rep = verify_bispanner(g, s);
        benchmark::DoNotOptimize(rep.ok);
    }
}
BENCHMARK(bm_verify)->Arg(16)->Arg(64)->Arg(256)->ArgName("n");

void bm_pivot_profile(benchmark::State& state) {
    const TemporalBiClique g = smsmbg(static_cast<Index>(state.range(0)),
                                      static_cast<Index>(state.range(0))).graph;
    for (auto _ : state) {
        PivotProfile p = pivot_profile(g);
        benchmark::DoNotOptimize(p.max_size);
    }
}
BENCHMARK(bm_pivot_profile)->Arg(4)->Arg(6)->Arg(8)->ArgName("mk");

void bm_oracle(benchmark::State& state) {
    const TemporalBiClique g = random_biclique(4, static_cast<Index>(state.range(0)), 1);
    for (auto _ : state) {
        Spanner s = min_bispanner_bruteforce(g, true);
        benchmark::DoNotOptimize(s.size());
    }
}
BENCHMARK(bm_oracle)->Arg(3)->Arg(4)->Arg(5)->ArgName("nb");

}  // namespace

BENCHMARK_MAIN();
