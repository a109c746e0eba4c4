#include <benchmark/benchmark.h>

#include "rado/colorability.hpp"
#include "rado/equations.hpp"
#include "rado/params.hpp"
#include "rado/solutions.hpp"
#include "rado/structures.hpp"

using namespace rado;

namespace {

const LinearSystem& schur()
{
    static const LinearSystem s = parse_system("x+y-z=0");
    return s;
}

const LinearSystem& four()
{
    static const LinearSystem s = parse_system("x+y+z-w=0");
    return s;
}

Hypergraph sample(long long n, const Rational& p, std::uint64_t seed, bool symmetric)
{
    return build_hypergraph(schur(), symmetric ? schur() : four(), sample_set(n, p, seed));
}

// First seed giving a Rado sample, so minimisation has work to do.
Hypergraph rado_sample(long long n, const Rational& p, bool symmetric)
{
    for (std::uint64_t seed = 1;; ++seed) {
        Hypergraph g = sample(n, p, seed, symmetric);
        if (is_rado(g).is_rado)
            return g;
    }
}

}  // namespace

static void BM_EnumerateSolutions(benchmark::State& state)
{
    const long long n = state.range(0);
    const SampledSet set = sample_set(n, Rational(1, 10), 1);
    for (auto _ : state) {
        auto sols = enumerate_solutions(four(), set);
        benchmark::DoNotOptimize(sols);
    }
}
BENCHMARK(BM_EnumerateSolutions)->Arg(250)->Arg(500)->Arg(1'000)->Unit(benchmark::kMillisecond);

static void BM_BuildHypergraph(benchmark::State& state)
{
    const long long n = state.range(0);
    const SampledSet set = sample_set(n, Rational(1, 10), 2);
    for (auto _ : state) {
        auto g = build_hypergraph(schur(), four(), set);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_BuildHypergraph)->Arg(500)->Arg(1'000)->Unit(benchmark::kMillisecond);

static void BM_IsRado(benchmark::State& state)
{
    const Hypergraph g = sample(state.range(0), Rational(1, 10), 3, false);
    for (auto _ : state) {
        auto v = is_rado(g);
        benchmark::DoNotOptimize(v);
    }
    state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_IsRado)->Arg(200)->Arg(500)->Arg(1'000)->Unit(benchmark::kMillisecond);

static void BM_RadoMinimal(benchmark::State& state)
{
    const Hypergraph g = rado_sample(state.range(0), Rational(1, 5), state.range(1) != 0);
    for (auto _ : state) {
        auto h = rado_minimal(g);
        benchmark::DoNotOptimize(h);
    }
    state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_RadoMinimal)->Args({200, 1})->Args({300, 0})->Unit(benchmark::kMillisecond);

static void BM_CountACycles(benchmark::State& state)
{
    const Hypergraph g = sample(state.range(0), Rational(1, 10), 4, false);
    const PatternKind kind(PatternTag::A_CYCLE, 3);
    for (auto _ : state) {
        auto c = count(g, kind, default_cap(state.range(0)));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CountACycles)->Arg(500)->Arg(1'000)->Unit(benchmark::kMillisecond);

static void BM_AuditLemma22(benchmark::State& state)
{
    const Hypergraph h = rado_minimal(rado_sample(state.range(0), Rational(1, 5), false));
    const int cap = default_cap(state.range(0));
    for (auto _ : state) {
        auto r = audit_lemma22(h, cap);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_AuditLemma22)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_MAsym(benchmark::State& state)
{
    const auto a = RationalMatrix::from_int_rows({{1, 1, -1, 0}, {0, 1, 1, -1}});
    const auto b = RationalMatrix::from_int_rows({{1, 1, 1, 1, -1}});
    for (auto _ : state) {
        auto m = m_asym(a, b);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_MAsym);

BENCHMARK_MAIN();
