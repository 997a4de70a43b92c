#include <benchmark/benchmark.h>

#include <random>

#include "gapmatch/boolmat.hpp"
#include "gapmatch/generators.hpp"
#include "gapmatch/matchers.hpp"

using namespace gapmatch;

namespace {

BoolMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.35);
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (coin(rng)) m.set(i, j);
    return m;
}

Instance nested_chain_instance(std::size_t n, Pos m) {
    Alphabet alphabet;
    const Symbol a = alphabet.intern("a");
    std::vector<GapConstraint> cs;
    cs.push_back({1, m, SemilinearSet::at_least(m - 2)});
    for (Pos i = 2; 2 * i < m; ++i)
        cs.push_back({i, static_cast<Pos>(m - i + 1), SemilinearSet::all()});
    return Instance(Word(std::vector<Symbol>(n, a)), Word(std::vector<Symbol>(m, a)),
                    ConstraintSet(std::move(cs)), std::move(alphabet));
}

void BM_BoolMultiply(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const BoolMatrix a = random_matrix(n, 1);
    const BoolMatrix b = random_matrix(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
    state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_BoolMultiply)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_BuildB(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Instance inst = nested_chain_instance(n, 33);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_B(inst.text(), inst.pattern(), 1, 33));
}
BENCHMARK(BM_BuildB)->RangeMultiplier(2)->Range(256, 4096);

void BM_TreeMatmul(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Instance inst = nested_chain_instance(n, 33);
    for (auto _ : state) benchmark::DoNotOptimize(match_tree_matmul(inst));
}
BENCHMARK(BM_TreeMatmul)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);

void BM_VsnDp(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    Alphabet alphabet;
    std::vector<Symbol> text(n);
    for (auto& s : text) s = alphabet.intern(rng() % 2 ? "a" : "b");
    std::vector<Symbol> pattern(6);
    for (auto& s : pattern) s = static_cast<Symbol>(rng() % 2);
    std::vector<GapConstraint> cs{{1, 4, SemilinearSet::all()},
                                  {3, 6, SemilinearSet::bounded_range(0, n / 2)}};
    const Instance inst(Word(std::move(text)), Word(std::move(pattern)),
                        ConstraintSet(std::move(cs)), std::move(alphabet));
    for (auto _ : state) benchmark::DoNotOptimize(match_vsn_dp(inst));
}
BENCHMARK(BM_VsnDp)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_Ov3EndToEnd(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const OvTriple t = random_ov(n, 6, 11);
    const Instance inst = gen_ov3(t);
    for (auto _ : state) benchmark::DoNotOptimize(match_tree_matmul(inst));
    state.counters["text_len"] = static_cast<double>(inst.n());
    state.counters["K"] = static_cast<double>(inst.constraints().count());
}
BENCHMARK(BM_Ov3EndToEnd)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
