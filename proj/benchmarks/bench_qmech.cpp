// Hot-path timings: ordered multiplication, the deformed bracket, the
// conserved-energy solver, the operator realization and word rewriting.
// Run the qmech_bench binary directly; benchmarks are not part of ctest.

#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "qmech/dynamics.hpp"
#include "qmech/realization.hpp"
#include "qmech/symplectic.hpp"

using namespace qmech;

namespace {

QPoly random_qpoly(std::mt19937& rng, int max_degree, int terms) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> spow(-2, 2);
    QPoly out;
    for (int k = 0; k < terms; ++k) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        int n = deg(rng);
        std::uniform_int_distribution<int> rest(0, max_degree - n);
        int m = rest(rng);
        int c = coeff(rng);
        if (c == 0) c = 1;
        out.add(n, m, ScalarExpr(c) * ScalarExpr::s_power(spow(rng)));
    }
    return out;
}

void BM_NormalOrderedProduct(benchmark::State& state) {
    std::mt19937 rng(1);
    int degree = static_cast<int>(state.range(0));
    QPoly a = random_qpoly(rng, degree, 6);
    QPoly b = random_qpoly(rng, degree, 6);
    for (auto _ : state) {
        QPoly c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_NormalOrderedProduct)->Arg(4)->Arg(8)->Arg(16);

void BM_Bracket(benchmark::State& state) {
    std::mt19937 rng(2);
    int degree = static_cast<int>(state.range(0));
    QPoly f = random_qpoly(rng, degree, 4);
    QPoly g = random_qpoly(rng, degree, 4);
    for (auto _ : state) {
        QPoly c = qpb_direct(f, g);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_Bracket)->Arg(4)->Arg(6)->Arg(10);

void BM_FindConserved(benchmark::State& state) {
    HamiltonianSpec spec;
    spec.mass = ScalarExpr::parameter("m");
    int top = static_cast<int>(state.range(0));
    for (int n = 1; n <= top; ++n) {
        spec.potential.emplace_back(n,
                                    ScalarExpr::parameter("c" + std::to_string(n)));
    }
    for (auto _ : state) {
        QPoly e = find_conserved(spec);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_FindConserved)->Arg(4)->Arg(8);

void BM_RealizationRelations(benchmark::State& state) {
    int truncation = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Report r = verify_relations(truncation);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_RealizationRelations)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_WordReduction(benchmark::State& state) {
    RelationSet rules;
    for (const auto& set : builtin_relation_sets()) {
        if (set.name == "manin-q-det-q") rules = set;
    }
    // Worst-case-ordered word: all letters descending, maximal rewriting.
    int len = static_cast<int>(state.range(0));
    TWord word;
    const char letters[4] = {'d', 'c', 'b', 'a'};
    for (int k = 0; k < len; ++k) word.push_back(letters[k % 4]);
    TElem input = TElem::word(word);
    for (auto _ : state) {
        TElem r = reduce(input, rules);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_WordReduction)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
