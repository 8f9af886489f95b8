#include <benchmark/benchmark.h>

#include "qrook/presentations.hpp"
#include "qrook/seminormal.hpp"

using namespace qrook;

namespace {

const std::vector<RatFunc> u01{RatFunc(0), RatFunc(1)};

Assignment<RatFunc> rook_sum(int k) {
    std::vector<Assignment<RatFunc>> parts;
    for (const auto& lam : index_set_A(k)) parts.push_back(cyclotomic_module(lam, u01).matrices);
    return apply(map_X_to_P(k), direct_sum(parts), symbolic_scalars());
}

template <bool Parallel>
void BM_Multiply(benchmark::State& state) {
    auto a = rook_sum(static_cast<int>(state.range(0)));
    const auto& t = a.at(Gen{GenKind::T, 1, false});
    const auto& p = a.at(Gen{GenKind::P, 1, false});
    for (auto _ : state) {
        auto m = Parallel ? multiply(t, p) : multiply_serial(t, p);
        benchmark::DoNotOptimize(m);
    }
    state.counters["dim"] = static_cast<double>(t.rows());
}

template <bool Parallel>
void BM_Verify(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    auto a = rook_sum(k);
    auto rels = relations_rook(k);
    for (auto _ : state) {
        auto rep = Parallel ? verify(a, rels, symbolic_scalars()) : verify_serial(a, rels, symbolic_scalars());
        benchmark::DoNotOptimize(rep);
    }
}

template <bool Parallel>
void BM_BuildModules(benchmark::State& state) {
    auto shapes = index_set_H(static_cast<int>(state.range(0)), 2);
    const std::vector<RatFunc> u{RatFunc(2), RatFunc(5)};
    for (auto _ : state) {
        if constexpr (Parallel) {
            benchmark::DoNotOptimize(cyclotomic_modules(shapes, u));
        } else {
            std::vector<Representation> out;
            for (const auto& lam : shapes) out.push_back(cyclotomic_module(lam, u));
            benchmark::DoNotOptimize(out);
        }
    }
}

}  // namespace

BENCHMARK(BM_Multiply<false>)->Name("multiply/serial")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Multiply<true>)->Name("multiply/openmp")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Verify<false>)->Name("verify/serial")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify<true>)->Name("verify/openmp")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildModules<false>)->Name("modules/serial")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildModules<true>)->Name("modules/openmp")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
