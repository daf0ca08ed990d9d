// Runtime scaling of the gradient and Hessian-diagonal drivers. The point
// to observe: basis-seeded tangent drivers cost n evaluations and grow
// quadratically with n, while the adjoint and compressed-adjoint drivers
// hold at a single evaluation and grow linearly.

#include <benchmark/benchmark.h>

#include "adkit/adkit.hpp"

using namespace adkit;

namespace {

template <class T>
std::vector<T> pairs_input(std::size_t n) {
    return build_input<T>(n, kMerryXmasPayload, FunctionId::pairs);
}

template <class T>
std::vector<T> cubes_input(std::size_t n) {
    return build_input<T>(n, kHappy2026Payload, FunctionId::cubes);
}

void BM_gradient_tangent_hand_i8(benchmark::State& state) {
    auto x = pairs_input<Wrap8>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = gradient_tangent(Engine::hand, FunctionId::pairs, x);
        benchmark::DoNotOptimize(r.gradient.data());
    }
}

void BM_gradient_adjoint_hand_i8(benchmark::State& state) {
    auto x = pairs_input<Wrap8>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = gradient_adjoint(Engine::hand, FunctionId::pairs, x);
        benchmark::DoNotOptimize(r.gradient.data());
    }
}

void BM_hessian_diag_hand_i8(benchmark::State& state) {
    auto x = cubes_input<Wrap8>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = hessian_diag_t1t2(Engine::hand, FunctionId::cubes, x);
        benchmark::DoNotOptimize(r.hessian.entries.data());
    }
}

void BM_hessian_compressed_hand_i8(benchmark::State& state) {
    auto x = cubes_input<Wrap8>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = hessian_compressed_a1t2(Engine::hand, FunctionId::cubes, x);
        benchmark::DoNotOptimize(r.hessian.entries.data());
    }
}

void BM_gradient_tangent_generic_f64(benchmark::State& state) {
    auto x = pairs_input<double>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = gradient_tangent(Engine::generic, FunctionId::pairs, x);
        benchmark::DoNotOptimize(r.gradient.data());
    }
}

void BM_gradient_adjoint_generic_f64(benchmark::State& state) {
    auto x = pairs_input<double>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = gradient_adjoint(Engine::generic, FunctionId::pairs, x);
        benchmark::DoNotOptimize(r.gradient.data());
    }
}

}  // namespace

BENCHMARK(BM_gradient_tangent_hand_i8)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gradient_adjoint_hand_i8)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hessian_diag_hand_i8)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hessian_compressed_hand_i8)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gradient_tangent_generic_f64)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gradient_adjoint_generic_f64)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
