// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "kernels.hpp"
#include "specktral/codes.hpp"
#include "specktral/constructions.hpp"
#include "specktral/covering.hpp"
#include "specktral/fourier.hpp"
#include "specktral/reference.hpp"

using namespace specktral;

namespace {

AffineCode random_code(std::uint32_t q, std::size_t n, std::size_t k) {
    std::mt19937_64 rng(n * 131 + k);
    std::vector<FqVector> gens;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Elem> v(n);
        for (auto& x : v) x = static_cast<Elem>(rng() % q);
        gens.emplace_back(FieldOrder(q), std::move(v));
    }
    return AffineCode(LinearCode::from_generators(FieldOrder(q), n, gens));
}

DenseFunction random_function(std::uint32_t q, std::size_t n) {
    std::mt19937_64 rng(q * 977 + n);
    std::normal_distribution<double> g;
    auto f = DenseFunction::zero(FieldOrder(q), n);
    std::vector<std::complex<double>> v(f.size());
    for (auto& x : v) x = {g(rng), g(rng)};
    return f.with_values(std::move(v));
}

void BM_HistogramBinary(benchmark::State& state) {
    const auto c = random_code(2, 40, static_cast<std::size_t>(state.range(0)));
    const bool parallel = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(detail::weight_histogram(c.linear().generator(), c.offset().coords(), parallel));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << c.dimension()));
}
BENCHMARK(BM_HistogramBinary)->ArgsProduct({{12, 16, 20}, {0, 1}})->ArgNames({"k", "parallel"});

void BM_HistogramTernary(benchmark::State& state) {
    const auto c = random_code(3, 20, static_cast<std::size_t>(state.range(0)));
    const bool parallel = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(detail::weight_histogram(c.linear().generator(), c.offset().coords(), parallel));
}
BENCHMARK(BM_HistogramTernary)->ArgsProduct({{8, 11}, {0, 1}})->ArgNames({"k", "parallel"});

void BM_HistogramReference(benchmark::State& state) {
    const auto c = random_code(2, 40, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::weight_distribution(c));
}
BENCHMARK(BM_HistogramReference)->Arg(12)->Arg(16)->ArgName("k");

void BM_TransformFast(benchmark::State& state) {
    const auto f = random_function(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(transform(f));
}
BENCHMARK(BM_TransformFast)->DenseRange(8, 20, 4)->ArgName("n");

void BM_TransformNaive(benchmark::State& state) {
    const auto f = random_function(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::transform_naive(f));
}
BENCHMARK(BM_TransformNaive)->DenseRange(8, 12, 2)->ArgName("n");

void BM_TransformTernary(benchmark::State& state) {
    const auto f = random_function(3, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(transform(f));
}
BENCHMARK(BM_TransformTernary)->DenseRange(6, 12, 3)->ArgName("n");

void BM_FacesSolver(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = enumerate(build_M(n, 0));
    for (auto _ : state) benchmark::DoNotOptimize(count_intersecting_faces(FieldOrder(2), n, s, n / 2));
}
BENCHMARK(BM_FacesSolver)->DenseRange(4, 12, 2)->ArgName("n");

void BM_FacesBrute(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = enumerate(build_M(n, 0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::count_intersecting_faces_brute(FieldOrder(2), n, s, n / 2));
}
BENCHMARK(BM_FacesBrute)->DenseRange(4, 8, 2)->ArgName("n");

}  // namespace

BENCHMARK_MAIN();
