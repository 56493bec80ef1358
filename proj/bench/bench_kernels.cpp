// Serial reference vs OpenMP kernels: Bareiss elimination, coface assembly, containment and radical searches.
#include "astk/cech.hpp"
#include "astk/completion.hpp"
#include "astk/trace.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace astk;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

ExactMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

void bareiss_rank(benchmark::State& s) {
    auto m = random_matrix(static_cast<std::size_t>(s.range(1)), 17);
    for (auto _ : s) benchmark::DoNotOptimize(m.rank(exec_of(s)));
}

void coface_assembly(benchmark::State& s) {
    auto h = hopf_from_group(parse_group_spec("mu" + std::to_string(s.range(1))));
    for (auto _ : s) benchmark::DoNotOptimize(cech_nerve(h, 4, exec_of(s)).level_dims.size());
}

void containment_search(benchmark::State& s) {
    auto h = rep_ring(parse_group_spec("t2")), g = rep_ring(parse_group_spec("gl2"));
    for (auto _ : s) benchmark::DoNotOptimize(containment_exponent(h, g, 4, exec_of(s)).exponent);
}

void radical_search(benchmark::State& s) {
    auto g = parse_group_spec("gl3");
    for (auto _ : s) benchmark::DoNotOptimize(radical_compare(g, 3, exec_of(s)).exponent);
}

}  // namespace

BENCHMARK(bareiss_rank)->ArgNames({"parallel", "n"})->ArgsProduct({{0, 1}, {24, 48}})->Unit(benchmark::kMillisecond);
BENCHMARK(coface_assembly)->ArgNames({"parallel", "mu"})->ArgsProduct({{0, 1}, {4, 6}})->Unit(benchmark::kMillisecond);
BENCHMARK(containment_search)->ArgNames({"parallel"})->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(radical_search)->ArgNames({"parallel"})->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
