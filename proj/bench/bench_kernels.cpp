// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include <cmath>

#include "fraclog/caputo.hpp"
#include "fraclog/identities.hpp"
#include "fraclog/logistic.hpp"

namespace fl = fraclog;

namespace {

fl::GridFunction sample_ml(std::size_t n) {
    const auto g = fl::UniformGrid::over(2.0, n);
    return fl::GridFunction::sample(g, [](double t) { return std::exp(-t) + std::sqrt(t); });
}

void BM_CaputoL1_Serial(benchmark::State& st) {
    const auto f = sample_ml(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(fl::serial::caputo_l1(f, 0.5));
    st.SetComplexityN(st.range(0));
}

void BM_CaputoL1_Parallel(benchmark::State& st) {
    const auto f = sample_ml(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(fl::caputo_l1(f, 0.5));
    st.SetComplexityN(st.range(0));
}

void BM_ScanGap_Serial(benchmark::State& st) {
    const auto g = fl::UniformGrid::over(5.0, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(fl::serial::scan_gap({0.5, 1.0, fl::Identity::squared, std::nullopt}, g));
}

void BM_ScanGap_Parallel(benchmark::State& st) {
    const auto g = fl::UniformGrid::over(5.0, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(fl::scan_gap({0.5, 1.0, fl::Identity::squared, std::nullopt}, g));
}

void BM_Fabm_Serial(benchmark::State& st) {
    const auto g = fl::UniformGrid::over(5.0, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(fl::serial::fabm_solve({0.5, 1.0, 0.8}, g));
}

void BM_Fabm_Parallel(benchmark::State& st) {
    const auto g = fl::UniformGrid::over(5.0, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(fl::fabm_solve({0.5, 1.0, 0.8}, g));
}

void BM_WestResidual_Serial(benchmark::State& st) {
    const auto g = fl::UniformGrid::over(5.0, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(fl::serial::west_residual({0.5, 1.0, 0.8}, g));
}

void BM_WestResidual_Parallel(benchmark::State& st) {
    const auto g = fl::UniformGrid::over(5.0, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(fl::west_residual({0.5, 1.0, 0.8}, g));
}

}  // namespace

BENCHMARK(BM_CaputoL1_Serial)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_CaputoL1_Parallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_ScanGap_Serial)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanGap_Parallel)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fabm_Serial)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fabm_Parallel)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WestResidual_Serial)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WestResidual_Parallel)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
