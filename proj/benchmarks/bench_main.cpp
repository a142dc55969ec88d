#include "braidkit/suites.hpp"

#include <benchmark/benchmark.h>

using namespace braidkit;

static void BM_ScalarArithmetic(benchmark::State& state) {
    const QScalar q = QScalar::q();
    for (auto _ : state) {
        QScalar s = (q.pow(3) + QScalar(1)) / (q * q - QScalar(2));
        for (int i = 0; i < 8; ++i) s = s * (q + q.inv()) - s / qint(3);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_ScalarArithmetic);

static void BM_StandardR(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(standard_R(n));
}
BENCHMARK(BM_StandardR)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Validate(benchmark::State& state) {
    HeckeSymmetry h = standard_R(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(validate(h));
}
BENCHMARK(BM_Validate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_PbwKqR3(benchmark::State& state) {
    auto p = preset("kq_r3");
    for (auto _ : state) benchmark::DoNotOptimize(pbw_check(*p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PbwKqR3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_NormalForm(benchmark::State& state) {
    auto p = preset("mrea_lhbc");
    for (auto _ : state) {
        AlgebraElement e = AlgebraElement::parse(p, "(b*h*c + l*c*b)^2");
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_NormalForm)->Unit(benchmark::kMicrosecond);

static void BM_QIndex(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(q_index_value(k, 0));
}
BENCHMARK(BM_QIndex)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Canonicalizer(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_canonicalizer(WaveAlgebra::kq_r3, d));
}
BENCHMARK(BM_Canonicalizer)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_DiracSquare(benchmark::State& state) {
    auto r3 = build_canonicalizer(WaveAlgebra::kq_r3, 4);
    auto r4 = build_canonicalizer(WaveAlgebra::kq_r4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(dirac_checks(r3, r4, QScalar(2)));
}
BENCHMARK(BM_DiracSquare)->Unit(benchmark::kMillisecond);

static void BM_SuiteJobs(benchmark::State& state) {
    SuiteParams p;
    p.jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_suite("braided-lie", p));
}
BENCHMARK(BM_SuiteJobs)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
