#include <benchmark/benchmark.h>

#include <random>

#include "harmsub/admissibility.hpp"
#include "harmsub/fd.hpp"

using namespace harmsub;

namespace {

HarmonicSeries make_series(int degree) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::vector<Complex> a, b;
    for (int n = 0; n <= degree; ++n) {
        a.emplace_back(u(rng), u(rng));
        b.emplace_back(u(rng), u(rng));
    }
    return HarmonicSeries(std::move(a), std::move(b));
}

void BM_Evaluate(benchmark::State& state) {
    const HarmonicSeries f = make_series(static_cast<int>(state.range(0)));
    const EvalPoint z(Complex(0.4, -0.3));
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate(f, z));
}
BENCHMARK(BM_Evaluate)->Arg(8)->Arg(32)->Arg(128);

void BM_ApplyDn(benchmark::State& state) {
    const HarmonicSeries f = make_series(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_Dn(f, 2, Operator::D));
}
BENCHMARK(BM_ApplyDn)->Arg(8)->Arg(32)->Arg(128);

void BM_FdD(benchmark::State& state) {
    const HarmonicSeries f = make_series(16);
    const PointwiseMap fp = as_pointwise(f);
    const EvalPoint z(Complex(0.4, -0.3));
    const FDConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(fd_D(fp, z, cfg));
}
BENCHMARK(BM_FdD);

void BM_AdmissibilityScan(benchmark::State& state) {
    const BoundaryMapQ bq(affine_ellipse_map(0.8, 0.4), {}, 1e-3,
                          DomainSpec{Ellipse{Complex(1.0), 1.2, 0.4}});
    const DomainSpec omega{Ellipse{Complex(1.0), 1.2, 0.4}};
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    AdmissibilityScanConfig cfg;
    cfg.n_zeta = static_cast<int>(state.range(0));
    cfg.n_m = 64;
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_admissibility(psi, bq, omega, cfg));
}
BENCHMARK(BM_AdmissibilityScan)->Arg(128)->Arg(512);

} // namespace

BENCHMARK_MAIN();
