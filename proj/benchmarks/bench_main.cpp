#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "hyperpi/catalog.hpp"
#include "hyperpi/elliptic.hpp"
#include "hyperpi/lauricella.hpp"
#include "hyperpi/quadrature.hpp"
#include "hyperpi/roberts.hpp"

using namespace hyperpi;

static void TanhSinhSingular(benchmark::State& state) {
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    auto f = [](double x, double, double dr) {
        return quad::Complex(1.0 / std::sqrt(dr * (1.0 + x)));
    };
    for (auto _ : state) {
        auto r = quad::integrate(f, quad::Domain::finite(0, 1, false, true), tol);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(TanhSinhSingular)->Arg(6)->Arg(9)->Arg(12);

static void CompleteFirstKind(benchmark::State& state) {
    double k = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(elliptic::K(k));
        k = k < 0.9 ? k + 1e-4 : 0.1;
    }
}
BENCHMARK(CompleteFirstKind);

static void LauricellaSeries(benchmark::State& state) {
    hyp::LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 1.0,
                             {hyp::Complex(0.36), hyp::Complex(0.0177),
                              hyp::Complex(0.0256)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyp::fd_series(call, 1e-12).value);
    }
}
BENCHMARK(LauricellaSeries);

static void LauricellaIntegral(benchmark::State& state) {
    hyp::LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 1.0,
                             {hyp::Complex(-4.0625),
                              hyp::Complex(-5.9659090909090908),
                              hyp::Complex(0.31100478468899523)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyp::fd_integral(call, 1e-12).value);
    }
}
BENCHMARK(LauricellaIntegral);

static void ReductionTriangle(benchmark::State& state) {
    const auto spec = roberts::build_octic(roberts::EightReal{1.5, 2.5});
    for (auto _ : state) {
        auto q = roberts::rn_quadrature(spec, 0, roberts::Interval::ZeroToInvB);
        auto e = roberts::rn_elliptic(spec, 0, roberts::Interval::ZeroToInvB);
        auto l = roberts::rn_lauricella(spec, 0, roberts::Interval::ZeroToInvB);
        benchmark::DoNotOptimize(q.value + e.value + l.value);
    }
}
BENCHMARK(ReductionTriangle);

static void IdentityEvaluation(benchmark::State& state) {
    for (auto _ : state) {
        auto rec = catalog::evaluate_identity("tesiA",
                                              catalog::Params::two(1.5, 2.5));
        benchmark::DoNotOptimize(rec.residual);
    }
}
BENCHMARK(IdentityEvaluation);

BENCHMARK_MAIN();
