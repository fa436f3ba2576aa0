#include <benchmark/benchmark.h>

#include "ecfield/valuation.hpp"

using namespace ecf;

namespace {

WeierstrassCurve curve101() {
    return WeierstrassCurve(FieldSpec::prime_field(Integer(101)), 0, 0, 0, 1, 1);
}

CurveFunction sample_function(const WeierstrassCurve& e) {
    // (x^2 + 3 + (x + 1) y) / (x^2 + x + 7)
    const FieldSpec& k = e.field();
    Poly x = Poly::x(k);
    Poly a = x * x + Poly::constant(k, 3);
    Poly b = x + Poly::constant(k, 1);
    Poly d = x * x + x + Poly::constant(k, 7);
    return CurveFunction(e, a, b, d);
}

void BM_FunctionMul(benchmark::State& state) {
    WeierstrassCurve e = curve101();
    CurveFunction f = sample_function(e);
    CurveFunction g = f + CurveFunction::coordinate_y(e);
    for (auto _ : state) {
        CurveFunction h = f * g;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_FunctionMul);

void BM_FunctionInv(benchmark::State& state) {
    WeierstrassCurve e = curve101();
    CurveFunction f = sample_function(e);
    for (auto _ : state) {
        CurveFunction h = f.inv();
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_FunctionInv);

void BM_ParameterizationAtOrigin(benchmark::State& state) {
    WeierstrassCurve e = curve101();
    long n = state.range(0);
    for (auto _ : state) {
        LocalParameterization par = local_parameterization(e, e.origin(), n);
        benchmark::DoNotOptimize(par);
    }
}
BENCHMARK(BM_ParameterizationAtOrigin)->Arg(8)->Arg(20)->Arg(40);

void BM_ValuationAtOrigin(benchmark::State& state) {
    WeierstrassCurve e = curve101();
    CurveFunction f = sample_function(e);
    for (auto _ : state) {
        Valuation v = valuation(e, e.origin(), f);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ValuationAtOrigin);

void BM_PsiExpand(benchmark::State& state) {
    WeierstrassCurve e = curve101();
    CurveFunction f = sample_function(e);
    CurveFunction u = canonical_uniformizer(e, e.origin());
    long n = state.range(0);
    for (auto _ : state) {
        LaurentSeries s = psi_expand(e, e.origin(), u, f, n);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_PsiExpand)->Arg(5)->Arg(10)->Arg(20);

}  // namespace
