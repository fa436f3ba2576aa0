#include <benchmark/benchmark.h>

#include "ecfield/group.hpp"

using namespace ecf;

namespace {

WeierstrassCurve curve101() {
    return WeierstrassCurve(FieldSpec::prime_field(Integer(101)), 0, 0, 0, 1, 1);
}

void BM_FieldMul(benchmark::State& state) {
    FieldSpec k = FieldSpec::prime_field(Integer(101));
    FieldElement a(k, 57), b(k, 88);
    for (auto _ : state) {
        FieldElement c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_FieldMul);

void BM_FieldInv(benchmark::State& state) {
    FieldSpec k = FieldSpec::prime_field(Integer(101));
    FieldElement a(k, 57);
    for (auto _ : state) {
        FieldElement c = a.inv();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_FieldInv);

void BM_RationalMul(benchmark::State& state) {
    FieldSpec q = FieldSpec::rationals();
    FieldElement a(q, Rational(355, 113)), b(q, Rational(-22, 7));
    for (auto _ : state) {
        FieldElement c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_RationalMul);

void BM_PointAdd(benchmark::State& state) {
    WeierstrassCurve e = curve101();
    std::vector<ProjectivePoint> pts = enumerate_points(e);
    ProjectivePoint p = pts[1], q = pts[2];
    for (auto _ : state) {
        ProjectivePoint r = add(e, p, q);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PointAdd);

void BM_PointDouble(benchmark::State& state) {
    WeierstrassCurve e = curve101();
    ProjectivePoint p = enumerate_points(e)[1];
    for (auto _ : state) {
        ProjectivePoint r = double_point(e, p);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PointDouble);

void BM_ScalarMul(benchmark::State& state) {
    WeierstrassCurve e = curve101();
    ProjectivePoint p = enumerate_points(e)[1];
    Integer n(123456789L);
    for (auto _ : state) {
        ProjectivePoint r = scalar_mul(e, n, p);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ScalarMul);

void BM_EnumeratePoints(benchmark::State& state) {
    WeierstrassCurve e = curve101();
    for (auto _ : state) {
        std::vector<ProjectivePoint> pts = enumerate_points(e);
        benchmark::DoNotOptimize(pts);
    }
}
BENCHMARK(BM_EnumeratePoints);

}  // namespace

BENCHMARK_MAIN();
