#include "mzlab/image_engine.hpp"
#include "mzlab/linmaps.hpp"
#include "mzlab/mz_verify.hpp"
#include "mzlab/parse.hpp"

#include <benchmark/benchmark.h>

using namespace mzlab;

namespace {

// fresh engine each iteration so nothing is cached
void BM_ImageOfDerivation(benchmark::State& state)
{
    const auto spec = standard_nilpotent_derivation(Field::rationals());
    const auto d = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(image_basis(spec, d, d));
}
BENCHMARK(BM_ImageOfDerivation)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ImageOfEDerivation(benchmark::State& state)
{
    const Field k = Field::cyclotomic(static_cast<unsigned>(state.range(1)));
    const LinearMapSpec spec(MapKind::ederivation, phi_a_matrix(k.zeta()));
    const auto d = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(image_basis(spec, d, d));
}
BENCHMARK(BM_ImageOfEDerivation)->ArgsProduct({{2, 4, 6}, {2, 3, 4}})->Unit(benchmark::kMillisecond);

// warm cache, so this is the reduction cost alone
void BM_MembershipWarm(benchmark::State& state)
{
    const Field k = Field::cyclotomic(3);
    const Ring ring{3, k};
    const ImageEngine engine(LinearMapSpec(MapKind::ederivation, phi_a_matrix(k.zeta())));
    const auto f = parse_polynomial("x1^5 + z*x1^2*x2^2*x3 - 3*x3^5 + x2 - 1", ring);
    benchmark::DoNotOptimize(engine.member(f));
    for (auto _ : state)
        benchmark::DoNotOptimize(engine.member(f));
}
BENCHMARK(BM_MembershipWarm)->Unit(benchmark::kMicrosecond);

void BM_FieldMultiply(benchmark::State& state)
{
    const Field k = Field::cyclotomic(static_cast<unsigned>(state.range(0)));
    const auto a = parse_scalar("3/7 + 2*z - z^2 + 5/2*z^3", k);
    const auto b = parse_scalar("-1 + 1/3*z^2 + z^5", k);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FieldMultiply)->Arg(3)->Arg(7)->Arg(12)->Arg(30);

void BM_FieldInverse(benchmark::State& state)
{
    const Field k = Field::cyclotomic(static_cast<unsigned>(state.range(0)));
    const auto a = parse_scalar("3/7 + 2*z - z^2 + 5/2*z^3", k);
    for (auto _ : state)
        benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_FieldInverse)->Arg(3)->Arg(7)->Arg(12)->Arg(30);

void BM_Suite(benchmark::State& state)
{
    SuiteConfig cfg;
    cfg.max_degree = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(theorem_suite(cfg));
}
BENCHMARK(BM_Suite)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
