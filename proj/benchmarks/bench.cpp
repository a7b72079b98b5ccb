#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "ceqss/compiler.hpp"
#include "ceqss/dense.hpp"
#include "ceqss/encoder.hpp"
#include "ceqss/recovery.hpp"

using namespace ceqss;

namespace {

FqMatrix random_invertible(std::size_t g, u64 q, std::mt19937_64& rng) {
    FqMatrix kmat(g, g, q);
    do {
        for (std::size_t r = 0; r < g; ++r)
            for (std::size_t c = 0; c < g; ++c) kmat.set(r, c, rng() % q);
    } while (mat_rank(kmat) < g);
    return kmat;
}

std::vector<unsigned> first_parties(unsigned d) {
    std::vector<unsigned> parties(d);
    std::iota(parties.begin(), parties.end(), 1);
    return parties;
}

void BM_FieldInverse(benchmark::State& state) {
    u64 q = 1000003;
    u64 x = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mod_inverse(x, q));
        x = x % (q - 2) + 2;
    }
}
BENCHMARK(BM_FieldInverse);

void BM_MatInverse(benchmark::State& state) {
    std::mt19937_64 rng(7);
    FqMatrix kmat = random_invertible(static_cast<std::size_t>(state.range(0)), 10007, rng);
    for (auto _ : state) benchmark::DoNotOptimize(mat_inverse(kmat));
}
BENCHMARK(BM_MatInverse)->Arg(8)->Arg(16)->Arg(32);

void BM_EncodeSymbolic(benchmark::State& state) {
    SchemeParams p = derive_params(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(encode_symbolic(p));
}
BENCHMARK(BM_EncodeSymbolic)->Arg(3)->Arg(5)->Arg(6);

void BM_PlanRecovery(benchmark::State& state) {
    SchemeParams p = derive_params(static_cast<unsigned>(state.range(0)));
    auto parties = first_parties(p.k); // d = k, the widest plan
    for (auto _ : state) benchmark::DoNotOptimize(plan_recovery(p, parties));
}
BENCHMARK(BM_PlanRecovery)->Arg(3)->Arg(5)->Arg(6);

void BM_ExecuteRecovery(benchmark::State& state) {
    SchemeParams p = derive_params(static_cast<unsigned>(state.range(0)));
    RecoveryPlan plan = plan_recovery(p, first_parties(p.k));
    SymbolicState st = encode_symbolic(p);
    for (auto _ : state) benchmark::DoNotOptimize(execute(plan, st));
}
BENCHMARK(BM_ExecuteRecovery)->Arg(3)->Arg(5);

void BM_CompileUK(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::size_t g = static_cast<std::size_t>(state.range(0));
    FqMatrix kmat = random_invertible(g, 11, rng);
    std::vector<std::size_t> qudits(g);
    std::iota(qudits.begin(), qudits.end(), 0);
    for (auto _ : state) benchmark::DoNotOptimize(compile_uk(kmat, qudits, g));
}
BENCHMARK(BM_CompileUK)->Arg(4)->Arg(8)->Arg(16);

void BM_DenseApplyProgram(benchmark::State& state) {
    SchemeParams p = derive_params(2);
    GateProgram prog = compile_plan(plan_recovery(p, {1, 3}));
    DenseState st = encode_dense(p, BasisSecret{{1, 2}});
    for (auto _ : state) {
        DenseState work = st;
        dense_apply_program(work, prog);
        benchmark::DoNotOptimize(work);
    }
}
BENCHMARK(BM_DenseApplyProgram);

} // namespace

BENCHMARK_MAIN();
