// Serial reference kernels against their OpenMP versions.

#include "qcv/parallel.hpp"
#include "qcv/verify.hpp"

#include <benchmark/benchmark.h>

using namespace qcv;

namespace {

struct Operands {
    QMatrix a, b;
};

Operands qexp_pair(int k) {
    const auto g = symmetric_rep_sl2(k);
    return {q_exp_matrix(g.Tplus[0], ExpBase::q), q_exp_matrix(g.Tminus[0], ExpBase::q_inverse)};
}

void BM_MultiplySerial(benchmark::State &state) {
    const auto ops = qexp_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(ops.a, ops.b));
}

void BM_MultiplyParallel(benchmark::State &state) {
    const auto ops = qexp_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(multiply(ops.a, ops.b));
}

TorusMatrix fg_pair_product(int n, bool parallel) {
    const auto rep = fundamental_rep(n + 1);
    const auto ctx = fg_context(n);
    const auto a = building_block(n, 1, BlockForm::FG, rep, ctx);
    const auto b = group_element(n, BlockForm::FG, rep, ctx).matrix;
    return parallel ? multiply(a, b) : multiply_serial(a, b);
}

void BM_TorusMultiplySerial(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(fg_pair_product(static_cast<int>(state.range(0)), false));
}

void BM_TorusMultiplyParallel(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(fg_pair_product(static_cast<int>(state.range(0)), true));
}

std::vector<CheckFn> check_batch() {
    std::vector<CheckFn> checks;
    for (int k = 1; k <= 6; ++k) checks.push_back([k] { return verify_mutation(symmetric_rep_sl2(k)); });
    checks.push_back([] { return verify_apow(4); });
    checks.push_back([] { return check_qexp_factorization(8); });
    return checks;
}

void BM_ChecksSerial(benchmark::State &state) {
    const auto checks = check_batch();
    for (auto _ : state) benchmark::DoNotOptimize(run_checks_serial(checks));
}

void BM_ChecksParallel(benchmark::State &state) {
    const auto checks = check_batch();
    const int threads = configured_threads();
    for (auto _ : state) benchmark::DoNotOptimize(run_checks(checks, threads));
}

} // namespace

BENCHMARK(BM_MultiplySerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorusMultiplySerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorusMultiplyParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChecksSerial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_ChecksParallel)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
