#include "qskein/homology.hpp"
#include "qskein/ore.hpp"

#include <benchmark/benchmark.h>

using namespace qs;

namespace {

const AlgebraPresentation& dq() {
    static const AlgebraPresentation p = build_dq(Flavor::GL);
    return p;
}

const AlgebraPresentation& a21() {
    static const AlgebraPresentation p = build_Agr({2, 1}, Flavor::GL);
    return p;
}

void confluence(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(check_confluence(dq().rewrite, 4));
}
void confluence_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(check_confluence_serial(dq().rewrite, 4));
}

void linear_dims(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(graded_dimensions_linear(dq().reduced, 8, 3));
}
void linear_dims_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(graded_dimensions_linear_serial(dq().reduced, 8, 3));
}

void ore_identities(benchmark::State& st) {
    auto fam = make_family(OreId::S4, a21(), 0);
    for (auto _ : st) benchmark::DoNotOptimize(verify_printed_identities(fam, a21(), {-4, -2, 0, 2, 4}, 4));
}
void ore_identities_serial(benchmark::State& st) {
    auto fam = make_family(OreId::S4, a21(), 0);
    for (auto _ : st) benchmark::DoNotOptimize(verify_printed_identities_serial(fam, a21(), {-4, -2, 0, 2, 4}, 4));
}

struct ImageInput {
    KoszulComplex kc;
    TruncatedModule m;
};

const ImageInput& image_input() {
    static const ImageInput in = [] {
        auto t = transfer_bimodule({1, 1, Flavor::GL, TransferKind::Nonseparating}, 5, Side::Left);
        return ImageInput{build_koszul(t.ambient, 0, Flavor::GL), t.module};
    }();
    return in;
}

void inverse_image(benchmark::State& st) {
    const auto& in = image_input();
    for (auto _ : st) benchmark::DoNotOptimize(truncated_inverse_image(in.kc, in.m));
}
void inverse_image_serial(benchmark::State& st) {
    const auto& in = image_input();
    for (auto _ : st) benchmark::DoNotOptimize(truncated_inverse_image_serial(in.kc, in.m));
}

}  // namespace

BENCHMARK(confluence)->Unit(benchmark::kMillisecond);
BENCHMARK(confluence_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(linear_dims)->Unit(benchmark::kMillisecond);
BENCHMARK(linear_dims_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(ore_identities)->Unit(benchmark::kMillisecond);
BENCHMARK(ore_identities_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(inverse_image)->Unit(benchmark::kMillisecond);
BENCHMARK(inverse_image_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
