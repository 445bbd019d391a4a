// Microbenchmarks for the hot paths: suffix-index construction, per-k
// segmentation rows, and spectrum extraction, on synthetic DNA of varying
// length. Run ./kspect_bench --benchmark_filter=... to narrow down.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "kspect/genome.hpp"
#include "kspect/segmentation.hpp"
#include "kspect/spectrum.hpp"
#include "kspect/suffix_index.hpp"

namespace {

kspect::Genome random_dna(uint64_t length, uint32_t seed) {
    static const char symbols[] = {'a', 'c', 'g', 't'};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    std::string text(length, 'a');
    for (auto& c : text) c = symbols[pick(rng)];
    return kspect::Genome::from_text("bench", text, kspect::Alphabet::dna());
}

void BM_SuffixIndexBuild(benchmark::State& state) {
    const auto g = random_dna(static_cast<uint64_t>(state.range(0)), 7);
    for (auto _ : state) {
        kspect::SuffixIndex index(g);
        benchmark::DoNotOptimize(index.max_repeat_length());
    }
    state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SuffixIndexBuild)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20);

void BM_SegmentRow(benchmark::State& state) {
    const auto g = random_dna(static_cast<uint64_t>(state.range(0)), 11);
    const kspect::SuffixIndex index(g);
    for (auto _ : state) {
        auto row = kspect::segment_genome_row(index, 16);
        benchmark::DoNotOptimize(row.maximals);
    }
    state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SegmentRow)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20);

void BM_Spectrum(benchmark::State& state) {
    const auto g = random_dna(static_cast<uint64_t>(state.range(0)), 13);
    for (auto _ : state) {
        auto spec = kspect::compute_spectrum(g, 12);
        benchmark::DoNotOptimize(spec.size());
    }
    state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_Spectrum)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20);

void BM_Sweep(benchmark::State& state) {
    const auto g = random_dna(1 << 17, 17);
    const kspect::SuffixIndex index(g);
    const unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto rows = kspect::sweep(index, 8, 23, threads);
        benchmark::DoNotOptimize(rows.size());
    }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4);

} // namespace

BENCHMARK_MAIN();
