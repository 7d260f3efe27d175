// Microbenchmarks for the pipeline stages. The bundled 17-factor corpus
// sets the realistic baseline; the synthetic sizes show how the bitset
// closure and the partition scale well past it.

#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ismkit/ism.hpp"
#include "ismkit/reachability.hpp"
#include "ismkit/ssim.hpp"
#include "ismkit/survey.hpp"

using namespace ismkit;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::filesystem::path data_dir() { return ISMKIT_SOURCE_DATA_DIR; }

const SsimMatrix& corpus_ssim() {
    static SsimMatrix ssim = parse_ssim(read_file(data_dir() / "corpus" / "ssim.csv"));
    return ssim;
}

// Reflexive random relation; density ~2/n keeps the edge count linear so
// larger sizes stay structurally comparable.
ReachabilityMatrix random_relation(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(2.0 / static_cast<double>(n));
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        ids.push_back("F" + std::to_string(i + 1));
    std::vector<CellOrigin> cells(n * n, CellOrigin::Zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i == j)
                cells[i * n + j] = CellOrigin::Diagonal;
            else if (coin(rng))
                cells[i * n + j] = CellOrigin::Direct;
    return ReachabilityMatrix(std::move(ids), std::move(cells));
}

void BM_ClosureCorpus(benchmark::State& state) {
    ReachabilityMatrix initial = to_initial_reachability(corpus_ssim());
    for (auto _ : state)
        benchmark::DoNotOptimize(transitive_closure(initial));
}
BENCHMARK(BM_ClosureCorpus);

void BM_ClosureRandom(benchmark::State& state) {
    ReachabilityMatrix initial = random_relation(state.range(0), 1234);
    for (auto _ : state)
        benchmark::DoNotOptimize(transitive_closure(initial));
}
BENCHMARK(BM_ClosureRandom)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_PartitionCorpus(benchmark::State& state) {
    ReachabilityMatrix closed = transitive_closure(to_initial_reachability(corpus_ssim()));
    for (auto _ : state)
        benchmark::DoNotOptimize(partition_levels(closed));
}
BENCHMARK(BM_PartitionCorpus);

void BM_PartitionRandom(benchmark::State& state) {
    ReachabilityMatrix closed = transitive_closure(random_relation(state.range(0), 5678));
    for (auto _ : state)
        benchmark::DoNotOptimize(partition_levels(closed));
}
BENCHMARK(BM_PartitionRandom)->Arg(32)->Arg(64)->Arg(128);

void BM_FullPipelineCorpus(benchmark::State& state) {
    const SsimMatrix& ssim = corpus_ssim();
    for (auto _ : state)
        benchmark::DoNotOptimize(run_ism(ssim));
}
BENCHMARK(BM_FullPipelineCorpus);

void BM_SurveyAggregate(benchmark::State& state) {
    SurveyData data = parse_survey_csv(read_file(data_dir() / "fixtures" / "survey_113.csv"));
    for (auto _ : state)
        benchmark::DoNotOptimize(aggregate_frequencies(data, nullptr));
}
BENCHMARK(BM_SurveyAggregate);

} // namespace

BENCHMARK_MAIN();
