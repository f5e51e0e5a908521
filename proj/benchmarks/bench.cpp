#include <benchmark/benchmark.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sentivote/corpus.hpp"
#include "sentivote/lexicon.hpp"
#include "sentivote/model.hpp"
#include "sentivote/synth.hpp"

using namespace sentivote;

namespace {

const std::vector<CandidateSpec> kSpecs = {{1, {"obama"}}, {2, {"romney"}}};

Lexicon sample_lexicon() {
    return Lexicon::from_file(std::string(SENTIVOTE_DATA_DIR) + "/afinn_sample.txt");
}

std::string synth_corpus(std::uint64_t n, const Lexicon& lexicon) {
    SynthSpec spec;
    spec.planted_e = {0.6, 0.4};
    spec.n_tweets = n;
    spec.start_date = "2012-08-12";
    spec.end_date = "2012-10-31";
    spec.seed = 1;
    spec.positive_vocab = {"good", "great", "win", "hope", "strong"};
    spec.negative_vocab = {"bad", "sad", "weak"};
    return generate_corpus(spec, lexicon);
}

}  // namespace

static void BM_Tokenize(benchmark::State& state) {
    const std::string text = "Obama had a good day but Romney keeps winning the news cycle";
    for (auto _ : state) {
        benchmark::DoNotOptimize(tokenize(text));
    }
}
BENCHMARK(BM_Tokenize);

static void BM_ScoreText(benchmark::State& state) {
    const auto lexicon = sample_lexicon();
    const std::string text = "great rally tonight, terrible polling news for the other side";
    for (auto _ : state) {
        benchmark::DoNotOptimize(score_text(lexicon, text));
    }
}
BENCHMARK(BM_ScoreText);

static void BM_Ingest(benchmark::State& state) {
    const auto lexicon = sample_lexicon();
    const auto jsonl = synth_corpus(static_cast<std::uint64_t>(state.range(0)), lexicon);
    for (auto _ : state) {
        std::istringstream in(jsonl);
        benchmark::DoNotOptimize(ingest_tweets(in, kSpecs, {}));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ingest)->Arg(1000)->Arg(10000);

static void BM_BucketByDay(benchmark::State& state) {
    const auto lexicon = sample_lexicon();
    const auto jsonl = synth_corpus(10000, lexicon);
    std::istringstream in(jsonl);
    const auto corpus = ingest_tweets(in, kSpecs, {});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            bucket_by_day(corpus, lexicon, kSpecs, BothPolicy::CountBoth,
                          static_cast<unsigned>(state.range(0))));
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_BucketByDay)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
