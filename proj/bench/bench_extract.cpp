// Compares the serial reference extractor against the OpenMP one on a
// generated corpus and reports throughput. Not part of the test suite.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>

#include "scalemate/extract.hpp"
#include "scalemate/synth.hpp"

using namespace scalemate;

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
#endif
}

} // namespace

int main(int argc, char** argv) {
    std::size_t noise = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 400000;
    int jobs = argc > 2 ? std::atoi(argv[2]) : 0;

    std::filesystem::path dir = std::filesystem::temp_directory_path() / "scalemate_bench";
    std::filesystem::create_directories(dir);
    std::string corpus = (dir / "corpus.txt").string();

    SynthSpec spec;
    spec.seed = 7;
    spec.noise_sentences = noise;
    spec.decoy_sentences = noise / 50;
    spec.punct_prob = 0.2;
    const char* adjectives[] = {"warm", "hot",  "big",   "huge", "good", "great",
                                "odd",  "rare", "plain", "fine", "calm", "wild"};
    for (int i = 0; i < 60; ++i) {
        PlantSpec plant;
        plant.pattern = kAllPatterns[i % kPatternCount];
        plant.weak = adjectives[i % 12];
        plant.strong = adjectives[(i + 5) % 12];
        plant.count = 25;
        spec.plants.push_back(plant);
    }
    std::printf("generating %zu sentences...\n", noise + 1500 + spec.decoy_sentences);
    synth_corpus_files(spec, corpus, "");

    auto size_mb = static_cast<double>(std::filesystem::file_size(corpus)) / (1024.0 * 1024.0);
    std::vector<std::string> paths = {corpus};

    MatchOptions match;
    double t0 = now_seconds();
    ExtractResult serial = extract_serial(paths, CorpusFormat::Underscore, match);
    double serial_time = now_seconds() - t0;

    ExtractOptions options;
    options.match = match;
    options.jobs = jobs;
    options.chunk_bytes = 1u << 20;
    t0 = now_seconds();
    ExtractResult parallel = extract_parallel(paths, CorpusFormat::Underscore, options);
    double parallel_time = now_seconds() - t0;

    bool identical = serial.matches == parallel.matches && serial.stats == parallel.stats;
    std::printf("corpus            %.1f MB, %zu sentences\n", size_mb, serial.stats.sentences);
    std::printf("serial            %.3f s  (%.1f MB/s), %zu matches\n", serial_time,
                size_mb / serial_time, serial.matches.size());
    std::printf("parallel (%2d)     %.3f s  (%.1f MB/s), %zu matches\n",
#ifdef _OPENMP
                jobs > 0 ? jobs : omp_get_max_threads(),
#else
                1,
#endif
                parallel_time, size_mb / parallel_time, parallel.matches.size());
    std::printf("speedup           %.2fx\n", serial_time / parallel_time);
    std::printf("outputs identical %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
