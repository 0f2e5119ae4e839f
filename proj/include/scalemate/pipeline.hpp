#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scalemate/corpus.hpp"
#include "scalemate/evaluate.hpp"
#include "scalemate/extract.hpp"
#include "scalemate/similarity.hpp"

namespace scalemate {

struct PipelineConfig {
    // extraction
    std::vector<std::string> corpus_paths;
    CorpusFormat format = CorpusFormat::Underscore;
    std::string adjective_tags = "JJ,JJR,JJS";
    bool strip_punct = true;
    int jobs = 1;
    std::uint64_t chunk_bytes = 8u << 20;

    // aggregation
    double min_direction_ratio = 0.0;

    // similarity stage (optional)
    std::optional<MeasureKind> measure;
    std::string measure_resource;
    double tau = 0.0;
    UnknownPolicy similarity_unknown = UnknownPolicy::Drop;

    // antonym / polarity filters (lexicons optional)
    std::string antonyms_path;
    std::string polarity_positive_path;
    std::string polarity_negative_path;
    UnknownPolicy polarity_unknown = UnknownPolicy::Keep;

    // evaluation (optional)
    std::string subjectivity_path;
    bool subjectivity_adjectives_only = true;
    std::string norms_path;
    std::string norms_word_column = "Word";
    std::string norms_value_column = "A.Mean.Sum";
    double min_arousal_gap = 0.0;

    std::string out_dir = ".";
};

struct PipelineResult {
    std::vector<std::string> written; // final paths, in write order
    std::string report_path;
};

// Full run: extract -> aggregate -> similarity filter -> antonym/polarity
// variants -> evaluation, writing matches.tsv, pairs.tsv, per-variant pair
// files and report.json under out_dir. Configuration errors (missing files,
// bad column names) surface before any output is produced, and each output
// file is promoted atomically from a temporary name. Reruns with identical
// inputs produce byte-identical files.
PipelineResult run_pipeline(const PipelineConfig& config);

// Validation half of run_pipeline; throws ConfigError on the first problem.
void validate_pipeline_config(const PipelineConfig& config);

} // namespace scalemate
