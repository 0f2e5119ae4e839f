#include "scalemate/pipeline.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>

#include <json.hpp>

#include "scalemate/errors.hpp"
#include "scalemate/filters.hpp"
#include "scalemate/pairs.hpp"

namespace scalemate {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

double round2(double value) {
    return std::round(value * 100.0) / 100.0;
}

void require_file(const std::string& path, const std::string& what) {
    if (path.empty()) throw ConfigError(what + " path is empty");
    if (!fs::exists(path)) throw ConfigError(what + " does not exist: " + path);
}

// Write to `<path>.tmp`, then promote; a failed stage never leaves a final
// file behind.
void atomic_write(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot write: " + tmp);
        body(out);
        out.flush();
        if (!out) throw IoError("write failed: " + tmp);
    }
    fs::rename(tmp, path);
}

ordered_json report_json(const EvaluationReport& report) {
    return ordered_json{{"test", report.test_count},
                        {"correct", report.correct_count},
                        {"accuracy", round2(report.accuracy)}};
}

ordered_json config_json(const PipelineConfig& c) {
    ordered_json j;
    j["corpus"] = c.corpus_paths;
    j["format"] = std::string(to_string(c.format));
    j["adjective_tags"] = c.adjective_tags;
    j["strip_punct"] = c.strip_punct;
    j["jobs"] = c.jobs;
    j["min_direction_ratio"] = c.min_direction_ratio;
    j["measure"] = c.measure ? ordered_json(std::string(to_string(*c.measure))) : ordered_json(nullptr);
    j["measure_resource"] = c.measure_resource;
    j["tau"] = c.tau;
    j["similarity_unknown"] = c.similarity_unknown == UnknownPolicy::Drop ? "drop" : "keep";
    j["antonyms"] = c.antonyms_path;
    j["polarity_positive"] = c.polarity_positive_path;
    j["polarity_negative"] = c.polarity_negative_path;
    j["polarity_unknown"] = c.polarity_unknown == UnknownPolicy::Drop ? "drop" : "keep";
    j["subjectivity"] = c.subjectivity_path;
    j["subjectivity_adjectives_only"] = c.subjectivity_adjectives_only;
    j["norms"] = c.norms_path;
    j["norms_word_column"] = c.norms_word_column;
    j["norms_value_column"] = c.norms_value_column;
    j["min_arousal_gap"] = c.min_arousal_gap;
    j["out_dir"] = c.out_dir;
    return j;
}

struct Variant {
    std::string name;
    std::vector<PairRecord> records;
    std::string file; // empty for the unfiltered variant (it is pairs.tsv / pairs_similar.tsv)
};

ordered_json pair_stats_json(std::span<const PairRecord> records) {
    std::size_t ties = 0;
    for (const PairRecord& record : records) {
        if (record.tie()) ++ties;
    }
    auto histogram = pattern_type_histogram(records);
    ordered_json hist;
    for (int n = 1; n <= kPatternCount; ++n) hist[std::to_string(n)] = histogram[n];
    return ordered_json{{"total", records.size()},
                        {"resolved", records.size() - ties},
                        {"ties", ties},
                        {"pattern_type_histogram", hist}};
}

} // namespace

void validate_pipeline_config(const PipelineConfig& config) {
    if (config.corpus_paths.empty()) throw ConfigError("no corpus paths configured");
    for (const std::string& path : config.corpus_paths) require_file(path, "corpus file");
    if (parse_tag_set(config.adjective_tags).empty()) {
        throw ConfigError("adjective tag set is empty");
    }
    if (config.tau < -1.0 || config.tau > 1.0) throw ConfigError("tau must be within [-1, 1]");
    if (config.jobs < 0) throw ConfigError("jobs must be >= 0");
    if (config.min_direction_ratio < 0.0 || config.min_direction_ratio > 1.0) {
        throw ConfigError("min_direction_ratio must be within [0, 1]");
    }
    if (config.measure) require_file(config.measure_resource, "similarity resource");
    if (!config.antonyms_path.empty()) require_file(config.antonyms_path, "antonym lexicon");
    bool has_pos = !config.polarity_positive_path.empty();
    bool has_neg = !config.polarity_negative_path.empty();
    if (has_pos != has_neg) {
        throw ConfigError("polarity lexicon needs both a positive and a negative word list");
    }
    if (has_pos) {
        require_file(config.polarity_positive_path, "positive word list");
        require_file(config.polarity_negative_path, "negative word list");
    }
    if (!config.subjectivity_path.empty()) require_file(config.subjectivity_path, "subjectivity lexicon");
    if (!config.norms_path.empty()) require_file(config.norms_path, "norms file");
    if (config.out_dir.empty()) throw ConfigError("out_dir is empty");
}

PipelineResult run_pipeline(const PipelineConfig& config) {
    validate_pipeline_config(config);

    // Load every configured resource before touching the output directory.
    std::unique_ptr<SimilarityMeasure> measure;
    if (config.measure) measure = load_measure(*config.measure, config.measure_resource, config.tau);

    AntonymLexicon antonyms; // morphological rule applies even with no lexicon
    if (!config.antonyms_path.empty()) antonyms = AntonymLexicon::load(config.antonyms_path);

    bool has_polarity = !config.polarity_positive_path.empty();
    PolarityLexicon polarity;
    if (has_polarity) {
        polarity = PolarityLexicon::load(config.polarity_positive_path, config.polarity_negative_path);
    }

    bool has_subjectivity = !config.subjectivity_path.empty();
    SubjectivityLexicon subjectivity;
    if (has_subjectivity) {
        subjectivity = load_subjectivity_lexicon(config.subjectivity_path,
                                                 {config.subjectivity_adjectives_only});
    }

    bool has_norms = !config.norms_path.empty();
    ArousalNorms norms;
    if (has_norms) {
        NormsLoadOptions norm_options;
        norm_options.word_column = config.norms_word_column;
        norm_options.value_column = config.norms_value_column;
        norms = load_norms_csv(config.norms_path, norm_options);
    }

    fs::create_directories(config.out_dir);
    PipelineResult result;
    auto out_path = [&config](const std::string& name) {
        return (fs::path(config.out_dir) / name).string();
    };

    // extract
    ExtractOptions extract_options;
    extract_options.match.adjective_tags = parse_tag_set(config.adjective_tags);
    extract_options.match.strip_punct = config.strip_punct;
    extract_options.jobs = config.jobs;
    extract_options.chunk_bytes = config.chunk_bytes;
    ExtractResult extracted = extract_parallel(config.corpus_paths, config.format, extract_options);

    std::string matches_path = out_path("matches.tsv");
    atomic_write(matches_path, [&extracted](std::ostream& out) { write_matches_tsv(extracted, out); });
    result.written.push_back(matches_path);

    // aggregate
    Aggregator aggregator;
    for (const ExtractedMatch& m : extracted.matches) aggregator.add(m.match);
    std::vector<PairRecord> raw = aggregator.finish({config.min_direction_ratio});

    std::string pairs_path = out_path("pairs.tsv");
    atomic_write(pairs_path, [&raw](std::ostream& out) { write_pairs_tsv(raw, out); });
    result.written.push_back(pairs_path);

    // similarity stage
    std::vector<PairRecord> base = raw;
    if (measure) {
        base = filter_by_similarity(raw, *measure, config.similarity_unknown);
        std::string similar_path = out_path("pairs_similar.tsv");
        atomic_write(similar_path, [&base](std::ostream& out) { write_pairs_tsv(base, out); });
        result.written.push_back(similar_path);
    }

    // filter variants
    std::vector<Variant> variants;
    variants.push_back(Variant{"none", base, ""});
    variants.push_back(Variant{"antonyms", antonym_filter(base, antonyms), "pairs_antonyms.tsv"});
    if (has_polarity) {
        variants.push_back(Variant{"polarity",
                                   polarity_filter(base, polarity, config.polarity_unknown),
                                   "pairs_polarity.tsv"});
        variants.push_back(Variant{"combined",
                                   combined_filter(base, antonyms, polarity, config.polarity_unknown),
                                   "pairs_combined.tsv"});
    }
    for (const Variant& variant : variants) {
        if (variant.file.empty()) continue;
        std::string path = out_path(variant.file);
        atomic_write(path, [&variant](std::ostream& out) { write_pairs_tsv(variant.records, out); });
        result.written.push_back(path);
    }

    // evaluation
    AgreementResult agreement;
    bool has_agreement = has_subjectivity && has_norms;
    if (has_agreement) {
        agreement = dataset_agreement(base, subjectivity, norms, config.min_arousal_gap);
    }

    ordered_json report;
    report["schema_version"] = 1;
    report["config"] = config_json(config);
    report["extraction"] = ordered_json{{"files", extracted.files},
                                        {"sentences", extracted.stats.sentences},
                                        {"lines", extracted.stats.lines},
                                        {"skipped_lines", extracted.stats.skipped},
                                        {"matches", extracted.matches.size()}};
    report["pairs"] = pair_stats_json(raw);
    report["measure"] = measure ? ordered_json{{"kind", std::string(measure->name())},
                                               {"tau", config.tau},
                                               {"kept", base.size()}}
                                : ordered_json(nullptr);
    report["agreement"] = has_agreement ? ordered_json{{"compared", agreement.compared},
                                                       {"agreed", agreement.agreed},
                                                       {"percent", round2(agreement.percent)}}
                                        : ordered_json(nullptr);

    ordered_json variants_json = ordered_json::array();
    for (const Variant& variant : variants) {
        ordered_json entry;
        entry["name"] = variant.name;
        entry["pairs"] = pair_stats_json(variant.records);
        entry["subjectivity"] = has_subjectivity
                                    ? report_json(eval_subjectivity(variant.records, subjectivity))
                                    : ordered_json(nullptr);
        entry["arousal"] = has_norms
                               ? report_json(eval_arousal(variant.records, norms, config.min_arousal_gap))
                               : ordered_json(nullptr);
        entry["combined"] = has_agreement ? report_json(eval_combined(variant.records, agreement))
                                          : ordered_json(nullptr);
        variants_json.push_back(std::move(entry));
    }
    report["variants"] = std::move(variants_json);

    std::string report_path = out_path("report.json");
    atomic_write(report_path, [&report](std::ostream& out) { out << report.dump(2) << '\n'; });
    result.written.push_back(report_path);
    result.report_path = report_path;
    return result;
}

} // namespace scalemate
