#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scalemate/errors.hpp"
#include "scalemate/evaluate.hpp"
#include "scalemate/extract.hpp"
#include "scalemate/filters.hpp"
#include "scalemate/pairs.hpp"
#include "scalemate/pipeline.hpp"
#include "scalemate/similarity.hpp"
#include "scalemate/synth.hpp"
#include "scalemate/text.hpp"

namespace {

using namespace scalemate;
using ordered_json = nlohmann::ordered_json;

double round2(double value) {
    return std::round(value * 100.0) / 100.0;
}

CorpusFormat parse_format(const std::string& name) {
    auto format = corpus_format_from_string(name);
    if (!format) throw ConfigError("unknown corpus format: " + name);
    return *format;
}

UnknownPolicy parse_policy(const std::string& name) {
    auto policy = unknown_policy_from_string(name);
    if (!policy) throw ConfigError("unknown-policy must be 'keep' or 'drop', got: " + name);
    return *policy;
}

struct ExtractArgs {
    std::vector<std::string> corpus;
    std::string format = "underscore";
    std::string out;
    std::string adjective_tags = "JJ,JJR,JJS";
    bool strip_punct = true;
    int jobs = 1;
    std::uint64_t chunk_bytes = 8u << 20;
};

int cmd_extract(const ExtractArgs& args) {
    ExtractOptions options;
    options.match.adjective_tags = parse_tag_set(args.adjective_tags);
    if (options.match.adjective_tags.empty()) throw ConfigError("adjective tag set is empty");
    options.match.strip_punct = args.strip_punct;
    options.jobs = args.jobs;
    options.chunk_bytes = args.chunk_bytes;
    ExtractResult result = extract_parallel(args.corpus, parse_format(args.format), options);
    write_matches_tsv(result, args.out);
    std::cerr << "extracted " << result.matches.size() << " matches from "
              << result.stats.sentences << " sentences (" << result.stats.skipped
              << " lines skipped)\n";
    return 0;
}

struct AggregateArgs {
    std::string matches;
    std::string out;
    double min_direction_ratio = 0.0;
};

int cmd_aggregate(const AggregateArgs& args) {
    Aggregator aggregator;
    for (const MatchRow& row : read_matches_tsv(args.matches)) {
        aggregator.add(row.pattern, row.weak, row.strong);
    }
    std::vector<PairRecord> records = aggregator.finish({args.min_direction_ratio});
    write_pairs_tsv(records, args.out);
    std::size_t ties = 0;
    for (const PairRecord& record : records) {
        if (record.tie()) ++ties;
    }
    std::cerr << "aggregated " << records.size() << " pairs (" << ties << " ties)\n";
    return 0;
}

int cmd_stats(const std::string& pairs_path) {
    std::vector<PairRecord> records = read_pairs_tsv(pairs_path);
    auto histogram = pattern_type_histogram(records);
    std::size_t ties = 0;
    for (const PairRecord& record : records) {
        if (record.tie()) ++ties;
    }
    std::cout << "patterns";
    for (int n = 1; n <= kPatternCount; ++n) std::cout << '\t' << n;
    std::cout << "\npairs";
    for (int n = 1; n <= kPatternCount; ++n) std::cout << '\t' << histogram[n];
    std::cout << "\n";
    std::cout << "total_pairs\t" << records.size() << "\n";
    std::cout << "resolved_pairs\t" << records.size() - ties << "\n";
    std::cout << "tie_pairs\t" << ties << "\n";
    return 0;
}

struct FilterArgs {
    std::string pairs;
    std::string out;
    std::string measure;
    std::string resource;
    double tau = 0.0;
    std::string unknown = "drop";
    std::string antonyms;
    std::string polarity_pos;
    std::string polarity_neg;
    std::string polarity_unknown = "keep";
    std::string apply = "auto";
};

int cmd_filter(const FilterArgs& args) {
    std::vector<PairRecord> records = read_pairs_tsv(args.pairs);
    std::size_t input_count = records.size();

    if (!args.measure.empty()) {
        auto kind = measure_kind_from_string(args.measure);
        if (!kind) throw ConfigError("unknown measure: " + args.measure);
        if (args.resource.empty()) throw ConfigError("--measure needs --resource");
        auto measure = load_measure(*kind, args.resource, args.tau);
        records = filter_by_similarity(records, *measure, parse_policy(args.unknown));
    } else if (!args.resource.empty()) {
        throw ConfigError("--resource needs --measure");
    }

    bool has_polarity = !args.polarity_pos.empty() || !args.polarity_neg.empty();
    if (!args.polarity_pos.empty() != !args.polarity_neg.empty()) {
        throw ConfigError("polarity filtering needs both --polarity-pos and --polarity-neg");
    }
    bool apply_antonym, apply_polarity;
    if (args.apply == "auto") {
        apply_antonym = !args.antonyms.empty();
        apply_polarity = has_polarity;
    } else if (args.apply == "antonym") {
        apply_antonym = true;
        apply_polarity = false;
    } else if (args.apply == "polarity") {
        apply_antonym = false;
        apply_polarity = true;
    } else if (args.apply == "both") {
        apply_antonym = true;
        apply_polarity = true;
    } else {
        throw ConfigError("--apply must be antonym, polarity or both");
    }

    if (apply_antonym) {
        AntonymLexicon lexicon;
        if (!args.antonyms.empty()) lexicon = AntonymLexicon::load(args.antonyms);
        records = antonym_filter(records, lexicon);
    }
    if (apply_polarity) {
        if (!has_polarity) throw ConfigError("polarity filtering needs --polarity-pos/--polarity-neg");
        PolarityLexicon lexicon = PolarityLexicon::load(args.polarity_pos, args.polarity_neg);
        records = polarity_filter(records, lexicon, parse_policy(args.polarity_unknown));
    }

    write_pairs_tsv(records, args.out);
    std::cerr << "kept " << records.size() << " of " << input_count << " pairs\n";
    return 0;
}

struct EvaluateArgs {
    std::string pairs;
    std::string subj;
    std::string norms;
    std::string norms_word_column = "Word";
    std::string norms_value_column = "A.Mean.Sum";
    std::string mode = "all";
    double min_arousal_gap = 0.0;
    bool include_non_adjectives = false;
    std::string report = "report.json";
};

int cmd_evaluate(const EvaluateArgs& args) {
    bool want_subj = args.mode == "all" || args.mode == "subj" || args.mode == "agreement" ||
                     args.mode == "combined";
    bool want_norms = args.mode == "all" || args.mode == "arousal" || args.mode == "agreement" ||
                      args.mode == "combined";
    if (args.mode != "all" && args.mode != "subj" && args.mode != "arousal" &&
        args.mode != "agreement" && args.mode != "combined") {
        throw ConfigError("--mode must be subj, arousal, agreement, combined or all");
    }
    if (want_subj && args.subj.empty()) throw ConfigError("mode '" + args.mode + "' needs --subj");
    if (want_norms && args.norms.empty()) throw ConfigError("mode '" + args.mode + "' needs --norms");

    std::vector<PairRecord> records = read_pairs_tsv(args.pairs);

    SubjectivityLexicon subjectivity;
    if (!args.subj.empty()) {
        subjectivity = load_subjectivity_lexicon(args.subj, {!args.include_non_adjectives});
    }
    ArousalNorms norms;
    if (!args.norms.empty()) {
        NormsLoadOptions options;
        options.word_column = args.norms_word_column;
        options.value_column = args.norms_value_column;
        norms = load_norms_csv(args.norms, options);
    }

    ordered_json reports;
    bool both = !args.subj.empty() && !args.norms.empty();
    reports["subjectivity"] = ordered_json(nullptr);
    reports["arousal"] = ordered_json(nullptr);
    reports["agreement"] = ordered_json(nullptr);
    reports["combined"] = ordered_json(nullptr);
    auto emit = [](const EvaluationReport& report) {
        return ordered_json{{"test", report.test_count},
                            {"correct", report.correct_count},
                            {"accuracy", round2(report.accuracy)}};
    };
    if ((args.mode == "all" || args.mode == "subj") && !args.subj.empty()) {
        reports["subjectivity"] = emit(eval_subjectivity(records, subjectivity));
    }
    if ((args.mode == "all" || args.mode == "arousal") && !args.norms.empty()) {
        reports["arousal"] = emit(eval_arousal(records, norms, args.min_arousal_gap));
    }
    if ((args.mode == "all" && both) || args.mode == "agreement" || args.mode == "combined") {
        AgreementResult agreement = dataset_agreement(records, subjectivity, norms, args.min_arousal_gap);
        reports["agreement"] = ordered_json{{"compared", agreement.compared},
                                            {"agreed", agreement.agreed},
                                            {"percent", round2(agreement.percent)}};
        if (args.mode != "agreement") {
            reports["combined"] = emit(eval_combined(records, agreement));
        }
    }

    ordered_json out;
    out["schema_version"] = 1;
    out["config"] = ordered_json{{"pairs", args.pairs},
                                 {"subj", args.subj},
                                 {"norms", args.norms},
                                 {"norms_word_column", args.norms_word_column},
                                 {"norms_value_column", args.norms_value_column},
                                 {"mode", args.mode},
                                 {"min_arousal_gap", args.min_arousal_gap},
                                 {"adjectives_only", !args.include_non_adjectives}};
    out["reports"] = std::move(reports);

    std::ofstream file(args.report, std::ios::binary);
    if (!file) throw IoError("cannot write report: " + args.report);
    file << out.dump(2) << '\n';
    file.flush();
    if (!file) throw IoError("write failed: " + args.report);
    std::cerr << "wrote " << args.report << "\n";
    return 0;
}

struct SynthArgs {
    std::string out;
    std::string manifest;
    std::vector<std::string> plants;
    std::size_t noise = 0;
    std::uint64_t seed = 0;
    double punct_prob = 0.0;
    std::size_t decoys = 0;
};

int cmd_synth(const SynthArgs& args) {
    SynthSpec spec;
    spec.noise_sentences = args.noise;
    spec.seed = args.seed;
    spec.punct_prob = args.punct_prob;
    spec.decoy_sentences = args.decoys;
    for (const std::string& plant : args.plants) {
        auto fields = split_char(plant, ':');
        if (fields.size() != 4) {
            throw ConfigError("plant must be PATTERN:weak:strong:count, got: " + plant);
        }
        auto pattern = pattern_from_string(fields[0]);
        if (!pattern) throw ConfigError("unknown pattern id: " + std::string(fields[0]));
        PlantSpec p;
        p.pattern = *pattern;
        p.weak = std::string(fields[1]);
        p.strong = std::string(fields[2]);
        p.count = std::stoull(std::string(fields[3]));
        spec.plants.push_back(std::move(p));
    }
    SynthResult result = synth_corpus_files(spec, args.out, args.manifest);
    std::cerr << "wrote " << result.sentences << " sentences to " << args.out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    // The config option lives on the top-level app; accept it anywhere on the
    // command line by hoisting it in front of the subcommand.
    std::vector<std::string> args;
    std::vector<std::string> hoisted;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) {
            hoisted.push_back(arg);
            hoisted.push_back(argv[++i]);
        } else if (arg.rfind("--config=", 0) == 0) {
            hoisted.push_back(arg);
        } else {
            args.push_back(arg);
        }
    }
    args.insert(args.begin(), hoisted.begin(), hoisted.end());

    CLI::App app{"scalemate: mine ordered scalar-adjective pairs from tagged corpora"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Configuration file (INI format, [subcommand] sections)")
        ->envname("SCALEMATE_CONFIG");

    ExtractArgs extract_args;
    CLI::App* extract = app.add_subcommand("extract", "Match the six patterns over tagged corpora");
    extract->add_option("--corpus", extract_args.corpus, "Corpus file(s)")->required();
    extract->add_option("--format", extract_args.format, "Corpus format: underscore | tsv")
        ->capture_default_str();
    extract->add_option("--out", extract_args.out, "Output matches TSV")->required();
    extract->add_option("--adjective-tags,--adjective_tags", extract_args.adjective_tags,
                        "Comma-separated adjective tag set")
        ->capture_default_str();
    extract->add_flag("--strip-punct,!--no-strip-punct", extract_args.strip_punct,
                      "Drop punctuation-tagged tokens before matching (default on)");
    extract->add_option("--jobs", extract_args.jobs, "Worker threads (0 = all)")->capture_default_str();
    extract->add_option("--chunk-bytes", extract_args.chunk_bytes, "Shard split granularity")
        ->capture_default_str();

    AggregateArgs aggregate_args;
    CLI::App* aggregate = app.add_subcommand("aggregate", "Collapse matches into ordered pairs");
    aggregate->add_option("--matches", aggregate_args.matches, "matches.tsv from extract")->required();
    aggregate->add_option("--out", aggregate_args.out, "Output pairs TSV")->required();
    aggregate->add_option("--min-direction-ratio", aggregate_args.min_direction_ratio,
                          "Optional majority reliability threshold in [0,1]")
        ->capture_default_str();

    std::string stats_pairs;
    CLI::App* stats = app.add_subcommand("stats", "Pattern-type histogram of a pairs file");
    stats->add_option("--pairs", stats_pairs, "pairs.tsv")->required();

    FilterArgs filter_args;
    CLI::App* filter = app.add_subcommand("filter", "Similarity, antonym and polarity filtering");
    filter->add_option("--pairs", filter_args.pairs, "Input pairs TSV")->required();
    filter->add_option("--out", filter_args.out, "Output pairs TSV")->required();
    filter->add_option("--measure", filter_args.measure, "vector | attribute | thesaurus");
    filter->add_option("--resource", filter_args.resource, "Similarity resource file");
    filter->add_option("--tau", filter_args.tau, "Cosine threshold (vector measure)")
        ->capture_default_str();
    filter->add_option("--unknown", filter_args.unknown, "Out-of-vocabulary pairs: keep | drop")
        ->capture_default_str();
    filter->add_option("--antonyms", filter_args.antonyms, "Antonym pair TSV");
    filter->add_option("--polarity-pos", filter_args.polarity_pos, "Positive word list");
    filter->add_option("--polarity-neg", filter_args.polarity_neg, "Negative word list");
    filter->add_option("--polarity-unknown", filter_args.polarity_unknown,
                       "Pairs with uncovered words: keep | drop")
        ->capture_default_str();
    filter->add_option("--apply", filter_args.apply,
                       "antonym | polarity | both (default: stages with resources given)");

    EvaluateArgs evaluate_args;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Score pair orderings against lexicons");
    evaluate->add_option("--pairs", evaluate_args.pairs, "Input pairs TSV")->required();
    evaluate->add_option("--subj", evaluate_args.subj, "Subjectivity lexicon (key=value lines)");
    evaluate->add_option("--norms", evaluate_args.norms, "Arousal norms CSV");
    evaluate->add_option("--norms-word-column", evaluate_args.norms_word_column, "CSV word column")
        ->capture_default_str();
    evaluate->add_option("--norms-value-column", evaluate_args.norms_value_column, "CSV value column")
        ->capture_default_str();
    evaluate->add_option("--mode", evaluate_args.mode, "subj | arousal | agreement | combined | all")
        ->capture_default_str();
    evaluate->add_option("--min-arousal-gap", evaluate_args.min_arousal_gap,
                         "Minimum arousal difference for a contrast")
        ->capture_default_str();
    evaluate->add_flag("--include-non-adjectives", evaluate_args.include_non_adjectives,
                       "Keep subjectivity entries of every POS");
    evaluate->add_option("--report", evaluate_args.report, "Output report JSON")->capture_default_str();

    PipelineConfig pipeline_config;
    std::string pipeline_format = "underscore";
    std::string pipeline_measure;
    std::string pipeline_similarity_unknown = "drop";
    std::string pipeline_polarity_unknown = "keep";
    CLI::App* pipeline = app.add_subcommand("pipeline", "extract -> aggregate -> filter -> evaluate");
    pipeline->add_option("--corpus", pipeline_config.corpus_paths, "Corpus file(s)")->required();
    pipeline->add_option("--format", pipeline_format, "underscore | tsv")->capture_default_str();
    pipeline->add_option("--adjective-tags,--adjective_tags", pipeline_config.adjective_tags,
                         "Comma-separated adjective tag set")
        ->capture_default_str();
    pipeline->add_flag("--strip-punct,!--no-strip-punct", pipeline_config.strip_punct,
                       "Drop punctuation-tagged tokens before matching (default on)");
    pipeline->add_option("--jobs", pipeline_config.jobs, "Worker threads (0 = all)")
        ->capture_default_str();
    pipeline->add_option("--chunk-bytes", pipeline_config.chunk_bytes, "Shard split granularity")
        ->capture_default_str();
    pipeline->add_option("--min-direction-ratio", pipeline_config.min_direction_ratio,
                         "Optional majority reliability threshold in [0,1]")
        ->capture_default_str();
    pipeline->add_option("--measure", pipeline_measure, "vector | attribute | thesaurus");
    pipeline->add_option("--resource", pipeline_config.measure_resource, "Similarity resource file");
    pipeline->add_option("--tau", pipeline_config.tau, "Cosine threshold")->capture_default_str();
    pipeline->add_option("--unknown", pipeline_similarity_unknown, "keep | drop")->capture_default_str();
    pipeline->add_option("--antonyms", pipeline_config.antonyms_path, "Antonym pair TSV");
    pipeline->add_option("--polarity-pos", pipeline_config.polarity_positive_path, "Positive word list");
    pipeline->add_option("--polarity-neg", pipeline_config.polarity_negative_path, "Negative word list");
    pipeline->add_option("--polarity-unknown", pipeline_polarity_unknown, "keep | drop")
        ->capture_default_str();
    pipeline->add_option("--subj", pipeline_config.subjectivity_path, "Subjectivity lexicon");
    pipeline->add_flag("--include-non-adjectives",
                       [&pipeline_config](std::int64_t) { pipeline_config.subjectivity_adjectives_only = false; },
                       "Keep subjectivity entries of every POS");
    pipeline->add_option("--norms", pipeline_config.norms_path, "Arousal norms CSV");
    pipeline->add_option("--norms-word-column", pipeline_config.norms_word_column, "CSV word column")
        ->capture_default_str();
    pipeline->add_option("--norms-value-column", pipeline_config.norms_value_column, "CSV value column")
        ->capture_default_str();
    pipeline->add_option("--min-arousal-gap", pipeline_config.min_arousal_gap,
                         "Minimum arousal difference for a contrast")
        ->capture_default_str();
    pipeline->add_option("--out-dir", pipeline_config.out_dir, "Output directory")->capture_default_str();

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand("synth", "Generate a deterministic synthetic corpus");
    synth->add_option("--out", synth_args.out, "Output corpus file")->required();
    synth->add_option("--manifest", synth_args.manifest, "Expected-match manifest TSV");
    synth->add_option("--plant", synth_args.plants, "PATTERN:weak:strong:count (repeatable)");
    synth->add_option("--noise", synth_args.noise, "Noise sentence count")->capture_default_str();
    synth->add_option("--seed", synth_args.seed, "RNG seed")->capture_default_str();
    synth->add_option("--punct-prob", synth_args.punct_prob, "Comma-injection probability")
        ->capture_default_str();
    synth->add_option("--decoys", synth_args.decoys, "Template sentences with non-adjective slots")
        ->capture_default_str();

    try {
        std::reverse(args.begin(), args.end()); // CLI11 consumes args back to front
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (extract->parsed()) return cmd_extract(extract_args);
        if (aggregate->parsed()) return cmd_aggregate(aggregate_args);
        if (stats->parsed()) return cmd_stats(stats_pairs);
        if (filter->parsed()) return cmd_filter(filter_args);
        if (evaluate->parsed()) return cmd_evaluate(evaluate_args);
        if (pipeline->parsed()) {
            pipeline_config.format = parse_format(pipeline_format);
            if (!pipeline_measure.empty()) {
                auto kind = measure_kind_from_string(pipeline_measure);
                if (!kind) throw ConfigError("unknown measure: " + pipeline_measure);
                pipeline_config.measure = *kind;
            }
            pipeline_config.similarity_unknown = parse_policy(pipeline_similarity_unknown);
            pipeline_config.polarity_unknown = parse_policy(pipeline_polarity_unknown);
            PipelineResult result = run_pipeline(pipeline_config);
            std::cerr << "pipeline wrote " << result.written.size() << " files under "
                      << pipeline_config.out_dir << "\n";
            return 0;
        }
        if (synth->parsed()) return cmd_synth(synth_args);
    } catch (const std::exception& e) {
        std::cerr << "scalemate: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
