#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scalemate/patterns.hpp"

namespace scalemate {

struct PlantSpec {
    PatternId pattern;
    std::string weak;
    std::string strong;
    std::size_t count = 1;
};

struct SynthSpec {
    std::vector<PlantSpec> plants;
    std::size_t noise_sentences = 0;
    std::uint64_t seed = 0;
    // Chance of one comma token inside a planted template. Punctuated plants
    // still match with punctuation stripping on (the default).
    double punct_prob = 0.0;
    // Sentences carrying template words with non-adjective slot fillers;
    // they must never match.
    std::size_t decoy_sentences = 0;
};

struct SynthResult {
    std::size_t sentences = 0;
    std::size_t punctuated_plants = 0;
};

// Writes a deterministic underscore-format corpus: each plant occurs exactly
// `count` times, shuffled among noise sentences that contain no template
// words at all. The optional manifest lists the expected match multiset as
// `pattern<TAB>weak<TAB>strong<TAB>count` rows.
//
// Plant adjectives must not collide with the templates' fixed words; that
// would make the manifest wrong, so it is rejected.
SynthResult synth_corpus(const SynthSpec& spec, std::ostream& corpus, std::ostream* manifest);

SynthResult synth_corpus_files(const SynthSpec& spec, const std::string& corpus_path,
                               const std::string& manifest_path);

// Manifest rows aggregated as (pattern, weak, strong) -> count.
struct ManifestRow {
    PatternId pattern;
    std::string weak;
    std::string strong;
    std::size_t count = 0;
};

std::vector<ManifestRow> read_manifest(const std::string& path);

} // namespace scalemate
