#include "scalemate/synth.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "scalemate/errors.hpp"
#include "scalemate/text.hpp"

namespace scalemate {

namespace {

// mt19937_64 has a standard-specified sequence, and plain modulo keeps the
// output identical across platforms (std::shuffle and the distribution
// classes do not promise that).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t below(std::uint64_t n) { return gen_() % n; }
    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p;
    }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[below(items.size())];
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

// None of these may equal a template's fixed word, so noise sentences can
// never contain a pattern occurrence.
const std::vector<std::string>& noise_words() {
    static const std::vector<std::string> words = {
        "water",  "house",  "system", "river",  "garden", "music",  "window", "market",
        "stone",  "road",   "cloud",  "forest", "paper",  "engine", "bridge", "valley",
        "runs",   "sees",   "builds", "holds",  "keeps",  "makes",  "finds",  "turns",
        "the",    "a",      "this",   "every",  "some",   "quickly", "slowly", "often",
        "green",  "small",  "deep",   "quiet",  "heavy",  "bright",
    };
    return words;
}

const std::vector<std::string>& noise_tags() {
    static const std::vector<std::string> tags = {"NN", "NNS", "VBZ", "DT", "RB", "JJ"};
    return tags;
}

const std::vector<std::string>& adjective_tags_pool() {
    static const std::vector<std::string> tags = {"JJ", "JJR", "JJS"};
    return tags;
}

bool is_fixed_template_word(const std::string& word) {
    for (const PatternTemplate& tmpl : pattern_templates()) {
        for (const TemplateSlot& slot : tmpl.slots) {
            if (slot.kind == TemplateSlot::Kind::Fixed && slot.word == word) return true;
        }
    }
    return false;
}

std::string noise_token(Rng& rng) {
    return rng.pick(noise_words()) + "_" + rng.pick(noise_tags());
}

void append_context(Rng& rng, std::size_t max_words, std::vector<std::string>& tokens) {
    std::size_t n = rng.below(max_words + 1);
    for (std::size_t i = 0; i < n; ++i) tokens.push_back(noise_token(rng));
}

// Fixed tags for the template's function words; taggers vary here and the
// matcher must not care.
std::string fixed_token(const std::string& word) {
    return word + "_IN";
}

std::vector<std::string> template_tokens(const PatternTemplate& tmpl, const std::string& adj1,
                                         const std::string& adj2, Rng& rng, bool adjective_slots) {
    std::vector<std::string> tokens;
    for (const TemplateSlot& slot : tmpl.slots) {
        if (slot.kind == TemplateSlot::Kind::Fixed) {
            tokens.push_back(fixed_token(std::string(slot.word)));
        } else {
            const std::string& adj = slot.adj_index == 0 ? adj1 : adj2;
            if (adjective_slots) {
                tokens.push_back(adj + "_" + rng.pick(adjective_tags_pool()));
            } else {
                tokens.push_back(adj + "_NN");
            }
        }
    }
    return tokens;
}

std::string plant_sentence(const PlantSpec& plant, Rng& rng, double punct_prob,
                           std::size_t* punctuated) {
    const PatternTemplate& tmpl = pattern_templates()[static_cast<int>(plant.pattern)];
    std::string adj1 = tmpl.weak_is_adj1 ? plant.weak : plant.strong;
    std::string adj2 = tmpl.weak_is_adj1 ? plant.strong : plant.weak;
    std::vector<std::string> body = template_tokens(tmpl, adj1, adj2, rng, true);
    if (rng.chance(punct_prob)) {
        // Comma at a random internal boundary, like "warm , if not hot".
        std::size_t at = 1 + rng.below(body.size() - 1);
        body.insert(body.begin() + static_cast<std::ptrdiff_t>(at), ",_,");
        if (punctuated != nullptr) ++*punctuated;
    }
    std::vector<std::string> tokens;
    append_context(rng, 3, tokens);
    tokens.insert(tokens.end(), body.begin(), body.end());
    append_context(rng, 3, tokens);
    std::string line;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) line.push_back(' ');
        line += tokens[i];
    }
    return line;
}

std::string decoy_sentence(Rng& rng) {
    const PatternTemplate& tmpl = pattern_templates()[rng.below(kPatternCount)];
    std::string w1 = rng.pick(noise_words());
    std::string w2 = rng.pick(noise_words());
    std::vector<std::string> tokens = template_tokens(tmpl, w1, w2, rng, false);
    std::string line;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) line.push_back(' ');
        line += tokens[i];
    }
    return line;
}

std::string noise_sentence(Rng& rng) {
    std::size_t n = 3 + rng.below(10);
    std::string line;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) line.push_back(' ');
        line += noise_token(rng);
    }
    return line;
}

} // namespace

SynthResult synth_corpus(const SynthSpec& spec, std::ostream& corpus, std::ostream* manifest) {
    for (const PlantSpec& plant : spec.plants) {
        if (plant.weak.empty() || plant.strong.empty() || plant.weak == plant.strong) {
            throw ConfigError("plant needs two distinct non-empty adjectives");
        }
        if (is_fixed_template_word(plant.weak) || is_fixed_template_word(plant.strong)) {
            throw ConfigError("plant adjective collides with a template word: " + plant.weak + "/" +
                              plant.strong);
        }
    }

    Rng rng(spec.seed);
    SynthResult result;

    // Special sentences (plants, then decoys) in a deterministic shuffled order.
    std::vector<std::string> special;
    for (const PlantSpec& plant : spec.plants) {
        for (std::size_t i = 0; i < plant.count; ++i) {
            special.push_back(plant_sentence(plant, rng, spec.punct_prob, &result.punctuated_plants));
        }
    }
    for (std::size_t i = 0; i < spec.decoy_sentences; ++i) special.push_back(decoy_sentence(rng));
    rng.shuffle(special);

    std::size_t total = special.size() + spec.noise_sentences;
    result.sentences = total;

    // Scatter the special sentences without materializing the noise.
    std::set<std::size_t> positions;
    while (positions.size() < special.size()) {
        positions.insert(static_cast<std::size_t>(rng.below(total)));
    }

    std::size_t next_special = 0;
    auto position_it = positions.begin();
    for (std::size_t i = 0; i < total; ++i) {
        if (position_it != positions.end() && *position_it == i) {
            corpus << special[next_special++] << '\n';
            ++position_it;
        } else {
            corpus << noise_sentence(rng) << '\n';
        }
    }

    if (manifest != nullptr) {
        *manifest << "pattern_id\tweak\tstrong\tcount\n";
        std::map<std::tuple<int, std::string, std::string>, std::size_t> totals;
        for (const PlantSpec& plant : spec.plants) {
            totals[{static_cast<int>(plant.pattern), plant.weak, plant.strong}] += plant.count;
        }
        for (const auto& [key, count] : totals) {
            *manifest << to_string(static_cast<PatternId>(std::get<0>(key))) << '\t'
                      << std::get<1>(key) << '\t' << std::get<2>(key) << '\t' << count << '\n';
        }
    }
    return result;
}

SynthResult synth_corpus_files(const SynthSpec& spec, const std::string& corpus_path,
                               const std::string& manifest_path) {
    std::ofstream corpus(corpus_path, std::ios::binary);
    if (!corpus) throw IoError("cannot write corpus file: " + corpus_path);
    std::ofstream manifest;
    std::ostream* manifest_ptr = nullptr;
    if (!manifest_path.empty()) {
        manifest.open(manifest_path, std::ios::binary);
        if (!manifest) throw IoError("cannot write manifest file: " + manifest_path);
        manifest_ptr = &manifest;
    }
    SynthResult result = synth_corpus(spec, corpus, manifest_ptr);
    corpus.flush();
    if (!corpus) throw IoError("write failed: " + corpus_path);
    return result;
}

std::vector<ManifestRow> read_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open manifest file: " + path);
    std::vector<ManifestRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = strip_cr(line);
        std::string where = path + ":" + std::to_string(line_no);
        if (!header_seen) {
            if (!body.starts_with("pattern_id\t")) throw ParseError(where + ": missing manifest header");
            header_seen = true;
            continue;
        }
        if (body.empty()) continue;
        auto fields = split_char(body, '\t');
        if (fields.size() != 4) throw ParseError(where + ": expected 4 columns");
        auto pattern = pattern_from_string(fields[0]);
        if (!pattern) throw ParseError(where + ": unknown pattern id");
        ManifestRow row;
        row.pattern = *pattern;
        row.weak = std::string(fields[1]);
        row.strong = std::string(fields[2]);
        auto [ptr, ec] = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), row.count);
        if (ec != std::errc{} || ptr != fields[3].data() + fields[3].size()) {
            throw ParseError(where + ": bad count");
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw ParseError(path + ":1: missing manifest header");
    return rows;
}

} // namespace scalemate
