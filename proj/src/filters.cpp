#include "scalemate/filters.hpp"

#include <array>
#include <fstream>

#include "scalemate/errors.hpp"
#include "scalemate/text.hpp"

namespace scalemate {

namespace {

constexpr std::array<std::string_view, 6> kAntonymPrefixes = {"il", "in", "un", "im", "dis", "non"};

bool equals_prefixed(std::string_view longer, std::string_view shorter) {
    for (std::string_view prefix : kAntonymPrefixes) {
        if (longer.size() == shorter.size() + prefix.size() && longer.starts_with(prefix) &&
            longer.substr(prefix.size()) == shorter) {
            return true;
        }
        // Hyphenated variant, for every prefix.
        if (longer.size() == shorter.size() + prefix.size() + 1 && longer.starts_with(prefix) &&
            longer[prefix.size()] == '-' && longer.substr(prefix.size() + 1) == shorter) {
            return true;
        }
    }
    return false;
}

std::string pair_key(std::string_view a, std::string_view b) {
    std::string key;
    key.reserve(a.size() + b.size() + 1);
    if (b < a) std::swap(a, b);
    key.append(a).push_back('\t');
    key.append(b);
    return key;
}

} // namespace

bool is_morphological_antonym(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) return equals_prefixed(a, b);
    if (b.size() > a.size()) return equals_prefixed(b, a);
    return false;
}

void AntonymLexicon::insert(std::string_view a, std::string_view b) {
    pairs_.insert(pair_key(to_lower_ascii(a), to_lower_ascii(b)));
}

bool AntonymLexicon::contains(std::string_view a, std::string_view b) const {
    return pairs_.contains(pair_key(a, b));
}

AntonymLexicon AntonymLexicon::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open antonym file: " + path);
    AntonymLexicon lexicon;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = strip_cr(line);
        if (body.empty()) continue;
        auto fields = split_char(body, '\t');
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected `a<TAB>b`");
        }
        lexicon.insert(fields[0], fields[1]);
    }
    return lexicon;
}

void PolarityLexicon::insert(std::string_view word, Polarity polarity) {
    std::string key = to_lower_ascii(word);
    if (conflicted_.contains(key)) return;
    auto it = polarity_.find(key);
    if (it == polarity_.end()) {
        polarity_.emplace(std::move(key), polarity);
    } else if (it->second != polarity) {
        polarity_.erase(it);
        conflicted_.insert(std::move(key));
        ++conflicts_dropped_;
    }
}

std::optional<Polarity> PolarityLexicon::lookup(std::string_view word) const {
    auto it = polarity_.find(std::string(word));
    if (it == polarity_.end()) return std::nullopt;
    return it->second;
}

PolarityLexicon PolarityLexicon::load(const std::string& positive_path,
                                      const std::string& negative_path) {
    PolarityLexicon lexicon;
    auto load_list = [&lexicon](const std::string& path, Polarity polarity) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open polarity word list: " + path);
        std::string line;
        while (std::getline(in, line)) {
            std::string_view body = strip_cr(line);
            if (body.empty() || body.front() == ';') continue;
            auto fields = split_whitespace(body);
            if (fields.size() != 1) continue; // opinion-lexicon files are one word per line
            lexicon.insert(fields[0], polarity);
        }
    };
    load_list(positive_path, Polarity::Positive);
    load_list(negative_path, Polarity::Negative);
    return lexicon;
}

std::vector<PairRecord> antonym_filter(std::span<const PairRecord> records,
                                       const AntonymLexicon& lexicon) {
    std::vector<PairRecord> kept;
    for (const PairRecord& record : records) {
        if (is_morphological_antonym(record.adj_a, record.adj_b)) continue;
        if (lexicon.contains(record.adj_a, record.adj_b)) continue;
        kept.push_back(record);
    }
    return kept;
}

std::vector<PairRecord> polarity_filter(std::span<const PairRecord> records,
                                        const PolarityLexicon& lexicon, UnknownPolicy policy) {
    std::vector<PairRecord> kept;
    for (const PairRecord& record : records) {
        auto pa = lexicon.lookup(record.adj_a);
        auto pb = lexicon.lookup(record.adj_b);
        if (pa && pb) {
            if (*pa != *pb) continue;
        } else if (policy == UnknownPolicy::Drop) {
            continue;
        }
        kept.push_back(record);
    }
    return kept;
}

std::vector<PairRecord> combined_filter(std::span<const PairRecord> records,
                                        const AntonymLexicon& antonyms,
                                        const PolarityLexicon& polarity,
                                        UnknownPolicy polarity_policy) {
    return polarity_filter(antonym_filter(records, antonyms), polarity, polarity_policy);
}

} // namespace scalemate
