#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "scalemate/pairs.hpp"
#include "scalemate/similarity.hpp" // UnknownPolicy

namespace scalemate {

// True iff one word equals prefix + other or prefix + "-" + other for a
// prefix in {il, in, un, im, dis, non}. Symmetric; applied literally, with
// no check that the shorter word is a real stem.
bool is_morphological_antonym(std::string_view a, std::string_view b);

// Unordered pair set: {a,b} and {b,a} are the same entry.
class AntonymLexicon {
public:
    void insert(std::string_view a, std::string_view b);
    bool contains(std::string_view a, std::string_view b) const;
    std::size_t size() const { return pairs_.size(); }

    // TSV, one `a<TAB>b` pair per line.
    static AntonymLexicon load(const std::string& path);

private:
    std::unordered_set<std::string> pairs_; // "min\tmax"
};

enum class Polarity { Positive, Negative };

class PolarityLexicon {
public:
    // Two plain word-list files, one word per line; lines starting with ';'
    // are comments. A word listed with both polarities is dropped entirely.
    static PolarityLexicon load(const std::string& positive_path, const std::string& negative_path);

    void insert(std::string_view word, Polarity polarity);
    std::optional<Polarity> lookup(std::string_view word) const;
    std::size_t size() const { return polarity_.size(); }
    std::size_t conflicts_dropped() const { return conflicts_dropped_; }

private:
    std::unordered_map<std::string, Polarity> polarity_;
    std::unordered_set<std::string> conflicted_;
    std::size_t conflicts_dropped_ = 0;
};

// Drops a record iff the pair is a morphological antonym or listed in the
// lexicon. Survivors are copied unchanged.
std::vector<PairRecord> antonym_filter(std::span<const PairRecord> records,
                                       const AntonymLexicon& lexicon);

// Drops a record iff both words are covered and their polarities differ.
// Records with a word missing from the lexicon follow the policy
// (default keep: absence is not evidence of opposition).
std::vector<PairRecord> polarity_filter(std::span<const PairRecord> records,
                                        const PolarityLexicon& lexicon,
                                        UnknownPolicy policy = UnknownPolicy::Keep);

// Intersection of both filters' survivors; application order is immaterial.
std::vector<PairRecord> combined_filter(std::span<const PairRecord> records,
                                        const AntonymLexicon& antonyms,
                                        const PolarityLexicon& polarity,
                                        UnknownPolicy polarity_policy = UnknownPolicy::Keep);

} // namespace scalemate
