#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scalemate/corpus.hpp"

namespace scalemate {

// The six scale-suggesting templates. Five of them put the weaker adjective
// first on the surface; OR_AT_LEAST is the one exception ("good or at least
// decent" weakens left to right), so its emission is reversed.
enum class PatternId : int {
    IfNot = 0,      // ADJ1 if not ADJ2
    AndPerhaps = 1, // ADJ1 and perhaps ADJ2
    ButNot = 2,     // ADJ1 but not ADJ2
    BetweenAnd = 3, // between ADJ1 and ADJ2
    FromTo = 4,     // from ADJ1 to ADJ2
    OrAtLeast = 5,  // ADJ1 or at least ADJ2  (weak = ADJ2)
};

inline constexpr int kPatternCount = 6;

inline constexpr std::array<PatternId, kPatternCount> kAllPatterns = {
    PatternId::IfNot,      PatternId::AndPerhaps, PatternId::ButNot,
    PatternId::BetweenAnd, PatternId::FromTo,     PatternId::OrAtLeast,
};

std::string_view to_string(PatternId id);
std::optional<PatternId> pattern_from_string(std::string_view name);

struct TemplateSlot {
    enum class Kind { Fixed, Adjective };
    Kind kind = Kind::Fixed;
    std::string_view word; // Fixed slots only
    int adj_index = -1;    // Adjective slots only: 0 = ADJ1, 1 = ADJ2
};

struct PatternTemplate {
    PatternId id;
    std::vector<TemplateSlot> slots;
    bool weak_is_adj1 = true;
};

// Templates in matching priority order (ties at one position resolve by this order).
const std::array<PatternTemplate, kPatternCount>& pattern_templates();

struct PatternMatch {
    PatternId pattern;
    std::string weak;
    std::string strong;
    std::uint64_t sentence_offset = 0;
    std::size_t token_index = 0; // first matched token, in original sentence coordinates

    bool operator==(const PatternMatch&) const = default;
};

struct MatchOptions {
    TagSet adjective_tags = default_adjective_tags();
    bool strip_punct = true; // drop punctuation-tagged tokens before matching
};

// Scans left to right, greedily: at each position the first template (in
// priority order) that fits is taken and scanning resumes after its last
// token. Fixed words compare case-insensitively on surface form only; the
// adjective slots must carry a tag from the configured set. Matches with
// identical adjectives in both slots are consumed but not emitted.
void match_sentence(const Sentence& sentence, const MatchOptions& options,
                    std::vector<PatternMatch>& out);

std::vector<PatternMatch> match_sentence(const Sentence& sentence, const MatchOptions& options);

} // namespace scalemate
