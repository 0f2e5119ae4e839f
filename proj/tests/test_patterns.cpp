#include <doctest.h>

#include <algorithm>

#include "scalemate/patterns.hpp"
#include "scalemate/text.hpp"

using namespace scalemate;

namespace {

Sentence sentence_of(const std::vector<std::pair<std::string, std::string>>& tokens,
                     std::uint64_t offset = 0) {
    Sentence s;
    s.source_offset = offset;
    for (const auto& [surface, tag] : tokens) s.tokens.push_back(TaggedToken{surface, tag});
    return s;
}

} // namespace

TEST_CASE("warm if not hot yields one IF_NOT match") {
    auto matches = match_sentence(
        sentence_of({{"warm", "JJ"}, {"if", "IN"}, {"not", "RB"}, {"hot", "JJ"}}, 120),
        MatchOptions{});
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].pattern == PatternId::IfNot);
    CHECK(matches[0].weak == "warm");
    CHECK(matches[0].strong == "hot");
    CHECK(matches[0].sentence_offset == 120);
    CHECK(matches[0].token_index == 0);
}

TEST_CASE("or-at-least is the one pattern emitted in reversed surface order") {
    auto matches = match_sentence(
        sentence_of({{"good", "JJ"}, {"or", "CC"}, {"at", "IN"}, {"least", "JJS"}, {"decent", "JJ"}}),
        MatchOptions{});
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].pattern == PatternId::OrAtLeast);
    CHECK(matches[0].weak == "decent");
    CHECK(matches[0].strong == "good");
}

TEST_CASE("non-adjective slot filler blocks the match") {
    auto matches = match_sentence(
        sentence_of({{"warm", "NN"}, {"if", "IN"}, {"not", "RB"}, {"hot", "JJ"}}), MatchOptions{});
    CHECK(matches.empty());
}

TEST_CASE("empty sentence yields an empty match sequence") {
    CHECK(match_sentence(Sentence{}, MatchOptions{}).empty());
}

TEST_CASE("each template matches its own constructed sentence") {
    MatchOptions options;
    struct Case {
        PatternId id;
        std::vector<std::pair<std::string, std::string>> tokens;
        std::string weak, strong;
    };
    std::vector<Case> cases = {
        {PatternId::IfNot, {{"warm", "JJ"}, {"if", "IN"}, {"not", "RB"}, {"hot", "JJ"}}, "warm", "hot"},
        {PatternId::AndPerhaps,
         {{"good", "JJ"}, {"and", "CC"}, {"perhaps", "RB"}, {"great", "JJ"}},
         "good", "great"},
        {PatternId::ButNot,
         {{"warm", "JJ"}, {"but", "CC"}, {"not", "RB"}, {"hot", "JJ"}},
         "warm", "hot"},
        {PatternId::BetweenAnd,
         {{"between", "IN"}, {"cool", "JJ"}, {"and", "CC"}, {"cold", "JJ"}},
         "cool", "cold"},
        {PatternId::FromTo,
         {{"from", "IN"}, {"good", "JJ"}, {"to", "TO"}, {"great", "JJ"}},
         "good", "great"},
        {PatternId::OrAtLeast,
         {{"good", "JJ"}, {"or", "CC"}, {"at", "IN"}, {"least", "JJS"}, {"decent", "JJ"}},
         "decent", "good"},
    };
    for (const Case& c : cases) {
        auto matches = match_sentence(sentence_of(c.tokens), options);
        REQUIRE(matches.size() == 1);
        CHECK(matches[0].pattern == c.id);
        CHECK(matches[0].weak == c.weak);
        CHECK(matches[0].strong == c.strong);
    }
}

TEST_CASE("comma variant matches only with punctuation stripping on") {
    Sentence s = sentence_of({{"warm", "JJ"}, {",", ","}, {"if", "IN"}, {"not", "RB"}, {"hot", "JJ"}});
    MatchOptions strip_on;
    auto matches = match_sentence(s, strip_on);
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].weak == "warm");
    CHECK(matches[0].token_index == 0); // original coordinates

    MatchOptions strip_off;
    strip_off.strip_punct = false;
    CHECK(match_sentence(s, strip_off).empty());
}

TEST_CASE("token_index points at the first matched token in original coordinates") {
    Sentence s = sentence_of({{"it", "PRP"}, {"was", "VBD"}, {",", ","}, {"well", "RB"},
                              {"warm", "JJ"}, {",", ","}, {"if", "IN"}, {"not", "RB"}, {"hot", "JJ"}});
    auto matches = match_sentence(s, MatchOptions{});
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].token_index == 4); // the "warm" token, punctuation included in the count
}

TEST_CASE("identical adjectives are consumed but never emitted") {
    auto matches = match_sentence(
        sentence_of({{"warm", "JJ"}, {"if", "IN"}, {"not", "RB"}, {"warm", "JJ"}}), MatchOptions{});
    CHECK(matches.empty());
}

TEST_CASE("scanning is greedy and resumes after the last matched token") {
    // "warm if not hot if not scalding": the second occurrence starts at the
    // first match's final token and is therefore skipped.
    auto matches = match_sentence(sentence_of({{"warm", "JJ"}, {"if", "IN"}, {"not", "RB"},
                                               {"hot", "JJ"}, {"if", "IN"}, {"not", "RB"},
                                               {"scalding", "JJ"}}),
                                  MatchOptions{});
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].strong == "hot");
}

TEST_CASE("two disjoint occurrences in one sentence both match") {
    auto matches = match_sentence(
        sentence_of({{"warm", "JJ"}, {"if", "IN"}, {"not", "RB"}, {"hot", "JJ"},
                     {"and", "CC"}, {"good", "JJ"}, {"but", "CC"}, {"not", "RB"}, {"great", "JJ"}}),
        MatchOptions{});
    REQUIRE(matches.size() == 2);
    CHECK(matches[0].pattern == PatternId::IfNot);
    CHECK(matches[1].pattern == PatternId::ButNot);
    CHECK(matches[1].token_index == 5);
}

TEST_CASE("fixed words match case-insensitively on surface form") {
    auto matches = match_sentence(
        sentence_of({{"Warm", "JJ"}, {"If", "IN"}, {"NOT", "RB"}, {"Hot", "JJ"}}), MatchOptions{});
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].weak == "warm"); // emission is lowercased
    CHECK(matches[0].strong == "hot");
}

TEST_CASE("fixed words ignore their tags entirely") {
    // "least" tagged as an adjective is still the fixed word of OR_AT_LEAST.
    auto matches = match_sentence(
        sentence_of({{"good", "JJ"}, {"or", "CC"}, {"at", "JJ"}, {"least", "JJ"}, {"decent", "JJ"}}),
        MatchOptions{});
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].pattern == PatternId::OrAtLeast);
}

TEST_CASE("custom adjective tag sets are honored") {
    MatchOptions options;
    options.adjective_tags = parse_tag_set("ADJ");
    auto matches = match_sentence(
        sentence_of({{"warm", "ADJ"}, {"if", "X"}, {"not", "X"}, {"hot", "ADJ"}}), options);
    REQUIRE(matches.size() == 1);
    CHECK(match_sentence(sentence_of({{"warm", "JJ"}, {"if", "X"}, {"not", "X"}, {"hot", "JJ"}}),
                         options)
              .empty());
}

TEST_CASE("pattern names round-trip") {
    for (PatternId id : kAllPatterns) {
        auto parsed = pattern_from_string(to_string(id));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
    CHECK(!pattern_from_string("NOT_A_PATTERN").has_value());
}

TEST_CASE("template fidelity: re-reading the sentence at token_index reproduces the template") {
    // Sentences with punctuation sprinkled in; the invariant re-applies the
    // same stripping and checks fixed words and adjective tags slot by slot.
    MatchOptions options;
    std::vector<Sentence> sentences = {
        sentence_of({{"wow", "UH"}, {",", ","}, {"warm", "JJ"}, {",", ","}, {"if", "IN"},
                     {"not", "RB"}, {"hot", "JJ"}, {".", "."}}),
        sentence_of({{"between", "IN"}, {"cool", "JJ"}, {",", ","}, {"and", "CC"}, {"cold", "JJ"}}),
        sentence_of({{"good", "JJ"}, {"or", "CC"}, {"at", "IN"}, {"least", "JJS"}, {"fair", "JJ"},
                     {"but", "CC"}, {"not", "RB"}, {"poor", "JJ"}}),
    };
    for (const Sentence& sentence : sentences) {
        for (const PatternMatch& match : match_sentence(sentence, options)) {
            std::vector<std::size_t> view;
            for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
                if (options.strip_punct && is_punct_tag(sentence.tokens[i].tag)) continue;
                view.push_back(i);
            }
            auto start = std::find(view.begin(), view.end(), match.token_index);
            REQUIRE(start != view.end());
            std::size_t pos = static_cast<std::size_t>(start - view.begin());
            const PatternTemplate& tmpl = pattern_templates()[static_cast<int>(match.pattern)];
            REQUIRE(pos + tmpl.slots.size() <= view.size());
            for (std::size_t s = 0; s < tmpl.slots.size(); ++s) {
                const TaggedToken& token = sentence.tokens[view[pos + s]];
                if (tmpl.slots[s].kind == TemplateSlot::Kind::Fixed) {
                    CHECK(eq_ignore_ascii_case(token.surface, tmpl.slots[s].word));
                } else {
                    CHECK(is_adjective(token, options.adjective_tags));
                }
            }
        }
    }
}
