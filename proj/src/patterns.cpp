#include "scalemate/patterns.hpp"

#include "scalemate/text.hpp"

namespace scalemate {

std::string_view to_string(PatternId id) {
    switch (id) {
    case PatternId::IfNot: return "IF_NOT";
    case PatternId::AndPerhaps: return "AND_PERHAPS";
    case PatternId::ButNot: return "BUT_NOT";
    case PatternId::BetweenAnd: return "BETWEEN_AND";
    case PatternId::FromTo: return "FROM_TO";
    case PatternId::OrAtLeast: return "OR_AT_LEAST";
    }
    return "?";
}

std::optional<PatternId> pattern_from_string(std::string_view name) {
    for (PatternId id : kAllPatterns) {
        if (name == to_string(id)) return id;
    }
    return std::nullopt;
}

namespace {

TemplateSlot fixed(std::string_view word) {
    return TemplateSlot{TemplateSlot::Kind::Fixed, word, -1};
}

TemplateSlot adj(int index) {
    return TemplateSlot{TemplateSlot::Kind::Adjective, {}, index};
}

std::array<PatternTemplate, kPatternCount> build_templates() {
    std::array<PatternTemplate, kPatternCount> t;
    t[0] = {PatternId::IfNot, {adj(0), fixed("if"), fixed("not"), adj(1)}, true};
    t[1] = {PatternId::AndPerhaps, {adj(0), fixed("and"), fixed("perhaps"), adj(1)}, true};
    t[2] = {PatternId::ButNot, {adj(0), fixed("but"), fixed("not"), adj(1)}, true};
    t[3] = {PatternId::BetweenAnd, {fixed("between"), adj(0), fixed("and"), adj(1)}, true};
    t[4] = {PatternId::FromTo, {fixed("from"), adj(0), fixed("to"), adj(1)}, true};
    // "at least" matches on surface regardless of how the tagger labeled "least".
    t[5] = {PatternId::OrAtLeast, {adj(0), fixed("or"), fixed("at"), fixed("least"), adj(1)}, false};
    return t;
}

} // namespace

const std::array<PatternTemplate, kPatternCount>& pattern_templates() {
    static const std::array<PatternTemplate, kPatternCount> templates = build_templates();
    return templates;
}

void match_sentence(const Sentence& sentence, const MatchOptions& options,
                    std::vector<PatternMatch>& out) {
    const auto& tokens = sentence.tokens;

    // View of the sentence with punctuation dropped; values are original indices.
    std::vector<std::size_t> view;
    view.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (options.strip_punct && is_punct_tag(tokens[i].tag)) continue;
        view.push_back(i);
    }

    const auto& templates = pattern_templates();
    std::size_t pos = 0;
    while (pos < view.size()) {
        bool consumed = false;
        for (const PatternTemplate& tmpl : templates) {
            if (pos + tmpl.slots.size() > view.size()) continue;
            const TaggedToken* adjs[2] = {nullptr, nullptr};
            bool ok = true;
            for (std::size_t s = 0; s < tmpl.slots.size() && ok; ++s) {
                const TaggedToken& tok = tokens[view[pos + s]];
                const TemplateSlot& slot = tmpl.slots[s];
                if (slot.kind == TemplateSlot::Kind::Fixed) {
                    ok = eq_ignore_ascii_case(tok.surface, slot.word);
                } else {
                    ok = is_adjective(tok, options.adjective_tags);
                    if (ok) adjs[slot.adj_index] = &tok;
                }
            }
            if (!ok) continue;

            std::string adj1 = to_lower_ascii(adjs[0]->surface);
            std::string adj2 = to_lower_ascii(adjs[1]->surface);
            if (adj1 != adj2) { // self-pairs carry no ordering information
                PatternMatch match;
                match.pattern = tmpl.id;
                match.weak = tmpl.weak_is_adj1 ? adj1 : adj2;
                match.strong = tmpl.weak_is_adj1 ? adj2 : adj1;
                match.sentence_offset = sentence.source_offset;
                match.token_index = view[pos];
                out.push_back(std::move(match));
            }
            pos += tmpl.slots.size();
            consumed = true;
            break;
        }
        if (!consumed) ++pos;
    }
}

std::vector<PatternMatch> match_sentence(const Sentence& sentence, const MatchOptions& options) {
    std::vector<PatternMatch> out;
    match_sentence(sentence, options, out);
    return out;
}

} // namespace scalemate
