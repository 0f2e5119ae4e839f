#include "scalemate/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "scalemate/errors.hpp"
#include "scalemate/text.hpp"

namespace scalemate {

std::optional<UnknownPolicy> unknown_policy_from_string(std::string_view name) {
    if (name == "keep") return UnknownPolicy::Keep;
    if (name == "drop") return UnknownPolicy::Drop;
    return std::nullopt;
}

double cosine(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw ConfigError("cosine: dimension mismatch (" + std::to_string(u.size()) + " vs " +
                          std::to_string(v.size()) + ")");
    }
    double dot = 0.0, uu = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        uu += u[i] * u[i];
        vv += v[i] * v[i];
    }
    if (uu == 0.0 || vv == 0.0) throw ConfigError("cosine: zero vector");
    return dot / (std::sqrt(uu) * std::sqrt(vv));
}

const std::vector<double>* VectorTable::find(std::string_view word) const {
    auto it = vectors.find(std::string(word));
    return it == vectors.end() ? nullptr : &it->second;
}

VectorTable load_vector_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open vector file: " + path);
    VectorTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = strip_cr(line);
        if (body.empty()) continue;
        auto fields = split_whitespace(body);
        std::string where = path + ":" + std::to_string(line_no);
        if (fields.size() < 2) throw ParseError(where + ": expected `word v1 ... vd`");
        std::vector<double> values;
        values.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            try {
                values.push_back(std::stod(std::string(fields[i])));
            } catch (const std::exception&) {
                throw ParseError(where + ": bad decimal '" + std::string(fields[i]) + "'");
            }
        }
        if (table.dimension == 0) {
            table.dimension = values.size();
        } else if (values.size() != table.dimension) {
            throw ParseError(where + ": dimension " + std::to_string(values.size()) +
                             " differs from " + std::to_string(table.dimension));
        }
        bool all_zero = std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
        if (all_zero) {
            ++table.zero_rejected;
            continue;
        }
        std::string word = to_lower_ascii(fields[0]);
        if (!table.vectors.emplace(std::move(word), std::move(values)).second) {
            ++table.duplicates_dropped;
        }
    }
    return table;
}

const std::vector<std::string>* AttributeMap::find(std::string_view word) const {
    auto it = attributes.find(std::string(word));
    return it == attributes.end() ? nullptr : &it->second;
}

AttributeMap load_attribute_map(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open attribute file: " + path);
    AttributeMap map;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view body = strip_cr(line);
        if (body.empty()) continue;
        std::size_t tab = body.find('\t');
        if (tab == std::string_view::npos || tab == 0) {
            ++map.skipped_lines;
            continue;
        }
        std::vector<std::string> attrs;
        for (std::string_view part : split_char(body.substr(tab + 1), ',')) {
            if (!part.empty()) attrs.emplace_back(part);
        }
        if (attrs.empty()) {
            ++map.skipped_lines;
            continue;
        }
        std::sort(attrs.begin(), attrs.end());
        attrs.erase(std::unique(attrs.begin(), attrs.end()), attrs.end());
        std::string word = to_lower_ascii(body.substr(0, tab));
        auto it = map.attributes.find(word);
        if (it == map.attributes.end()) {
            map.attributes.emplace(std::move(word), std::move(attrs));
        } else {
            // Repeated word: union the attribute sets.
            std::vector<std::string> merged;
            std::set_union(it->second.begin(), it->second.end(), attrs.begin(), attrs.end(),
                           std::back_inserter(merged));
            it->second = std::move(merged);
        }
    }
    return map;
}

const std::vector<std::uint32_t>* ThesaurusEntries::find(std::string_view word) const {
    auto it = index.find(std::string(word));
    return it == index.end() ? nullptr : &it->second;
}

ThesaurusEntries load_thesaurus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open thesaurus file: " + path);
    ThesaurusEntries thesaurus;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view body = strip_cr(line);
        std::vector<std::string> words;
        for (std::string_view part : split_whitespace(body)) {
            words.push_back(to_lower_ascii(part));
        }
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        if (words.size() < 2) {
            if (!body.empty()) ++thesaurus.skipped_lines;
            continue;
        }
        auto id = static_cast<std::uint32_t>(thesaurus.entries.size());
        for (const std::string& word : words) thesaurus.index[word].push_back(id);
        thesaurus.entries.push_back(std::move(words));
    }
    return thesaurus;
}

std::optional<MeasureKind> measure_kind_from_string(std::string_view name) {
    if (name == "vector") return MeasureKind::Vector;
    if (name == "attribute") return MeasureKind::Attribute;
    if (name == "thesaurus") return MeasureKind::Thesaurus;
    return std::nullopt;
}

std::string_view to_string(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::Vector: return "vector";
    case MeasureKind::Attribute: return "attribute";
    case MeasureKind::Thesaurus: return "thesaurus";
    }
    return "?";
}

Verdict VectorMeasure::judge(std::string_view a, std::string_view b) const {
    const std::vector<double>* va = table_.find(a);
    const std::vector<double>* vb = table_.find(b);
    if (va == nullptr || vb == nullptr) return Verdict::Unknown;
    return cosine(*va, *vb) >= tau_ ? Verdict::Similar : Verdict::Dissimilar;
}

Verdict AttributeMeasure::judge(std::string_view a, std::string_view b) const {
    const std::vector<std::string>* sa = map_.find(a);
    const std::vector<std::string>* sb = map_.find(b);
    if (sa == nullptr || sb == nullptr) return Verdict::Unknown;
    // Both sides are sorted; walk them for any shared attribute.
    auto ia = sa->begin();
    auto ib = sb->begin();
    while (ia != sa->end() && ib != sb->end()) {
        if (*ia == *ib) return Verdict::Similar;
        if (*ia < *ib) ++ia;
        else ++ib;
    }
    return Verdict::Dissimilar;
}

Verdict ThesaurusMeasure::judge(std::string_view a, std::string_view b) const {
    const std::vector<std::uint32_t>* ea = entries_.find(a);
    const std::vector<std::uint32_t>* eb = entries_.find(b);
    if (ea == nullptr || eb == nullptr) return Verdict::Unknown;
    auto ia = ea->begin();
    auto ib = eb->begin();
    while (ia != ea->end() && ib != eb->end()) {
        if (*ia == *ib) return Verdict::Similar;
        if (*ia < *ib) ++ia;
        else ++ib;
    }
    return Verdict::Dissimilar;
}

std::unique_ptr<SimilarityMeasure> load_measure(MeasureKind kind, const std::string& resource_path,
                                                double tau) {
    switch (kind) {
    case MeasureKind::Vector:
        return std::make_unique<VectorMeasure>(load_vector_table(resource_path), tau);
    case MeasureKind::Attribute:
        return std::make_unique<AttributeMeasure>(load_attribute_map(resource_path));
    case MeasureKind::Thesaurus:
        return std::make_unique<ThesaurusMeasure>(load_thesaurus(resource_path));
    }
    throw ConfigError("unknown measure kind");
}

std::vector<PairRecord> filter_by_similarity(std::span<const PairRecord> records,
                                             const SimilarityMeasure& measure,
                                             UnknownPolicy policy) {
    std::vector<PairRecord> kept;
    for (const PairRecord& record : records) {
        Verdict verdict = measure.judge(record.adj_a, record.adj_b);
        if (verdict == Verdict::Dissimilar) continue;
        if (verdict == Verdict::Unknown && policy == UnknownPolicy::Drop) continue;
        kept.push_back(record);
    }
    return kept;
}

} // namespace scalemate
