#include "scalemate/evaluate.hpp"

#include <cmath>
#include <fstream>
#include <unordered_set>

#include "scalemate/errors.hpp"
#include "scalemate/text.hpp"

namespace scalemate {

namespace {

double percentage(std::size_t part, std::size_t whole) {
    return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

std::string pair_key(std::string_view a, std::string_view b) {
    std::string key;
    key.reserve(a.size() + b.size() + 1);
    key.append(a).push_back('\t');
    key.append(b);
    return key;
}

} // namespace

SubjectivityLexicon load_subjectivity_lexicon(const std::string& path,
                                              const SubjectivityLoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open subjectivity lexicon: " + path);
    SubjectivityLexicon lexicon;
    std::unordered_set<std::string> conflicted;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view body = strip_cr(line);
        if (body.empty() || body.front() == '#') continue;
        std::string type, word, pos;
        for (std::string_view field : split_whitespace(body)) {
            std::size_t eq = field.find('=');
            if (eq == std::string_view::npos) continue;
            std::string_view key = field.substr(0, eq);
            std::string_view value = field.substr(eq + 1);
            if (key == "type") type = std::string(value);
            else if (key == "word1") word = to_lower_ascii(value);
            else if (key == "pos1") pos = std::string(value);
        }
        if (word.empty() || (type != "strongsubj" && type != "weaksubj")) {
            ++lexicon.skipped_lines;
            continue;
        }
        if (options.adjectives_only && !pos.empty() && pos != "adj" && pos != "anypos") {
            ++lexicon.non_adjective_skipped;
            continue;
        }
        SubjStrength label = (type == "strongsubj") ? SubjStrength::Strong : SubjStrength::Weak;
        if (conflicted.contains(word)) continue;
        auto it = lexicon.labels.find(word);
        if (it == lexicon.labels.end()) {
            lexicon.labels.emplace(std::move(word), label);
        } else if (it->second != label) {
            lexicon.labels.erase(it);
            conflicted.insert(word);
            ++lexicon.conflicts_dropped;
        }
    }
    return lexicon;
}

ArousalNorms load_norms_csv(const std::string& path, const NormsLoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open norms file: " + path);
    ArousalNorms norms;
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty norms file");
    auto header = split_char(strip_cr(line), ',');
    std::size_t word_col = header.size(), value_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == options.word_column) word_col = i;
        if (header[i] == options.value_column) value_col = i;
    }
    if (word_col == header.size()) {
        throw ParseError(path + ": no column named '" + options.word_column + "'");
    }
    if (value_col == header.size()) {
        throw ParseError(path + ": no column named '" + options.value_column + "'");
    }
    while (std::getline(in, line)) {
        std::string_view body = strip_cr(line);
        if (body.empty()) continue;
        auto fields = split_char(body, ',');
        if (fields.size() <= std::max(word_col, value_col)) {
            ++norms.skipped_lines;
            continue;
        }
        double value = 0.0;
        try {
            value = std::stod(std::string(fields[value_col]));
        } catch (const std::exception&) {
            ++norms.skipped_lines;
            continue;
        }
        if (value < options.min_value || value > options.max_value || fields[word_col].empty()) {
            ++norms.skipped_lines;
            continue;
        }
        std::string word = to_lower_ascii(fields[word_col]);
        if (norms.values.contains(word)) {
            ++norms.duplicates_dropped;
            continue;
        }
        norms.values.emplace(std::move(word), value);
    }
    return norms;
}

EvaluationReport eval_subjectivity(std::span<const PairRecord> records,
                                   const SubjectivityLexicon& lexicon) {
    EvaluationReport report;
    report.dataset = "subjectivity";
    for (const PairRecord& record : records) {
        if (record.tie()) continue;
        auto weak_it = lexicon.labels.find(record.weak());
        auto strong_it = lexicon.labels.find(record.strong());
        if (weak_it == lexicon.labels.end() || strong_it == lexicon.labels.end()) continue;
        if (weak_it->second == strong_it->second) continue; // no contrast in strength
        ++report.test_count;
        if (weak_it->second == SubjStrength::Weak) ++report.correct_count;
    }
    report.accuracy = percentage(report.correct_count, report.test_count);
    return report;
}

EvaluationReport eval_arousal(std::span<const PairRecord> records, const ArousalNorms& norms,
                              double min_arousal_gap) {
    EvaluationReport report;
    report.dataset = "arousal";
    for (const PairRecord& record : records) {
        if (record.tie()) continue;
        auto weak_it = norms.values.find(record.weak());
        auto strong_it = norms.values.find(record.strong());
        if (weak_it == norms.values.end() || strong_it == norms.values.end()) continue;
        if (!(std::fabs(weak_it->second - strong_it->second) > min_arousal_gap)) continue;
        ++report.test_count;
        if (weak_it->second < strong_it->second) ++report.correct_count;
    }
    report.accuracy = percentage(report.correct_count, report.test_count);
    return report;
}

AgreementResult dataset_agreement(std::span<const PairRecord> records,
                                  const SubjectivityLexicon& lexicon, const ArousalNorms& norms,
                                  double min_arousal_gap) {
    AgreementResult result;
    std::unordered_set<std::string> seen;
    for (const PairRecord& record : records) {
        std::string key = pair_key(record.adj_a, record.adj_b);
        if (!seen.insert(key).second) continue; // pair types, not record tokens

        auto la = lexicon.labels.find(record.adj_a);
        auto lb = lexicon.labels.find(record.adj_b);
        if (la == lexicon.labels.end() || lb == lexicon.labels.end()) continue;
        if (la->second == lb->second) continue;

        auto va = norms.values.find(record.adj_a);
        auto vb = norms.values.find(record.adj_b);
        if (va == norms.values.end() || vb == norms.values.end()) continue;
        if (!(std::fabs(va->second - vb->second) > min_arousal_gap)) continue;

        ++result.compared;
        const std::string& subj_weak = (la->second == SubjStrength::Weak) ? record.adj_a : record.adj_b;
        const std::string& arousal_weak = (va->second < vb->second) ? record.adj_a : record.adj_b;
        if (subj_weak == arousal_weak) {
            ++result.agreed;
            result.agreed_weak.emplace(std::move(key), subj_weak);
        }
    }
    result.percent = percentage(result.agreed, result.compared);
    return result;
}

EvaluationReport eval_combined(std::span<const PairRecord> records,
                               const AgreementResult& agreement) {
    EvaluationReport report;
    report.dataset = "combined";
    for (const PairRecord& record : records) {
        if (record.tie()) continue;
        auto it = agreement.agreed_weak.find(pair_key(record.adj_a, record.adj_b));
        if (it == agreement.agreed_weak.end()) continue;
        ++report.test_count;
        if (record.weak() == it->second) ++report.correct_count;
    }
    report.accuracy = percentage(report.correct_count, report.test_count);
    return report;
}

} // namespace scalemate
