#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "scalemate/pairs.hpp"

namespace scalemate {

enum class SubjStrength { Weak, Strong };

struct SubjectivityLexicon {
    std::unordered_map<std::string, SubjStrength> labels;
    std::size_t conflicts_dropped = 0;   // words with both labels, removed
    std::size_t skipped_lines = 0;       // lines missing type/word1
    std::size_t non_adjective_skipped = 0;
};

struct SubjectivityLoadOptions {
    // When a pos field is present, keep only adjective or any-POS entries.
    bool adjectives_only = true;
};

// One entry per line of `key=value` tokens; required keys `type`
// (strongsubj|weaksubj) and `word1`, optional `pos1`.
SubjectivityLexicon load_subjectivity_lexicon(const std::string& path,
                                              const SubjectivityLoadOptions& options = {});

struct ArousalNorms {
    std::unordered_map<std::string, double> values; // all within [min_value, max_value]
    std::size_t duplicates_dropped = 0;
    std::size_t skipped_lines = 0; // unparsable or out-of-range rows
};

struct NormsLoadOptions {
    std::string word_column = "Word";
    std::string value_column = "A.Mean.Sum";
    double min_value = 1.0;
    double max_value = 9.0;
};

// CSV with a header row; column names select the word and value columns.
ArousalNorms load_norms_csv(const std::string& path, const NormsLoadOptions& options = {});

struct EvaluationReport {
    std::string dataset;
    std::size_t test_count = 0;    // pairs meeting the contrast criterion
    std::size_t correct_count = 0;
    double accuracy = 0.0;         // 100 * correct / test; 0 when the test set is empty
};

// Test set: resolved records whose two words carry different subjectivity
// labels; a prediction is correct when the weak member is the weaksubj one.
EvaluationReport eval_subjectivity(std::span<const PairRecord> records,
                                   const SubjectivityLexicon& lexicon);

// Test set: resolved records whose two words have arousal values more than
// `min_arousal_gap` apart; correct when the weak member is the calmer one.
EvaluationReport eval_arousal(std::span<const PairRecord> records, const ArousalNorms& norms,
                              double min_arousal_gap = 0.0);

struct AgreementResult {
    std::size_t compared = 0; // pair types contrastive in both datasets
    std::size_t agreed = 0;
    double percent = 0.0;
    // unordered pair key "a\tb" (a < b) -> the member both datasets call weaker
    std::unordered_map<std::string, std::string> agreed_weak;
};

// Compares the orderings the two lexicons imply, over the pair types present
// in `records` (direction and tie flags are ignored; this is a property of
// the record vocabulary, not of the predictions).
AgreementResult dataset_agreement(std::span<const PairRecord> records,
                                  const SubjectivityLexicon& lexicon, const ArousalNorms& norms,
                                  double min_arousal_gap = 0.0);

// Test set: resolved records whose pair is in the agreed set; correct when
// the record's weak member matches the agreed one.
EvaluationReport eval_combined(std::span<const PairRecord> records,
                               const AgreementResult& agreement);

} // namespace scalemate
