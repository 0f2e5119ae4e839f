#include <doctest.h>

#include "scalemate/errors.hpp"
#include "scalemate/evaluate.hpp"
#include "test_util.hpp"

using namespace scalemate;

namespace {

PairRecord resolved(const std::string& weak, const std::string& strong) {
    PairRecord r;
    r.adj_a = std::min(weak, strong);
    r.adj_b = std::max(weak, strong);
    r.counts[0][0] = 1;
    r.resolved = (weak == r.adj_a) ? Resolution::AWeak : Resolution::BWeak;
    return r;
}

PairRecord tied(const std::string& a, const std::string& b) {
    PairRecord r;
    r.adj_a = std::min(a, b);
    r.adj_b = std::max(a, b);
    r.counts[0][0] = 1;
    r.counts[0][1] = 1;
    r.resolved = Resolution::Tie;
    return r;
}

std::vector<PairRecord> reverse_all(std::vector<PairRecord> records) {
    for (PairRecord& record : records) {
        for (auto& per_pattern : record.counts) std::swap(per_pattern[0], per_pattern[1]);
        if (record.resolved == Resolution::AWeak) record.resolved = Resolution::BWeak;
        else if (record.resolved == Resolution::BWeak) record.resolved = Resolution::AWeak;
    }
    return records;
}

SubjectivityLexicon lexicon_of(const std::vector<std::pair<std::string, SubjStrength>>& entries) {
    SubjectivityLexicon lexicon;
    for (const auto& [word, label] : entries) lexicon.labels.emplace(word, label);
    return lexicon;
}

ArousalNorms norms_of(const std::vector<std::pair<std::string, double>>& entries) {
    ArousalNorms norms;
    for (const auto& [word, value] : entries) norms.values.emplace(word, value);
    return norms;
}

} // namespace

TEST_CASE("subjectivity lexicon parses key=value lines") {
    std::string path = testutil::write_file(
        "eval/subj.txt",
        "type=weaksubj len=1 word1=decent pos1=adj stemmed1=n priorpolarity=positive\n"
        "type=strongsubj len=1 word1=excellent pos1=adj stemmed1=n priorpolarity=positive\n"
        "type=strongsubj len=1 word1=Verbal pos1=verb stemmed1=y priorpolarity=neutral\n"
        "type=weaksubj len=1 word1=anyword pos1=anypos stemmed1=n\n"
        "type=weaksubj len=1 word1=untyped\n"
        "garbage line without keys\n"
        "type=weaksubj len=1 word1=flipflop pos1=adj\n"
        "type=strongsubj len=1 word1=flipflop pos1=adj\n");
    SubjectivityLexicon lexicon = load_subjectivity_lexicon(path);
    CHECK(lexicon.labels.at("decent") == SubjStrength::Weak);
    CHECK(lexicon.labels.at("excellent") == SubjStrength::Strong);
    CHECK(!lexicon.labels.contains("verbal"));      // wrong POS
    CHECK(lexicon.labels.contains("anyword"));      // anypos kept
    CHECK(lexicon.labels.contains("untyped"));      // missing pos1 kept
    CHECK(!lexicon.labels.contains("flipflop"));    // conflicting labels dropped
    CHECK(lexicon.conflicts_dropped == 1);
    CHECK(lexicon.non_adjective_skipped == 1);
    CHECK(lexicon.skipped_lines == 1);

    SubjectivityLexicon all = load_subjectivity_lexicon(path, {false});
    CHECK(all.labels.contains("verbal"));
}

TEST_CASE("norms csv honors the configured columns and rejects bad rows") {
    std::string path = testutil::write_file("eval/norms.csv",
                                            "Word,V.Mean.Sum,A.Mean.Sum\n"
                                            "calm,6.89,1.67\n"
                                            "exciting,8.02,7.36\n"
                                            "calm,1.0,9.0\n"
                                            "broken,xx,yy\n"
                                            "outofrange,5.0,12.5\n"
                                            "short\n");
    ArousalNorms norms = load_norms_csv(path);
    CHECK(norms.values.size() == 2);
    CHECK(norms.values.at("calm") == doctest::Approx(1.67));
    CHECK(norms.duplicates_dropped == 1);
    CHECK(norms.skipped_lines == 3);

    NormsLoadOptions valence;
    valence.value_column = "V.Mean.Sum";
    ArousalNorms v = load_norms_csv(path, valence);
    CHECK(v.values.at("calm") == doctest::Approx(6.89));

    NormsLoadOptions missing;
    missing.value_column = "NoSuchColumn";
    CHECK_THROWS_AS(load_norms_csv(path, missing), ParseError);
}

TEST_CASE("subjectivity evaluation scores contrastive pairs") {
    auto lexicon = lexicon_of({{"decent", SubjStrength::Weak},
                               {"excellent", SubjStrength::Strong},
                               {"good", SubjStrength::Weak}});
    std::vector<PairRecord> records = {
        resolved("decent", "excellent"), // contrast, correct
        resolved("decent", "good"),      // same label: excluded
        resolved("excellent", "decent"), // contrast, wrong direction
        resolved("decent", "unknownword"),
        tied("decent", "excellent"),     // ties are never test items
    };
    EvaluationReport report = eval_subjectivity(records, lexicon);
    CHECK(report.test_count == 2);
    CHECK(report.correct_count == 1);
    CHECK(report.accuracy == doctest::Approx(50.0));
}

TEST_CASE("six records against an eight-word lexicon match hand scoring") {
    auto lexicon = lexicon_of({{"w1", SubjStrength::Weak},
                               {"w2", SubjStrength::Weak},
                               {"w3", SubjStrength::Weak},
                               {"w4", SubjStrength::Weak},
                               {"s1", SubjStrength::Strong},
                               {"s2", SubjStrength::Strong},
                               {"s3", SubjStrength::Strong},
                               {"s4", SubjStrength::Strong}});
    std::vector<PairRecord> records = {
        resolved("w1", "s1"), // correct
        resolved("w2", "s2"), // correct
        resolved("s3", "w3"), // wrong direction
        resolved("w4", "w1"), // both weak: excluded
        resolved("s1", "s2"), // both strong: excluded
        resolved("w1", "nocoverage"),
    };
    EvaluationReport report = eval_subjectivity(records, lexicon);
    CHECK(report.test_count == 3);
    CHECK(report.correct_count == 2);
    CHECK(report.accuracy == doctest::Approx(100.0 * 2 / 3));
}

TEST_CASE("arousal evaluation requires a strict contrast") {
    auto norms = norms_of({{"dull", 1.7}, {"exciting", 7.3}, {"flat", 3.0}, {"level", 3.0}});
    std::vector<PairRecord> records = {
        resolved("dull", "exciting"), // 1.7 < 7.3: correct
        resolved("exciting", "dull"), // wrong direction
        resolved("flat", "level"),    // equal values: excluded
        resolved("dull", "missing"),
    };
    EvaluationReport report = eval_arousal(records, norms);
    CHECK(report.test_count == 2);
    CHECK(report.correct_count == 1);

    // a gap requirement shrinks the test set further
    EvaluationReport gapped = eval_arousal(records, norms, 6.0);
    CHECK(gapped.test_count == 0);
}

TEST_CASE("ten records against toy norms match hand scoring") {
    auto norms = norms_of({{"a", 1.0}, {"b", 2.0}, {"c", 3.0}, {"d", 4.0}, {"e", 5.0},
                           {"f", 5.0}, {"g", 6.5}, {"h", 8.0}});
    std::vector<PairRecord> records = {
        resolved("a", "b"), resolved("b", "c"), resolved("c", "d"), resolved("d", "e"), // correct x4
        resolved("g", "h"),                                                             // correct
        resolved("e", "a"), resolved("h", "g"),                                         // wrong x2
        resolved("e", "f"),                                                             // equal: excluded
        resolved("a", "zz"), resolved("zz", "yy"),                                      // uncovered x2
    };
    EvaluationReport report = eval_arousal(records, norms);
    CHECK(report.test_count == 7);
    CHECK(report.correct_count == 5);
    CHECK(report.accuracy == doctest::Approx(100.0 * 5 / 7));
}

TEST_CASE("dataset agreement compares the two lexicons over the record vocabulary") {
    auto lexicon = lexicon_of({{"a", SubjStrength::Weak},
                               {"b", SubjStrength::Strong},
                               {"c", SubjStrength::Weak},
                               {"d", SubjStrength::Strong},
                               {"e", SubjStrength::Weak},
                               {"f", SubjStrength::Strong},
                               {"g", SubjStrength::Weak},
                               {"h", SubjStrength::Strong}});
    SUBCASE("datasets constructed to imply identical orderings agree fully") {
        auto norms = norms_of({{"a", 2.0}, {"b", 6.0}, {"c", 1.0}, {"d", 7.0}});
        std::vector<PairRecord> records = {resolved("a", "b"), resolved("c", "d")};
        AgreementResult agreement = dataset_agreement(records, lexicon, norms);
        CHECK(agreement.compared == 2);
        CHECK(agreement.agreed == 2);
        CHECK(agreement.percent == doctest::Approx(100.0));
    }
    SUBCASE("three agreeing and one disagreeing contrastive pair gives 75%") {
        auto norms = norms_of({{"a", 2.0}, {"b", 6.0}, {"c", 1.0}, {"d", 7.0},
                               {"e", 3.0}, {"f", 8.0}, {"g", 6.0}, {"h", 2.0}});
        // g/h: subjectivity says g weaker, arousal says h weaker
        std::vector<PairRecord> records = {resolved("a", "b"), resolved("c", "d"),
                                           resolved("e", "f"), resolved("g", "h")};
        AgreementResult agreement = dataset_agreement(records, lexicon, norms);
        CHECK(agreement.compared == 4);
        CHECK(agreement.agreed == 3);
        CHECK(agreement.percent == doctest::Approx(75.0));
        CHECK(agreement.agreed_weak.size() == 3);

        // agreement ignores the records' own directions entirely
        AgreementResult reversed = dataset_agreement(reverse_all(records), lexicon, norms);
        CHECK(reversed.compared == agreement.compared);
        CHECK(reversed.agreed == agreement.agreed);
    }
}

TEST_CASE("combined evaluation scores against the agreed subset") {
    auto lexicon = lexicon_of({{"a", SubjStrength::Weak},
                               {"b", SubjStrength::Strong},
                               {"c", SubjStrength::Weak},
                               {"d", SubjStrength::Strong}});
    auto norms = norms_of({{"a", 2.0}, {"b", 6.0}, {"c", 1.0}, {"d", 7.0}, {"x", 3.0}, {"y", 4.0}});
    std::vector<PairRecord> records = {resolved("a", "b"), resolved("c", "d"), resolved("x", "y")};
    AgreementResult agreement = dataset_agreement(records, lexicon, norms);
    CHECK(agreement.compared == 2); // x/y has no subjectivity coverage

    SUBCASE("all record directions match the agreed set") {
        EvaluationReport report = eval_combined(records, agreement);
        CHECK(report.test_count == 2);
        CHECK(report.correct_count == 2);
        CHECK(report.accuracy == doctest::Approx(100.0));
    }
    SUBCASE("one reversed record scores as incorrect") {
        std::vector<PairRecord> mixed = {resolved("b", "a"), resolved("c", "d"), resolved("x", "y")};
        EvaluationReport report = eval_combined(mixed, agreement);
        CHECK(report.test_count == 2);
        CHECK(report.correct_count == 1);
    }
    SUBCASE("combined test set is a subset of both single-dataset test sets") {
        EvaluationReport combined = eval_combined(records, agreement);
        CHECK(combined.test_count <= eval_subjectivity(records, lexicon).test_count);
        CHECK(combined.test_count <= eval_arousal(records, norms).test_count);
    }
}

TEST_CASE("direction reversal maps accuracy a to 100 - a for every evaluator") {
    auto lexicon = lexicon_of({{"a", SubjStrength::Weak}, {"b", SubjStrength::Strong},
                               {"c", SubjStrength::Weak}, {"d", SubjStrength::Strong},
                               {"e", SubjStrength::Weak}, {"f", SubjStrength::Strong}});
    auto norms = norms_of({{"a", 2.0}, {"b", 6.0}, {"c", 1.0}, {"d", 7.0}, {"e", 4.0}, {"f", 3.0}});
    std::vector<PairRecord> records = {resolved("a", "b"), resolved("d", "c"), resolved("e", "f"),
                                       resolved("a", "d"), resolved("f", "c")};
    auto reversed = reverse_all(records);

    EvaluationReport subj = eval_subjectivity(records, lexicon);
    EvaluationReport subj_rev = eval_subjectivity(reversed, lexicon);
    CHECK(subj.test_count == subj_rev.test_count);
    CHECK(subj.correct_count + subj_rev.correct_count == subj.test_count);

    EvaluationReport arousal = eval_arousal(records, norms);
    EvaluationReport arousal_rev = eval_arousal(reversed, norms);
    CHECK(arousal.test_count == arousal_rev.test_count);
    CHECK(arousal.correct_count + arousal_rev.correct_count == arousal.test_count);

    AgreementResult agreement = dataset_agreement(records, lexicon, norms);
    EvaluationReport combined = eval_combined(records, agreement);
    EvaluationReport combined_rev = eval_combined(reversed, agreement);
    CHECK(combined.test_count == combined_rev.test_count);
    CHECK(combined.correct_count + combined_rev.correct_count == combined.test_count);
}

TEST_CASE("filtering records never grows a test set") {
    auto lexicon = lexicon_of({{"a", SubjStrength::Weak}, {"b", SubjStrength::Strong},
                               {"c", SubjStrength::Weak}, {"d", SubjStrength::Strong}});
    auto norms = norms_of({{"a", 2.0}, {"b", 6.0}, {"c", 1.0}, {"d", 7.0}});
    std::vector<PairRecord> all = {resolved("a", "b"), resolved("c", "d"), resolved("a", "d")};
    std::vector<PairRecord> fewer = {all[0], all[2]};
    CHECK(eval_subjectivity(fewer, lexicon).test_count <= eval_subjectivity(all, lexicon).test_count);
    CHECK(eval_arousal(fewer, norms).test_count <= eval_arousal(all, norms).test_count);
    AgreementResult agreement = dataset_agreement(all, lexicon, norms);
    CHECK(eval_combined(fewer, agreement).test_count <= eval_combined(all, agreement).test_count);
}
