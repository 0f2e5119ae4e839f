#include <doctest.h>

#include <random>
#include <sstream>

#include "scalemate/errors.hpp"
#include "scalemate/pairs.hpp"
#include "test_util.hpp"

using namespace scalemate;

namespace {

PatternMatch match_of(PatternId pattern, std::string weak, std::string strong) {
    PatternMatch m;
    m.pattern = pattern;
    m.weak = std::move(weak);
    m.strong = std::move(strong);
    return m;
}

std::vector<PairRecord> random_records(std::mt19937_64& gen, std::size_t n) {
    std::vector<PatternMatch> matches;
    for (std::size_t i = 0; i < n * 4; ++i) {
        std::string a = "w" + std::to_string(gen() % n);
        std::string b = "w" + std::to_string(gen() % n);
        if (a == b) continue;
        matches.push_back(match_of(kAllPatterns[gen() % kPatternCount], a, b));
    }
    return aggregate(matches);
}

} // namespace

TEST_CASE("majority order is kept") {
    std::vector<PatternMatch> matches = {
        match_of(PatternId::IfNot, "warm", "hot"),
        match_of(PatternId::ButNot, "warm", "hot"),
        match_of(PatternId::IfNot, "warm", "hot"),
        match_of(PatternId::FromTo, "hot", "warm"),
        match_of(PatternId::IfNot, "hot", "warm"),
    };
    auto records = aggregate(matches);
    REQUIRE(records.size() == 1);
    CHECK(!records[0].tie());
    CHECK(records[0].weak() == "warm");
    CHECK(records[0].strong() == "hot");
    CHECK(records[0].total() == 5);
    CHECK(records[0].pattern_types() == 3);
}

TEST_CASE("equal directional totals discard the pair as a tie") {
    std::vector<PatternMatch> matches = {
        match_of(PatternId::IfNot, "warm", "hot"),
        match_of(PatternId::IfNot, "warm", "hot"),
        match_of(PatternId::ButNot, "hot", "warm"),
        match_of(PatternId::FromTo, "hot", "warm"),
    };
    auto records = aggregate(matches);
    REQUIRE(records.size() == 1);
    CHECK(records[0].tie());
}

TEST_CASE("a single match resolves as its own majority") {
    auto records = aggregate(std::vector<PatternMatch>{match_of(PatternId::OrAtLeast, "decent", "good")});
    REQUIRE(records.size() == 1);
    CHECK(records[0].weak() == "decent");
    CHECK(records[0].strong() == "good");
    CHECK(records[0].pattern_types() == 1);
}

TEST_CASE("min_direction_ratio turns weak majorities into ties") {
    std::vector<PatternMatch> matches;
    for (int i = 0; i < 5; ++i) matches.push_back(match_of(PatternId::IfNot, "warm", "hot"));
    for (int i = 0; i < 3; ++i) matches.push_back(match_of(PatternId::IfNot, "hot", "warm"));

    auto plain = aggregate(matches);
    REQUIRE(plain.size() == 1);
    CHECK(!plain[0].tie()); // 5 of 8 is a majority

    auto strict = aggregate(matches, AggregateOptions{0.8});
    REQUIRE(strict.size() == 1);
    CHECK(strict[0].tie()); // but not an 80% one

    std::vector<PatternMatch> strong(matches.begin(), matches.begin() + 5);
    strong.push_back(match_of(PatternId::IfNot, "hot", "warm"));
    auto kept = aggregate(strong, AggregateOptions{0.8});
    REQUIRE(kept.size() == 1);
    CHECK(!kept[0].tie()); // 5 of 6 clears the bar
}

TEST_CASE("pattern-type histogram counts distinct patterns per pair, ties included") {
    std::vector<PatternMatch> matches = {
        // one pair in three pattern types
        match_of(PatternId::IfNot, "big", "huge"),
        match_of(PatternId::ButNot, "big", "huge"),
        match_of(PatternId::BetweenAnd, "big", "huge"),
        // one pair in a single type
        match_of(PatternId::FromTo, "cool", "cold"),
        // one tied pair in a single type
        match_of(PatternId::IfNot, "good", "great"),
        match_of(PatternId::IfNot, "great", "good"),
    };
    auto records = aggregate(matches);
    auto histogram = pattern_type_histogram(records);
    CHECK(histogram[1] == 2);
    CHECK(histogram[2] == 0);
    CHECK(histogram[3] == 1);
    std::size_t total = 0;
    for (int n = 1; n <= kPatternCount; ++n) total += histogram[n];
    CHECK(total == records.size());
}

TEST_CASE("empty record set gives an all-zero histogram") {
    auto histogram = pattern_type_histogram(std::vector<PairRecord>{});
    for (int n = 0; n <= kPatternCount; ++n) CHECK(histogram[n] == 0);
}

TEST_CASE("shard-wise aggregation merged equals whole-stream aggregation") {
    std::mt19937_64 gen(4711);
    std::vector<PatternMatch> matches;
    for (int i = 0; i < 2000; ++i) {
        std::string a = "w" + std::to_string(gen() % 40);
        std::string b = "w" + std::to_string(gen() % 40);
        if (a == b) continue;
        matches.push_back(match_of(kAllPatterns[gen() % kPatternCount], a, b));
    }
    for (std::size_t shards : {2u, 3u, 7u}) {
        std::vector<Aggregator> parts(shards);
        for (std::size_t i = 0; i < matches.size(); ++i) parts[i % shards].add(matches[i]);
        Aggregator merged;
        for (const Aggregator& part : parts) merged.merge(part);
        CHECK(merged.finish() == aggregate(matches));
    }
}

TEST_CASE("resolution is a pure function of the count map") {
    std::mt19937_64 gen(99);
    for (const PairRecord& record : random_records(gen, 30)) {
        CHECK(resolve_direction(record) == record.resolved);
    }
}

TEST_CASE("swapping every match direction swaps resolutions and keeps ties tied") {
    std::mt19937_64 gen(7);
    std::vector<PatternMatch> matches;
    for (int i = 0; i < 500; ++i) {
        std::string a = "w" + std::to_string(gen() % 20);
        std::string b = "w" + std::to_string(gen() % 20);
        if (a == b) continue;
        matches.push_back(match_of(kAllPatterns[gen() % kPatternCount], a, b));
    }
    std::vector<PatternMatch> swapped = matches;
    for (PatternMatch& m : swapped) std::swap(m.weak, m.strong);

    auto records = aggregate(matches);
    auto reversed = aggregate(swapped);
    REQUIRE(records.size() == reversed.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].adj_a == reversed[i].adj_a);
        if (records[i].tie()) {
            CHECK(reversed[i].tie());
        } else {
            REQUIRE(!reversed[i].tie());
            CHECK(records[i].weak() == reversed[i].strong());
        }
    }
}

TEST_CASE("pairs files round-trip losslessly with deterministic ordering") {
    std::mt19937_64 gen(123);
    auto records = random_records(gen, 50);
    REQUIRE(!records.empty());

    std::ostringstream out;
    write_pairs_tsv(records, out);
    std::istringstream in(out.str());
    auto reread = read_pairs_tsv(in, "mem");
    CHECK(reread == records);

    std::ostringstream again;
    write_pairs_tsv(reread, again);
    CHECK(again.str() == out.str());
}

TEST_CASE("tie rows survive the round trip even under min_direction_ratio") {
    std::vector<PatternMatch> matches;
    for (int i = 0; i < 3; ++i) matches.push_back(match_of(PatternId::IfNot, "warm", "hot"));
    matches.push_back(match_of(PatternId::IfNot, "hot", "warm"));
    auto records = aggregate(matches, AggregateOptions{0.9}); // 3/4 < 0.9 -> tie with unequal counts
    REQUIRE(records.size() == 1);
    REQUIRE(records[0].tie());

    std::ostringstream out;
    write_pairs_tsv(records, out);
    std::istringstream in(out.str());
    CHECK(read_pairs_tsv(in, "mem") == records);
}

TEST_CASE("truncated pairs files raise a parse error naming the line") {
    std::string good = "weak\tstrong\ttie\tpattern_types";
    for (PatternId id : kAllPatterns) {
        good += "\t" + std::string(to_string(id)) + "_fwd\t" + std::string(to_string(id)) + "_rev";
    }
    std::string path = testutil::write_file(
        "pairs/truncated.tsv", good + "\nwarm\thot\t0\t1\t2\t0\t0\t0\t0\t0\t0\n");
    try {
        read_pairs_tsv(path);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
}

TEST_CASE("pairs reader rejects inconsistent rows") {
    std::string header = "weak\tstrong\ttie\tpattern_types";
    for (PatternId id : kAllPatterns) {
        header += "\t" + std::string(to_string(id)) + "_fwd\t" + std::string(to_string(id)) + "_rev";
    }
    // tie=0 but the directional totals are equal
    std::istringstream bad_majority(header + "\nwarm\thot\t0\t1\t2\t2\t0\t0\t0\t0\t0\t0\t0\t0\t0\t0\n");
    CHECK_THROWS_AS(read_pairs_tsv(bad_majority, "mem"), ParseError);
    // declared pattern_types disagrees with the counts
    std::istringstream bad_types(header + "\nwarm\thot\t0\t2\t3\t1\t0\t0\t0\t0\t0\t0\t0\t0\t0\t0\n");
    CHECK_THROWS_AS(read_pairs_tsv(bad_types, "mem"), ParseError);
    // missing header entirely
    std::istringstream no_header("warm\thot\t0\t1\n");
    CHECK_THROWS_AS(read_pairs_tsv(no_header, "mem"), ParseError);
}
