#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "scalemate/patterns.hpp"

namespace scalemate {

// Direction of evidence for an unordered pair stored as adj_a < adj_b.
enum class Direction : int {
    AWeak = 0, // adj_a is the weaker member
    BWeak = 1,
};

enum class Resolution : int {
    AWeak = 0,
    BWeak = 1,
    Tie = 2, // discarded on a draw, kept in storage flagged
};

struct PairRecord {
    std::string adj_a; // lexicographically smaller
    std::string adj_b;
    std::array<std::array<std::uint64_t, 2>, kPatternCount> counts{}; // [pattern][direction]
    Resolution resolved = Resolution::Tie;

    std::uint64_t count(PatternId pattern, Direction direction) const {
        return counts[static_cast<int>(pattern)][static_cast<int>(direction)];
    }
    std::uint64_t direction_total(Direction direction) const;
    std::uint64_t total() const;

    // Number of distinct pattern types with any evidence, the n of the
    // pattern-type histogram. Always in [1, 6] for aggregated records.
    int pattern_types() const;

    bool tie() const { return resolved == Resolution::Tie; }

    // Resolved records only.
    const std::string& weak() const { return resolved == Resolution::BWeak ? adj_b : adj_a; }
    const std::string& strong() const { return resolved == Resolution::BWeak ? adj_a : adj_b; }

    bool operator==(const PairRecord&) const = default;
};

struct AggregateOptions {
    // Optional reliability threshold: a pair resolves only when the majority
    // direction holds at least this fraction of its occurrences. 0 disables
    // the check, leaving the plain majority rule.
    double min_direction_ratio = 0.0;
};

// Pure function of the count map: majority direction wins, equal totals tie.
Resolution resolve_direction(const PairRecord& record, const AggregateOptions& options = {});

// Mergeable counting state, one count map per unordered pair. Shards may be
// aggregated independently and merged; the result is identical to aggregating
// the concatenated match stream.
class Aggregator {
public:
    void add(PatternId pattern, std::string_view weak, std::string_view strong);
    void add(const PatternMatch& match) { add(match.pattern, match.weak, match.strong); }
    void merge(const Aggregator& other);

    std::size_t pair_count() const { return counts_.size(); }

    // Resolves every pair and returns records sorted by (adj_a, adj_b).
    std::vector<PairRecord> finish(const AggregateOptions& options = {}) const;

private:
    using CountArray = std::array<std::array<std::uint64_t, 2>, kPatternCount>;
    std::unordered_map<std::string, CountArray> counts_; // key = adj_a + '\t' + adj_b
};

std::vector<PairRecord> aggregate(std::span<const PatternMatch> matches,
                                  const AggregateOptions& options = {});

// Histogram over n = 1..6 distinct pattern types; index 0 is unused. Tie
// records count like any other pair.
std::array<std::size_t, kPatternCount + 1> pattern_type_histogram(std::span<const PairRecord> records);

// TSV round trip, deterministic ordering, lossless including counts and the
// tie flag. Tie rows carry the lexicographic pair in the weak/strong columns.
void write_pairs_tsv(std::span<const PairRecord> records, std::ostream& out);
void write_pairs_tsv(std::span<const PairRecord> records, const std::string& path);
std::vector<PairRecord> read_pairs_tsv(std::istream& in, const std::string& name);
std::vector<PairRecord> read_pairs_tsv(const std::string& path);

} // namespace scalemate
