#include "scalemate/pairs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "scalemate/errors.hpp"
#include "scalemate/text.hpp"

namespace scalemate {

std::uint64_t PairRecord::direction_total(Direction direction) const {
    std::uint64_t sum = 0;
    for (const auto& per_pattern : counts) sum += per_pattern[static_cast<int>(direction)];
    return sum;
}

std::uint64_t PairRecord::total() const {
    return direction_total(Direction::AWeak) + direction_total(Direction::BWeak);
}

int PairRecord::pattern_types() const {
    int n = 0;
    for (const auto& per_pattern : counts) {
        if (per_pattern[0] + per_pattern[1] > 0) ++n;
    }
    return n;
}

Resolution resolve_direction(const PairRecord& record, const AggregateOptions& options) {
    std::uint64_t a = record.direction_total(Direction::AWeak);
    std::uint64_t b = record.direction_total(Direction::BWeak);
    if (a == b) return Resolution::Tie;
    if (options.min_direction_ratio > 0.0) {
        double majority = static_cast<double>(std::max(a, b));
        if (majority < options.min_direction_ratio * static_cast<double>(a + b)) {
            return Resolution::Tie;
        }
    }
    return a > b ? Resolution::AWeak : Resolution::BWeak;
}

void Aggregator::add(PatternId pattern, std::string_view weak, std::string_view strong) {
    bool weak_is_a = weak < strong;
    std::string key;
    key.reserve(weak.size() + strong.size() + 1);
    if (weak_is_a) {
        key.append(weak).push_back('\t');
        key.append(strong);
    } else {
        key.append(strong).push_back('\t');
        key.append(weak);
    }
    Direction direction = weak_is_a ? Direction::AWeak : Direction::BWeak;
    counts_[std::move(key)][static_cast<int>(pattern)][static_cast<int>(direction)] += 1;
}

void Aggregator::merge(const Aggregator& other) {
    for (const auto& [key, other_counts] : other.counts_) {
        CountArray& mine = counts_[key];
        for (int p = 0; p < kPatternCount; ++p) {
            mine[p][0] += other_counts[p][0];
            mine[p][1] += other_counts[p][1];
        }
    }
}

std::vector<PairRecord> Aggregator::finish(const AggregateOptions& options) const {
    std::vector<PairRecord> records;
    records.reserve(counts_.size());
    for (const auto& [key, counts] : counts_) {
        std::size_t tab = key.find('\t');
        PairRecord record;
        record.adj_a = key.substr(0, tab);
        record.adj_b = key.substr(tab + 1);
        record.counts = counts;
        record.resolved = resolve_direction(record, options);
        records.push_back(std::move(record));
    }
    std::sort(records.begin(), records.end(), [](const PairRecord& x, const PairRecord& y) {
        return std::tie(x.adj_a, x.adj_b) < std::tie(y.adj_a, y.adj_b);
    });
    return records;
}

std::vector<PairRecord> aggregate(std::span<const PatternMatch> matches,
                                  const AggregateOptions& options) {
    Aggregator aggregator;
    for (const PatternMatch& match : matches) aggregator.add(match);
    return aggregator.finish(options);
}

std::array<std::size_t, kPatternCount + 1> pattern_type_histogram(std::span<const PairRecord> records) {
    std::array<std::size_t, kPatternCount + 1> histogram{};
    for (const PairRecord& record : records) {
        int n = record.pattern_types();
        if (n >= 1 && n <= kPatternCount) ++histogram[n];
    }
    return histogram;
}

namespace {

void write_header(std::ostream& out) {
    out << "weak\tstrong\ttie\tpattern_types";
    for (PatternId id : kAllPatterns) {
        out << '\t' << to_string(id) << "_fwd\t" << to_string(id) << "_rev";
    }
    out << '\n';
}

std::uint64_t parse_count(std::string_view field, const std::string& where) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(where + ": bad count field '" + std::string(field) + "'");
    }
    return value;
}

} // namespace

void write_pairs_tsv(std::span<const PairRecord> records, std::ostream& out) {
    write_header(out);
    for (const PairRecord& record : records) {
        // Written orientation: resolved (weak, strong), or (adj_a, adj_b) for ties.
        bool written_a_first = record.tie() || record.resolved == Resolution::AWeak;
        const std::string& first = written_a_first ? record.adj_a : record.adj_b;
        const std::string& second = written_a_first ? record.adj_b : record.adj_a;
        out << first << '\t' << second << '\t' << (record.tie() ? 1 : 0) << '\t'
            << record.pattern_types();
        for (PatternId id : kAllPatterns) {
            std::uint64_t fwd = record.count(id, written_a_first ? Direction::AWeak : Direction::BWeak);
            std::uint64_t rev = record.count(id, written_a_first ? Direction::BWeak : Direction::AWeak);
            out << '\t' << fwd << '\t' << rev;
        }
        out << '\n';
    }
}

void write_pairs_tsv(std::span<const PairRecord> records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write pairs file: " + path);
    write_pairs_tsv(records, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

std::vector<PairRecord> read_pairs_tsv(std::istream& in, const std::string& name) {
    std::vector<PairRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = strip_cr(line);
        std::string where = name + ":" + std::to_string(line_no);
        if (!header_seen) {
            if (!body.starts_with("weak\tstrong\ttie")) {
                throw ParseError(where + ": missing pairs header");
            }
            header_seen = true;
            continue;
        }
        if (body.empty()) continue;
        auto fields = split_char(body, '\t');
        if (fields.size() != 4 + 2 * kPatternCount) {
            throw ParseError(where + ": expected " + std::to_string(4 + 2 * kPatternCount) +
                             " columns, got " + std::to_string(fields.size()));
        }
        std::string first(fields[0]);
        std::string second(fields[1]);
        if (first.empty() || second.empty() || first == second) {
            throw ParseError(where + ": bad adjective pair");
        }
        bool tie_flag;
        if (fields[2] == "0") tie_flag = false;
        else if (fields[2] == "1") tie_flag = true;
        else throw ParseError(where + ": tie flag must be 0 or 1");

        PairRecord record;
        bool written_a_first = first < second;
        record.adj_a = written_a_first ? first : second;
        record.adj_b = written_a_first ? second : first;
        for (int p = 0; p < kPatternCount; ++p) {
            std::uint64_t fwd = parse_count(fields[4 + 2 * p], where);
            std::uint64_t rev = parse_count(fields[5 + 2 * p], where);
            int fwd_dir = written_a_first ? 0 : 1;
            record.counts[p][fwd_dir] = fwd;
            record.counts[p][1 - fwd_dir] = rev;
        }
        if (record.total() == 0) throw ParseError(where + ": record with no evidence");

        int declared_types = static_cast<int>(parse_count(fields[3], where));
        if (declared_types != record.pattern_types()) {
            throw ParseError(where + ": pattern_types column disagrees with counts");
        }
        if (tie_flag) {
            record.resolved = Resolution::Tie;
        } else {
            std::uint64_t fwd_total = record.direction_total(written_a_first ? Direction::AWeak
                                                                             : Direction::BWeak);
            if (2 * fwd_total <= record.total()) {
                throw ParseError(where + ": resolved row lacks a forward majority");
            }
            record.resolved = written_a_first ? Resolution::AWeak : Resolution::BWeak;
        }
        records.push_back(std::move(record));
    }
    if (!header_seen) throw ParseError(name + ":1: missing pairs header");
    return records;
}

std::vector<PairRecord> read_pairs_tsv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open pairs file: " + path);
    return read_pairs_tsv(in, path);
}

} // namespace scalemate
