#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scalemate/patterns.hpp"

namespace scalemate {

struct CorpusStats {
    std::size_t sentences = 0;
    std::size_t lines = 0;
    std::size_t skipped = 0;

    CorpusStats& operator+=(const CorpusStats& other) {
        sentences += other.sentences;
        lines += other.lines;
        skipped += other.skipped;
        return *this;
    }
    bool operator==(const CorpusStats&) const = default;
};

struct ExtractedMatch {
    std::uint32_t file_id = 0; // index into ExtractResult::files
    PatternMatch match;

    bool operator==(const ExtractedMatch&) const = default;
};

struct ExtractResult {
    std::vector<std::string> files;
    std::vector<ExtractedMatch> matches; // file order, then sentence offset order
    CorpusStats stats;
};

struct ExtractOptions {
    MatchOptions match;
    int jobs = 1;                           // 0 = use all available threads
    std::uint64_t chunk_bytes = 8u << 20;   // byte-range granularity for splittable formats
};

// Serial reference implementation: streams each file through a CorpusReader
// and matches sentence by sentence. Memory is bounded by the longest sentence
// plus the accumulated matches.
ExtractResult extract_serial(const std::vector<std::string>& paths, CorpusFormat format,
                             const MatchOptions& options);

// OpenMP implementation. Line-per-sentence files are split into byte ranges
// aligned on line boundaries and processed by a worker pool; results are
// stitched in (file, range) order, so the match stream is identical to the
// serial one for every thread count and chunk size. The tsv format is
// processed one file per task.
ExtractResult extract_parallel(const std::vector<std::string>& paths, CorpusFormat format,
                               const ExtractOptions& options);

// matches.tsv: pattern_id, weak, strong, file, offset.
void write_matches_tsv(const ExtractResult& result, std::ostream& out);
void write_matches_tsv(const ExtractResult& result, const std::string& path);

struct MatchRow {
    PatternId pattern;
    std::string weak;
    std::string strong;
    std::string file;
    std::uint64_t offset = 0;
};

std::vector<MatchRow> read_matches_tsv(const std::string& path);

} // namespace scalemate
