#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace scalemate {

struct TaggedToken {
    std::string surface; // lowercased at ingestion
    std::string tag;     // kept verbatim

    bool operator==(const TaggedToken&) const = default;
};

struct Sentence {
    std::vector<TaggedToken> tokens;
    std::uint64_t source_offset = 0; // byte offset of the sentence start in its file
};

enum class CorpusFormat {
    Underscore, // one sentence per line, word_TAG tokens
    Tsv,        // one word<TAB>tag per line, blank line ends a sentence
};

std::optional<CorpusFormat> corpus_format_from_string(std::string_view name);
std::string_view to_string(CorpusFormat format);

struct LineError {
    std::size_t line_no = 0; // 1-based
    std::string message;
};

// Pull-based sentence stream. Memory use is bounded by the longest sentence,
// never by file size. Malformed lines are skipped and counted, not fatal.
class CorpusReader {
public:
    virtual ~CorpusReader() = default;

    // Next sentence in file order, or nullopt at end of input.
    virtual std::optional<Sentence> next() = 0;

    std::size_t lines_read() const { return lines_read_; }
    std::size_t lines_skipped() const { return lines_skipped_; }

    // First few recoverable errors, for diagnostics; the count above is exact.
    const std::vector<LineError>& errors() const { return errors_; }

protected:
    void record_error(std::size_t line_no, std::string message);

    std::size_t lines_read_ = 0;
    std::size_t lines_skipped_ = 0;
    std::vector<LineError> errors_;
};

// Throws IoError when the file cannot be opened.
std::unique_ptr<CorpusReader> open_corpus(const std::string& path, CorpusFormat format);

using TagSet = std::unordered_set<std::string>;

TagSet default_adjective_tags(); // {JJ, JJR, JJS}
TagSet parse_tag_set(std::string_view comma_separated);

inline bool is_adjective(const TaggedToken& token, const TagSet& adjective_tags) {
    return adjective_tags.contains(token.tag);
}

// Splits `word_TAG` at the last underscore, lowercasing the word part.
// Returns nullopt when there is no separator or either side is empty.
std::optional<TaggedToken> parse_underscore_token(std::string_view token);

// Parses a whole whitespace-separated line of word_TAG tokens.
// Returns false (leaving `out` unspecified) when any token is malformed.
bool parse_underscore_line(std::string_view line, std::vector<TaggedToken>& out);

} // namespace scalemate
