#include "scalemate/corpus.hpp"

#include <fstream>

#include "scalemate/errors.hpp"
#include "scalemate/text.hpp"

namespace scalemate {

namespace {
constexpr std::size_t kMaxStoredErrors = 50;
}

std::optional<CorpusFormat> corpus_format_from_string(std::string_view name) {
    if (name == "underscore") return CorpusFormat::Underscore;
    if (name == "tsv") return CorpusFormat::Tsv;
    return std::nullopt;
}

std::string_view to_string(CorpusFormat format) {
    switch (format) {
    case CorpusFormat::Underscore: return "underscore";
    case CorpusFormat::Tsv: return "tsv";
    }
    return "?";
}

void CorpusReader::record_error(std::size_t line_no, std::string message) {
    ++lines_skipped_;
    if (errors_.size() < kMaxStoredErrors) {
        errors_.push_back(LineError{line_no, std::move(message)});
    }
}

TagSet default_adjective_tags() {
    return TagSet{"JJ", "JJR", "JJS"};
}

TagSet parse_tag_set(std::string_view comma_separated) {
    TagSet out;
    for (std::string_view part : split_char(comma_separated, ',')) {
        while (!part.empty() && (part.front() == ' ' || part.front() == '\t')) part.remove_prefix(1);
        while (!part.empty() && (part.back() == ' ' || part.back() == '\t')) part.remove_suffix(1);
        if (!part.empty()) out.emplace(part);
    }
    return out;
}

std::optional<TaggedToken> parse_underscore_token(std::string_view token) {
    std::size_t pos = token.rfind('_');
    if (pos == std::string_view::npos || pos == 0 || pos + 1 == token.size()) return std::nullopt;
    return TaggedToken{to_lower_ascii(token.substr(0, pos)), std::string(token.substr(pos + 1))};
}

bool parse_underscore_line(std::string_view line, std::vector<TaggedToken>& out) {
    out.clear();
    for (std::string_view raw : split_whitespace(line)) {
        auto token = parse_underscore_token(raw);
        if (!token) return false;
        out.push_back(std::move(*token));
    }
    return true;
}

namespace {

class UnderscoreReader final : public CorpusReader {
public:
    UnderscoreReader(const std::string& path, std::ifstream in)
        : path_(path), in_(std::move(in)) {}

    std::optional<Sentence> next() override {
        std::string line;
        while (std::getline(in_, line)) {
            std::uint64_t line_start = offset_;
            offset_ += line.size() + 1;
            ++lines_read_;
            std::string_view body = strip_cr(line);
            if (body.empty()) {
                ++lines_skipped_;
                continue;
            }
            Sentence sentence;
            sentence.source_offset = line_start;
            if (!parse_underscore_line(body, sentence.tokens)) {
                record_error(lines_read_, path_ + ":" + std::to_string(lines_read_) +
                                              ": token without word_TAG separator");
                continue;
            }
            return sentence;
        }
        return std::nullopt;
    }

private:
    std::string path_;
    std::ifstream in_;
    std::uint64_t offset_ = 0;
};

class TsvReader final : public CorpusReader {
public:
    TsvReader(const std::string& path, std::ifstream in)
        : path_(path), in_(std::move(in)) {}

    std::optional<Sentence> next() override {
        std::string line;
        Sentence sentence;
        bool open = false;
        while (std::getline(in_, line)) {
            std::uint64_t line_start = offset_;
            offset_ += line.size() + 1;
            ++lines_read_;
            std::string_view body = strip_cr(line);
            if (body.empty()) {
                if (open) return sentence;
                continue; // leading or repeated separators
            }
            std::size_t tab = body.find('\t');
            if (tab == std::string_view::npos || tab == 0 || tab + 1 == body.size()) {
                record_error(lines_read_, path_ + ":" + std::to_string(lines_read_) +
                                              ": expected word<TAB>tag");
                continue;
            }
            if (!open) {
                open = true;
                sentence.source_offset = line_start;
            }
            sentence.tokens.push_back(TaggedToken{to_lower_ascii(body.substr(0, tab)),
                                                  std::string(body.substr(tab + 1))});
        }
        if (open) return sentence;
        return std::nullopt;
    }

private:
    std::string path_;
    std::ifstream in_;
    std::uint64_t offset_ = 0;
};

} // namespace

std::unique_ptr<CorpusReader> open_corpus(const std::string& path, CorpusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);
    switch (format) {
    case CorpusFormat::Underscore: return std::make_unique<UnderscoreReader>(path, std::move(in));
    case CorpusFormat::Tsv: return std::make_unique<TsvReader>(path, std::move(in));
    }
    throw ConfigError("unknown corpus format");
}

} // namespace scalemate
