#include "scalemate/extract.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scalemate/errors.hpp"
#include "scalemate/text.hpp"

namespace scalemate {

namespace {

struct Task {
    std::uint32_t file_id = 0;
    std::uint64_t begin = 0; // first byte that may start a line
    std::uint64_t end = 0;   // lines starting at >= end belong to the next task
    bool whole_file = true;
};

struct TaskResult {
    std::vector<ExtractedMatch> matches;
    CorpusStats stats;
    std::string error;
};

// Matches every sentence a CorpusReader yields; used for whole-file tasks.
void run_reader_task(CorpusReader& reader, std::uint32_t file_id, const MatchOptions& options,
                     TaskResult& out) {
    std::vector<PatternMatch> sentence_matches;
    while (auto sentence = reader.next()) {
        ++out.stats.sentences;
        sentence_matches.clear();
        match_sentence(*sentence, options, sentence_matches);
        for (PatternMatch& match : sentence_matches) {
            out.matches.push_back(ExtractedMatch{file_id, std::move(match)});
        }
    }
    out.stats.lines = reader.lines_read();
    out.stats.skipped = reader.lines_skipped();
}

// Byte-range worker for the line-per-sentence format. Owns the lines whose
// first byte lies in [begin, end).
void run_range_task(const std::string& path, const Task& task, const MatchOptions& options,
                    TaskResult& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);

    std::uint64_t cursor = task.begin;
    if (task.begin > 0) {
        in.seekg(static_cast<std::streamoff>(task.begin - 1));
        int prev = in.get();
        if (prev == std::char_traits<char>::eof()) return;
        if (prev != '\n') {
            std::string partial;
            if (!std::getline(in, partial)) return;
            cursor = task.begin + partial.size() + 1;
        }
    }

    std::string line;
    std::vector<PatternMatch> sentence_matches;
    Sentence sentence;
    while (cursor < task.end && std::getline(in, line)) {
        std::uint64_t line_start = cursor;
        cursor += line.size() + 1;
        ++out.stats.lines;
        std::string_view body = strip_cr(line);
        if (body.empty()) {
            ++out.stats.skipped;
            continue;
        }
        if (!parse_underscore_line(body, sentence.tokens)) {
            ++out.stats.skipped;
            continue;
        }
        sentence.source_offset = line_start;
        ++out.stats.sentences;
        sentence_matches.clear();
        match_sentence(sentence, options, sentence_matches);
        for (PatternMatch& match : sentence_matches) {
            out.matches.push_back(ExtractedMatch{task.file_id, std::move(match)});
        }
    }
}

void run_task(const std::vector<std::string>& paths, CorpusFormat format, const Task& task,
              const MatchOptions& options, TaskResult& out) {
    const std::string& path = paths[task.file_id];
    if (task.whole_file) {
        auto reader = open_corpus(path, format);
        run_reader_task(*reader, task.file_id, options, out);
    } else {
        run_range_task(path, task, options, out);
    }
}

std::vector<Task> plan_tasks(const std::vector<std::string>& paths, CorpusFormat format,
                             std::uint64_t chunk_bytes) {
    std::vector<Task> tasks;
    for (std::uint32_t file_id = 0; file_id < paths.size(); ++file_id) {
        if (format != CorpusFormat::Underscore) {
            tasks.push_back(Task{file_id, 0, 0, true});
            continue;
        }
        std::error_code ec;
        std::uint64_t size = std::filesystem::file_size(paths[file_id], ec);
        if (ec) throw IoError("cannot stat corpus file: " + paths[file_id]);
        if (size <= chunk_bytes || chunk_bytes == 0) {
            tasks.push_back(Task{file_id, 0, 0, true});
            continue;
        }
        for (std::uint64_t begin = 0; begin < size; begin += chunk_bytes) {
            std::uint64_t end = std::min(begin + chunk_bytes, size);
            if (end == size) end = UINT64_MAX; // last chunk also owns a final unterminated line
            tasks.push_back(Task{file_id, begin, end, false});
        }
    }
    return tasks;
}

ExtractResult stitch(const std::vector<std::string>& paths, std::vector<TaskResult>& results) {
    for (const TaskResult& result : results) {
        if (!result.error.empty()) throw IoError(result.error);
    }
    ExtractResult out;
    out.files = paths;
    std::size_t total = 0;
    for (const TaskResult& result : results) total += result.matches.size();
    out.matches.reserve(total);
    for (TaskResult& result : results) {
        out.stats += result.stats;
        std::move(result.matches.begin(), result.matches.end(), std::back_inserter(out.matches));
        result.matches.clear();
    }
    return out;
}

} // namespace

ExtractResult extract_serial(const std::vector<std::string>& paths, CorpusFormat format,
                             const MatchOptions& options) {
    ExtractResult out;
    out.files = paths;
    for (std::uint32_t file_id = 0; file_id < paths.size(); ++file_id) {
        auto reader = open_corpus(paths[file_id], format);
        TaskResult result;
        run_reader_task(*reader, file_id, options, result);
        out.stats += result.stats;
        std::move(result.matches.begin(), result.matches.end(), std::back_inserter(out.matches));
    }
    return out;
}

ExtractResult extract_parallel(const std::vector<std::string>& paths, CorpusFormat format,
                               const ExtractOptions& options) {
    std::vector<Task> tasks = plan_tasks(paths, format, options.chunk_bytes);
    std::vector<TaskResult> results(tasks.size());

    int jobs = options.jobs;
#ifdef _OPENMP
    if (jobs <= 0) jobs = omp_get_max_threads();
#else
    jobs = 1;
#endif

#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks.size()); ++t) {
        try {
            run_task(paths, format, tasks[t], options.match, results[t]);
        } catch (const std::exception& e) {
            results[t].error = e.what();
        }
    }

    return stitch(paths, results);
}

void write_matches_tsv(const ExtractResult& result, std::ostream& out) {
    out << "pattern_id\tweak\tstrong\tfile\toffset\n";
    for (const ExtractedMatch& m : result.matches) {
        out << to_string(m.match.pattern) << '\t' << m.match.weak << '\t' << m.match.strong << '\t'
            << result.files[m.file_id] << '\t' << m.match.sentence_offset << '\n';
    }
}

void write_matches_tsv(const ExtractResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write matches file: " + path);
    write_matches_tsv(result, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

std::vector<MatchRow> read_matches_tsv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open matches file: " + path);
    std::vector<MatchRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = strip_cr(line);
        std::string where = path + ":" + std::to_string(line_no);
        if (!header_seen) {
            if (!body.starts_with("pattern_id\t")) throw ParseError(where + ": missing matches header");
            header_seen = true;
            continue;
        }
        if (body.empty()) continue;
        auto fields = split_char(body, '\t');
        if (fields.size() != 5) throw ParseError(where + ": expected 5 columns");
        auto pattern = pattern_from_string(fields[0]);
        if (!pattern) throw ParseError(where + ": unknown pattern id '" + std::string(fields[0]) + "'");
        if (fields[1].empty() || fields[2].empty()) throw ParseError(where + ": empty adjective");
        MatchRow row;
        row.pattern = *pattern;
        row.weak = std::string(fields[1]);
        row.strong = std::string(fields[2]);
        row.file = std::string(fields[3]);
        auto [ptr, ec] = std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(), row.offset);
        if (ec != std::errc{} || ptr != fields[4].data() + fields[4].size()) {
            throw ParseError(where + ": bad offset");
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw ParseError(path + ":1: missing matches header");
    return rows;
}

} // namespace scalemate
