#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scalemate {

// ASCII-only lowercasing; multibyte UTF-8 sequences pass through untouched.
std::string to_lower_ascii(std::string_view s);

bool eq_ignore_ascii_case(std::string_view a, std::string_view b);

// Splits on runs of spaces and tabs; no empty fields are produced.
std::vector<std::string_view> split_whitespace(std::string_view line);

// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string_view> split_char(std::string_view line, char sep);

// Drops a trailing '\r' so CRLF input behaves like LF input.
std::string_view strip_cr(std::string_view line);

// A tag counts as punctuation when it contains no ASCII letter or digit
// (Penn-style ".", ",", ":", "``", "''" and friends).
bool is_punct_tag(std::string_view tag);

} // namespace scalemate
