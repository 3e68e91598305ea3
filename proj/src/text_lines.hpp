#pragma once

// Shared line tokenizer for the edge-list and matrix text formats.

#include "chebwalk/rational.hpp"

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chebwalk::detail {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

// Non-blank lines that do not start with '#'.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

inline std::size_t parse_count(std::string_view word, std::size_t line, const char* what) {
  if (!word.empty() && word.front() == '-') {
    throw ParseError("line " + std::to_string(line) + ": negative " + what);
  }
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError("line " + std::to_string(line) + ": malformed " + what + " '" +
                     std::string(word) + "'");
  }
  return value;
}

}  // namespace chebwalk::detail
