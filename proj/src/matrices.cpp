#include "chebwalk/matrices.hpp"

#include "text_lines.hpp"

#include <charconv>
#include <sstream>

namespace chebwalk {

RationalMatrix parse_matrix(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty matrix document");

  auto header = detail::split_words(lines.front().text);
  if (header.size() != 2 || header[0] != "matrix") {
    throw ParseError("line " + std::to_string(lines.front().number) +
                     ": expected header 'matrix <n>'");
  }
  const std::size_t n = detail::parse_count(header[1], lines.front().number, "dimension");
  if (lines.size() != n + 1) {
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " +
                     std::to_string(lines.size() - 1));
  }

  RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = lines[i + 1];
    auto words = detail::split_words(line.text);
    if (words.size() != n) {
      throw ParseError("line " + std::to_string(line.number) + ": expected " +
                       std::to_string(n) + " entries, found " + std::to_string(words.size()));
    }
    for (std::size_t j = 0; j < n; ++j) {
      try {
        a(i, j) = parse_rational(words[j]);
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line.number) + ": " + e.what());
      }
    }
  }
  return a;
}

std::string format_matrix(const RationalMatrix& a) {
  std::ostringstream out;
  out << "matrix " << a.dim() << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto row = a.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << to_string(row[j]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace chebwalk
