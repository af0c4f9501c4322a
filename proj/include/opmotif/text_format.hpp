#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "opmotif/core.hpp"

// Plain-text integer files: decimal integers separated by spaces and/or
// newlines; lines whose first non-blank character is '#' are comments.
namespace opm::text_format {

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string token);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Malformed line in a multi-pattern file (1-based line number).
class EmptyPatternLine : public Error {
 public:
  explicit EmptyPatternLine(std::size_t line);
};

std::vector<Value> parse_integers(std::string_view content);

// Throws IoError, ParseError, DuplicateValue, or EmptyInput.
IntSeq read_sequence_file(const std::filesystem::path& path);

// One pattern per non-comment line. A blank line before the last pattern
// line throws EmptyPatternLine; trailing blank lines are ignored.
std::vector<IntSeq> read_pattern_lines(const std::filesystem::path& path);
std::vector<IntSeq> parse_pattern_lines(std::string_view content);

void write_sequence(std::ostream& out, const IntSeq& s);

}  // namespace opm::text_format
