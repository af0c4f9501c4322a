#include "opmotif/text_format.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace opm::text_format {

ParseError::ParseError(std::size_t line, std::string token)
    : Error("line " + std::to_string(line) + ": not an integer: '" + token + "'"),
      line_(line) {}

EmptyPatternLine::EmptyPatternLine(std::size_t line)
    : Error("line " + std::to_string(line) + ": empty pattern") {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

bool is_comment(std::string_view line) {
  for (char c : line) {
    if (is_space(c)) continue;
    return c == '#';
  }
  return false;
}

void parse_line(std::string_view line, std::size_t line_no, std::vector<Value>& out) {
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    std::string_view tok = line.substr(i, j - i);
    // from_chars rejects a leading '+'; accept it as plain decimal.
    std::string_view digits = tok.front() == '+' ? tok.substr(1) : tok;
    Value v{};
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
      throw ParseError(line_no, std::string(tok));
    out.push_back(v);
    i = j;
  }
}

template <class F>
void for_each_line(std::string_view content, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    f(content.substr(pos, nl - pos), ++line_no);
    pos = nl + 1;
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return ss.str();
}

}  // namespace

std::vector<Value> parse_integers(std::string_view content) {
  std::vector<Value> out;
  for_each_line(content, [&](std::string_view line, std::size_t no) {
    if (!is_comment(line)) parse_line(line, no, out);
  });
  return out;
}

IntSeq read_sequence_file(const std::filesystem::path& path) {
  return IntSeq::validate_nonempty(parse_integers(slurp(path)));
}

std::vector<IntSeq> parse_pattern_lines(std::string_view content) {
  std::vector<IntSeq> patterns;
  std::vector<std::size_t> blank_lines;
  for_each_line(content, [&](std::string_view line, std::size_t no) {
    if (is_comment(line)) return;
    std::vector<Value> vals;
    parse_line(line, no, vals);
    if (vals.empty()) {
      blank_lines.push_back(no);
      return;
    }
    if (!blank_lines.empty()) throw EmptyPatternLine(blank_lines.front());
    patterns.push_back(IntSeq::validate(std::move(vals)));
  });
  if (patterns.empty()) throw EmptyInput();
  return patterns;
}

std::vector<IntSeq> read_pattern_lines(const std::filesystem::path& path) {
  return parse_pattern_lines(slurp(path));
}

void write_sequence(std::ostream& out, const IntSeq& s) {
  for (Value v : s.values()) out << v << '\n';
}

}  // namespace opm::text_format
