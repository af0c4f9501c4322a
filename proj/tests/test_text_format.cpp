#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "opmotif/text_format.hpp"

using namespace opm;
namespace tf = opm::text_format;

TEST_CASE("parse_integers") {
  CHECK(tf::parse_integers("4 12\n6\t16   10\n") == std::vector<Value>{4, 12, 6, 16, 10});
  CHECK(tf::parse_integers("# header\n  # indented comment\n1 -2 +3\r\n") ==
        std::vector<Value>{1, -2, 3});
  CHECK(tf::parse_integers("").empty());
  CHECK(tf::parse_integers("9223372036854775807") ==
        std::vector<Value>{9223372036854775807LL});
  try {
    (void)tf::parse_integers("1 2\n3 x4\n");
    FAIL("expected ParseError");
  } catch (const tf::ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(tf::parse_integers("1.5"), tf::ParseError);
  CHECK_THROWS_AS(tf::parse_integers("99999999999999999999"), tf::ParseError);
  CHECK_THROWS_AS(tf::parse_integers("+"), tf::ParseError);
}

TEST_CASE("pattern lines") {
  auto ps = tf::parse_pattern_lines("1 2\n# skip\n2 1\n\n");
  REQUIRE(ps.size() == 2);
  CHECK(ps[1].at(1) == 2);
  CHECK_THROWS_AS(tf::parse_pattern_lines("1 2\n\n2 1\n"), tf::EmptyPatternLine);
  CHECK_THROWS_AS(tf::parse_pattern_lines("1 2\n   \n3 4"), tf::EmptyPatternLine);
  CHECK_THROWS_AS(tf::parse_pattern_lines("\n"), EmptyInput);
  CHECK_THROWS_AS(tf::parse_pattern_lines("1 1\n"), DuplicateValue);
}

TEST_CASE("files") {
  const char* path = "text_format_roundtrip.txt";
  {
    std::ofstream out(path);
    tf::write_sequence(out, IntSeq::validate({5, -3, 8}));
  }
  CHECK(tf::read_sequence_file(path) == IntSeq::validate({5, -3, 8}));
  {
    std::ofstream out(path);
    out << "1 2 1\n";
  }
  CHECK_THROWS_AS(tf::read_sequence_file(path), DuplicateValue);
  {
    std::ofstream out(path);
    out << "# only a comment\n";
  }
  CHECK_THROWS_AS(tf::read_sequence_file(path), EmptyInput);
  std::remove(path);
  CHECK_THROWS_AS(tf::read_sequence_file("does/not/exist.txt"), tf::IoError);
}
