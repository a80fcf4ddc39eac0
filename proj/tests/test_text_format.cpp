#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "stsd/text_format.hpp"

using namespace stsd;

TEST_CASE("STS text round trip is byte-stable") {
  const auto f = oracle::fano();
  const std::string text = sts_to_string(f);
  CHECK(text.rfind("STS v=7\n0 1 3\n", 0) == 0);
  const auto back = parse_sts(text);
  CHECK(back == f);
  CHECK(sts_to_string(back) == text);
}

TEST_CASE("reader tolerates blank lines, CR and unsorted triples") {
  const auto s = parse_sts("STS v=7\r\n\n 3 1 0 \n");
  CHECK(s.order() == 7);
  CHECK(s[0] == Triple{0, 1, 3});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_sts(""), ParseError);
  CHECK_THROWS_WITH(parse_sts("TRIPLES v=7\n"), doctest::Contains("line 1"));
  CHECK_THROWS_WITH(parse_sts("STS v=7\n0 1\n"), doctest::Contains("line 2: expected three points"));
  CHECK_THROWS_WITH(parse_sts("STS v=7\n0 1 9\n"), doctest::Contains("outside 0..6"));
  CHECK_THROWS_WITH(parse_sts("STS v=7\n0 1 x\n"), doctest::Contains("non-negative integer"));
  CHECK_THROWS_WITH(parse_sts("STS n=7\n"), doctest::Contains("lacks v="));
  CHECK_THROWS_WITH(parse_sts("STS v=7\n0 1 3\n3 1 0\n"), doctest::Contains("duplicate"));
  try {
    parse_sts("STS v=7\n0 1 3\n\n0 -1 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("colouring round trip") {
  Colouring c;
  c.classes = {{0, 4}, {1}, {2, 3}};
  const std::string text = colouring_to_string(9, c);
  CHECK(text == "COLOURING v=9 k=3\n0 4\n1\n2 3\n");
  Point v = 0;
  const auto back = parse_colouring(text, &v);
  CHECK(v == 9);
  CHECK(back.classes == c.classes);
  CHECK_THROWS_WITH(parse_colouring("COLOURING v=9 k=2\n0\n"), doctest::Contains("declares 2 classes, found 1"));
  CHECK_THROWS_AS(parse_colouring("COLOURING v=9\n0\n"), ParseError);
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "stsd_text_format_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "ag.sts").string();
  save_sts_file(path, oracle::ag23());
  CHECK(load_sts_file(path) == oracle::ag23());
  CHECK_THROWS_WITH(load_sts_file((dir / "missing.sts").string()), doctest::Contains("cannot open"));
  std::filesystem::remove_all(dir);
}
