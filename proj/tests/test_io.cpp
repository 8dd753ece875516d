#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <regex>

#include "isostab/heuristic.hpp"
#include "isostab/io.hpp"
#include "support.hpp"

using namespace isostab;

namespace {

const char* kBox = "# unit box\nh 0 1 3\nh 4 1 3\nv 0 1 3\nv 4 1 3\n";

std::size_t count(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::size_t error_line(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST_CASE("line format") {
  const Instance s = parse_instance("h 10 2 8\n");
  REQUIRE(s.size() == 1);
  CHECK(s[0] == make_horizontal(10, 2, 8));
  const Instance b = parse_instance(kBox);
  CHECK(b.size() == 4);
  CHECK(b[2] == make_vertical(0, 1, 3));
  // Duplicates are preserved; blank lines and comments are skipped.
  CHECK(parse_instance("v 1 0 1\n\n  # x\nv 1 0 1 # trailing\n").size() == 2);
}

TEST_CASE("line format errors carry line numbers") {
  CHECK_THROWS_AS(parse_instance("v 0 8 2\n"), ParseError);
  CHECK(error_line("v 0 8 2\n") == 1);
  CHECK(error_line("h 0 0 1\n# c\nh 1 2\n") == 3);
  CHECK(error_line("h 0 0 1\nq 1 2 3\n") == 2);
  CHECK(error_line("h 0 0 1\nh 1 2 x\n") == 2);
  CHECK(error_line("h 0 0 1\nv 1 2 2\n") == 2);
  CHECK_THROWS_AS(parse_instance("# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse_instance(""), ParseError);
}

TEST_CASE("exact numbers") {
  CHECK(parse_decimal("12") == 12);
  CHECK(parse_decimal("-0.125") == oracle::rat(-1, 8));
  CHECK(parse_decimal("3e-2") == oracle::rat(3, 100));
  CHECK(parse_decimal("7/3") == oracle::rat(7, 3));
  CHECK(parse_decimal("0.1") == oracle::rat(1, 10));
  CHECK_THROWS_AS(parse_decimal("1/0"), ParseError);
  CHECK_THROWS_AS(parse_decimal("1..2"), ParseError);
  CHECK_THROWS_AS(parse_decimal(""), ParseError);
  CHECK(format_rational(oracle::rat(3, 8)) == "0.375");
  CHECK(format_rational(-2) == "-2");
  CHECK(format_rational(oracle::rat(1, 3)) == "1/3");
  CHECK(format_rational(oracle::rat(-7, 20)) == "-0.35");
}

TEST_CASE("format and parse are inverse") {
  for (long p = -40; p <= 40; p += 3)
    for (long q : {1L, 2L, 3L, 5L, 6L, 7L, 8L, 40L, 1024L}) {
      const Rational v = oracle::rat(p, q);
      CHECK(parse_decimal(format_rational(v)) == v);
    }
}

TEST_CASE("JSON round trip") {
  for (int i = 0; i < 50; ++i) {
    Instance s = random_instance(1 + i % 20, 30000 + i);
    // Include non-integer coordinates.
    s.push_back(make_horizontal(oracle::rat(i, 7), oracle::rat(-1, 3), oracle::rat(i + 1, 8)));
    const Json doc = instance_to_json(s);
    CHECK(instance_from_json(doc) == s);
    CHECK(parse_instance(doc.dump()) == s);
  }
}

TEST_CASE("JSON errors") {
  CHECK_THROWS_AS(parse_instance("{\"segments\": []}"), ParseError);
  CHECK_THROWS_AS(parse_instance("{\"segments\": [{\"orient\": \"d\", \"fixed\": \"0\", \"lo\": \"0\", \"hi\": \"1\"}]}"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance("{\"segments\": [{\"orient\": \"h\", \"fixed\": \"0\", \"lo\": \"2\", \"hi\": \"1\"}]}"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance("{\"segments\": [{\"orient\": \"h\", \"fixed\": \"0\", \"lo\": \"0\"}]}"), ParseError);
  CHECK_THROWS_AS(parse_instance("{\"segments\": "), ParseError);
  CHECK_THROWS_AS(parse_instance("{\"name\": \"x\"}"), ParseError);
}

TEST_CASE("result documents") {
  const Instance box = parse_instance(kBox);
  const Json doc = result_doc(box, solve(box));
  CHECK(doc.at("status") == "polygon");
  CHECK(doc.at("area") == "6");
  CHECK(doc.at("polygon").size() == 4);
  CHECK(doc.at("config").at("code") == "0000");
  for (const char* key : {"extremes", "connections", "hosts", "chains", "partitions"}) CHECK(doc.contains(key));
  CHECK_FALSE(doc.contains("line"));

  const Instance two = parse_instance("h 0 0 1\nh 5 10 11\n");
  const Json rej = result_doc(two, solve(two));
  CHECK(rej.at("status") == "rejected");
  CHECK(rej.at("reason") == "TooFewExtremes");
  CHECK_FALSE(rej.contains("polygon"));

  const Instance cols = parse_instance("v 0 0 10\nv 5 0 10\nv 10 0 10\n");
  const Json line = result_doc(cols, solve(cols));
  CHECK(line.at("status") == "line");
  CHECK(line.contains("line"));
  CHECK_FALSE(line.contains("polygon"));
}

TEST_CASE("SVG rendering") {
  const Instance box = parse_instance(kBox);
  const Json doc = result_doc(box, solve(box));
  const std::string svg = render_svg(doc, box);
  CHECK(count(svg, "<path[^>]*stroke=\"red\"") == 1);
  CHECK(count(svg, "stroke=\"red\"") == 1);
  CHECK(count(svg, "<line[^>]*stroke=\"black\"") == 4);
  CHECK(svg.find("area 6") != std::string::npos);
  CHECK(render_svg(result_doc(box, solve(box)), box) == svg);

  const Instance cols = parse_instance("v 0 0 10\nv 5 0 10\nv 10 0 10\n");
  const std::string lsvg = render_svg(result_doc(cols, solve(cols)), cols);
  CHECK(count(lsvg, "<line[^>]*stroke=\"red\"") == 1);
  CHECK(count(lsvg, "<path") == 0);

  const Instance two = parse_instance("h 0 0 1\nh 5 10 11\n");
  CHECK_THROWS_AS(render_svg(result_doc(two, solve(two)), two), std::invalid_argument);
}

TEST_CASE("reshape at the optimum and off it") {
  const Instance box = parse_instance(kBox);
  const auto opt = solve(box).polygon();
  const ReshapeResult at = reshape(box, opt.assignment.vertex);
  CHECK(at.valid);
  CHECK(at.area == opt.area);
  auto v = opt.assignment.vertex;
  v[0] = {2, 4};
  const ReshapeResult off = reshape(box, v);
  CHECK(off.valid);
  CHECK(off.area >= opt.area);
  v[0] = {9, 4};
  CHECK_THROWS_AS(reshape(box, v), ParseError);
  const Json d = reshape_doc(at);
  CHECK(d.at("valid") == true);
  CHECK(d.at("area") == "6");
  CHECK(d.at("violated").empty());
}

TEST_CASE("registry dump") {
  const std::string text = registry_text();
  CHECK(count(text, "\n") == 47);
  CHECK(text.find("four 1012:") != std::string::npos);
  CHECK(registry_json().size() == 47);
}
