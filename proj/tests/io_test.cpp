#include "snb/io.hpp"

#include <cstdio>
#include <string>

#include "doctest.h"
#include "snb/enumeration.hpp"
#include "snb/errors.hpp"
#include "snb/generators.hpp"

using snb::Digraph;

TEST_CASE("arc list parsing") {
  Digraph d = snb::parse_arclist("# a 3-cycle\nn 3\n0 1\n1 2\n2 0\n");
  CHECK(d.order() == 3);
  CHECK(d.has_arc(2, 0));
  CHECK(d.arc_count() == 3);

  // blank lines, comments after the header, CRLF endings
  Digraph e = snb::parse_arclist("n 2\r\n\r\n# middle\r\n0 1\r\n");
  CHECK(e.has_arc(0, 1));

  Digraph empty = snb::parse_arclist("n 0\n");
  CHECK(empty.order() == 0);
}

TEST_CASE("arc list errors carry line numbers") {
  CHECK_THROWS_WITH_AS(snb::parse_arclist("n 2\n0 x\n"),
                       doctest::Contains("line 2"), snb::SyntaxError);
  CHECK_THROWS_AS(snb::parse_arclist("0 1\n"), snb::SyntaxError);
  CHECK_THROWS_AS(snb::parse_arclist(""), snb::SyntaxError);
  CHECK_THROWS_AS(snb::parse_arclist("n 2\n0 1 2\n"), snb::SyntaxError);
  CHECK_THROWS_AS(snb::parse_arclist("n 2\n0 1\n1 0\n"),
                  snb::OrientationViolation);
  CHECK_THROWS_AS(snb::parse_arclist("n 2\n0 2\n"), snb::VertexOutOfRange);
}

TEST_CASE("arc list round trips") {
  for (int n = 0; n <= 4; ++n) {
    snb::for_each_oriented(n, [&](std::uint64_t, const Digraph& d) {
      CHECK(snb::parse_arclist(snb::serialize_arclist(d)) == d);
    });
  }
}

TEST_CASE("digraph6 golden values") {
  // single arc 0->1 on two vertices
  CHECK(snb::serialize_digraph6(Digraph(2, {{0, 1}})) == "&AO");
  CHECK(snb::parse_digraph6("&AO") == Digraph(2, {{0, 1}}));
  // directed path on three vertices
  CHECK(snb::serialize_digraph6(Digraph(3, {{0, 1}, {1, 2}})) == "&BP?");
  // rotational tournament on five
  Digraph r5 = snb::gen_circulant_regular(5);
  CHECK(snb::serialize_digraph6(r5) == "&DWW[[?");
  CHECK(snb::parse_digraph6("&DWW[[?") == r5);
  // empty graphs
  CHECK(snb::serialize_digraph6(Digraph(0, {})) == "&?");
  CHECK(snb::parse_digraph6("&?").order() == 0);
}

TEST_CASE("digraph6 round trips") {
  for (int n = 0; n <= 4; ++n) {
    snb::for_each_oriented(n, [&](std::uint64_t, const Digraph& d) {
      std::string bytes = snb::serialize_digraph6(d);
      CHECK(snb::parse_digraph6(bytes) == d);
      CHECK(snb::serialize_digraph6(snb::parse_digraph6(bytes)) == bytes);
    });
  }
  // long-form order encoding kicks in above 62 vertices
  Digraph big(63, {{0, 62}, {10, 20}});
  std::string bytes = snb::serialize_digraph6(big);
  CHECK(bytes[1] == '~');
  CHECK(snb::parse_digraph6(bytes) == big);
}

TEST_CASE("digraph6 rejects malformed payloads") {
  CHECK_THROWS_AS(snb::parse_digraph6("AO"), snb::BadHeader);
  CHECK_THROWS_AS(snb::parse_digraph6(""), snb::BadHeader);
  CHECK_THROWS_AS(snb::parse_digraph6("&AP"), snb::BadPadding);  // stray bit
  CHECK_THROWS_AS(snb::parse_digraph6("&AO?"), snb::BadPadding);  // extra byte
  CHECK_THROWS_AS(snb::parse_digraph6("&AO\n"), snb::BadPadding);
  CHECK_THROWS_AS(snb::parse_digraph6("&A"), snb::BadPadding);  // truncated
  CHECK_THROWS_AS(snb::parse_digraph6("&AW"), snb::OrientationViolation);
  CHECK_THROWS_AS(snb::parse_digraph6("&A_"), snb::LoopArc);
  CHECK_THROWS_AS(snb::parse_digraph6(std::string("&A") + char(20)),
                  snb::BadPadding);  // byte below the printable window
}

TEST_CASE("format autodetection") {
  CHECK(snb::parse_auto("&AO") == Digraph(2, {{0, 1}}));
  CHECK(snb::parse_auto("n 2\n0 1\n") == Digraph(2, {{0, 1}}));
  CHECK(snb::parse_auto("&AO\n") == Digraph(2, {{0, 1}}));  // trailing newline
}

TEST_CASE("file save and load") {
  Digraph d = snb::gen_random_oriented(9, 0.5, 123);
  const std::string arc_path = "io_test_tmp.arcs";
  const std::string d6_path = "io_test_tmp.d6";
  snb::save_graph_file(arc_path, d, false);
  snb::save_graph_file(d6_path, d, true);
  CHECK(snb::load_graph_file(arc_path) == d);
  CHECK(snb::load_graph_file(d6_path) == d);
  std::remove(arc_path.c_str());
  std::remove(d6_path.c_str());
  CHECK_THROWS_AS(snb::load_graph_file("definitely_missing.arcs"), snb::Error);
}
