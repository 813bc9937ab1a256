#include "snb/analysis.hpp"

#include <map>
#include <vector>

#include "doctest.h"
#include "snb/enumeration.hpp"
#include "snb/errors.hpp"
#include "snb/generators.hpp"

using snb::Digraph;
using snb::VertexSet;

namespace {

// Count transitive triangles and N+ -> N++ arcs by brute-force loops
// over vertex triples and pairs.
struct NaiveTriangles {
  long long tt = 0;
  std::vector<long long> tt_u;
  std::vector<long long> w_u;
};

NaiveTriangles naive_triangles(const Digraph& d) {
  const int n = d.order();
  NaiveTriangles r;
  r.tt_u.assign(n, 0);
  r.w_u.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!d.has_arc(u, v)) continue;
      for (int w = 0; w < n; ++w) {
        if (d.has_arc(u, w) && d.has_arc(v, w)) ++r.tt_u[u];
      }
    }
  }
  for (int u = 0; u < n; ++u) r.tt += r.tt_u[u];
  for (int u = 0; u < n; ++u) {
    VertexSet npp = d.second_out(u);
    for (int v : d.out(u))
      for (int w : npp)
        if (d.has_arc(v, w)) ++r.w_u[u];
  }
  return r;
}

bool naive_two_king(const Digraph& d, int u) {
  VertexSet reach{u};
  reach |= d.out(u);
  reach |= d.second_out(u);
  return reach == d.vertices();
}

}  // namespace

TEST_CASE("directed path: endpoints witness the inequalities") {
  Digraph path(3, {{0, 1}, {1, 2}});
  CHECK(snb::sullivan_vertices(path) == VertexSet{0});
  CHECK(snb::seymour_vertices(path) == VertexSet{0, 2});
  CHECK(snb::two_kings(path) == VertexSet{0});
  auto st = snb::conjecture_status(path);
  CHECK(st.sources == VertexSet{0});
  CHECK(st.holds_sullivan);
  CHECK(st.holds_seymour);
}

TEST_CASE("3-cycle: every vertex qualifies everywhere") {
  Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
  VertexSet all = VertexSet::full(3);
  CHECK(snb::sullivan_vertices(c3) == all);
  CHECK(snb::seymour_vertices(c3) == all);
  CHECK(snb::two_kings(c3) == all);
  auto ts = snb::triangle_stats(c3);
  CHECK(ts.tt_total == 0);
  CHECK(ts.w_u == std::vector<long long>{1, 1, 1});
}

TEST_CASE("triangle census matches the brute-force count") {
  for (int n = 0; n <= 4; ++n) {
    snb::for_each_oriented(n, [&](std::uint64_t, const Digraph& d) {
      auto fast = snb::triangle_stats(d);
      auto slow = naive_triangles(d);
      CHECK(fast.tt_total == slow.tt);
      CHECK(fast.tt_u == slow.tt_u);
      CHECK(fast.w_u == slow.w_u);
      CHECK(fast.identity_residual == 0);
    });
  }
  // rotational tournament on 5: each vertex sources one transitive triangle
  Digraph r5 = snb::gen_circulant_regular(5);
  CHECK(snb::triangle_stats(r5).tt_total == 5);
  CHECK(snb::triangle_stats(r5).tt_u == std::vector<long long>(5, 1));
  // transitive tournament on 5: all C(5,3) triangles are transitive
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) arcs.emplace_back(i, j);
  CHECK(snb::triangle_stats(Digraph(5, arcs)).tt_total == 10);
}

TEST_CASE("2-king detection matches closed-neighborhood coverage") {
  snb::for_each_oriented(4, [&](std::uint64_t, const Digraph& d) {
    VertexSet kings = snb::two_kings(d);
    for (int u = 0; u < 4; ++u) {
      CHECK(kings.contains(u) == naive_two_king(d, u));
      CHECK(snb::is_two_king(d, u) == naive_two_king(d, u));
    }
  });
}

TEST_CASE("every tournament yields a verified 2-king") {
  for (int n = 1; n <= 5; ++n) {
    snb::for_each_tournament(n, [&](std::uint64_t, const Digraph& t) {
      int k = snb::tournament_2king(t);
      CHECK(snb::is_two_king(t, k));
    });
  }
  CHECK_THROWS_AS(snb::tournament_2king(Digraph(0, {})),
                  snb::PreconditionViolated);
  CHECK_THROWS_AS(snb::tournament_2king(Digraph(3, {{0, 1}})),
                  snb::NotATournament);
}

TEST_CASE("dominating 2-king beats the non-king's closed out-neighborhood") {
  snb::for_each_tournament(4, [&](std::uint64_t, const Digraph& t) {
    for (int x = 0; x < 4; ++x) {
      if (snb::is_two_king(t, x)) {
        CHECK_THROWS_AS(snb::dominating_2king(t, x), snb::AlreadyKing);
        continue;
      }
      int y = snb::dominating_2king(t, x);
      CHECK(snb::is_two_king(t, y));
      CHECK(t.has_arc(y, x));
      for (int v : t.out(x)) CHECK(t.has_arc(y, v));
    }
  });
}

TEST_CASE("triangle counts over all 3-vertex tournaments") {
  std::map<long long, int> histogram;
  snb::for_each_tournament(3, [&](std::uint64_t, const Digraph& t) {
    ++histogram[snb::triangle_stats(t).tt_total];
  });
  CHECK(histogram == std::map<long long, int>{{0, 2}, {1, 6}});
}

TEST_CASE("few transitive triangles force a witness") {
  snb::for_each_oriented(4, [&](std::uint64_t, const Digraph& d) {
    auto s = snb::tt_sufficiency(d);
    CHECK(s.tt == snb::triangle_stats(d).tt_total);
    CHECK(s.arcs == d.arc_count());
    CHECK(s.guaranteed == (s.tt < s.arcs));
    if (s.guaranteed) CHECK_FALSE(snb::sullivan_vertices(d).empty());
  });
}

TEST_CASE("sources and 2-kings always satisfy the in-degree inequality") {
  for (std::uint64_t idx = 0; idx < snb::oriented_count(5); idx += 101) {
    Digraph d = snb::decode_oriented(5, idx);
    auto st = snb::conjecture_status(d);
    CHECK(st.sources.is_subset_of(st.sullivan_vertices));
    CHECK(st.two_kings.is_subset_of(st.sullivan_vertices));
    CHECK(st.holds_sullivan == !st.sullivan_vertices.empty());
    CHECK(st.holds_seymour == !st.seymour_vertices.empty());
  }
}

TEST_CASE("underlying triangle detection") {
  CHECK(snb::is_triangle_free_underlying(Digraph(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(
      snb::is_triangle_free_underlying(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK(snb::is_triangle_free_underlying(
      snb::gen_bipartite_orientation(3, 3, 0.8, 7)));
}
