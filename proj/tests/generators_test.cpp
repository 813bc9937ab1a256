#include "snb/generators.hpp"

#include <utility>
#include <vector>

#include "doctest.h"
#include "snb/analysis.hpp"
#include "snb/errors.hpp"

using snb::Digraph;
using snb::Family;
using snb::GenSpec;
using snb::VertexSet;

TEST_CASE("seeded generation is reproducible") {
  Digraph a = snb::gen_random_oriented(10, 0.4, 99);
  Digraph b = snb::gen_random_oriented(10, 0.4, 99);
  Digraph c = snb::gen_random_oriented(10, 0.4, 100);
  CHECK(a == b);
  CHECK_FALSE(a == c);

  CHECK(snb::gen_random_tournament(8, 5) == snb::gen_random_tournament(8, 5));
}

TEST_CASE("edge probability extremes") {
  CHECK(snb::gen_random_oriented(12, 0.0, 1).arc_count() == 0);
  Digraph dense = snb::gen_random_oriented(12, 1.0, 1);
  CHECK(dense.arc_count() == 12 * 11 / 2);
  CHECK(dense.is_tournament());
  CHECK_THROWS_AS(snb::gen_random_oriented(5, 1.5, 1), snb::InvalidProbability);
  CHECK_THROWS_AS(snb::gen_random_oriented(5, -0.1, 1),
                  snb::InvalidProbability);
}

TEST_CASE("arc frequency tracks p") {
  // 40 pairs * 50 seeds = 2000 draws at p = 0.5; a 10-sigma band is
  // roughly plus or minus 220 arcs around 1000
  long long arcs = 0;
  for (unsigned seed = 0; seed < 50; ++seed)
    arcs += snb::gen_random_oriented(/*n=*/10, 0.5, seed).arc_count();
  CHECK(arcs > 780);
  CHECK(arcs < 1220);
}

TEST_CASE("both orientations appear") {
  int fwd = 0, bwd = 0;
  for (unsigned seed = 0; seed < 200; ++seed) {
    Digraph t = snb::gen_random_tournament(2, seed);
    if (t.has_arc(0, 1))
      ++fwd;
    else
      ++bwd;
  }
  CHECK(fwd > 50);
  CHECK(bwd > 50);
}

TEST_CASE("rotational tournament is regular") {
  for (int n = 3; n <= 11; n += 2) {
    Digraph t = snb::gen_circulant_regular(n);
    CHECK(t.is_tournament());
    for (int v = 0; v < n; ++v) {
      CHECK(t.out_degree(v) == (n - 1) / 2);
      CHECK(t.in_degree(v) == (n - 1) / 2);
    }
  }
  CHECK_THROWS_AS(snb::gen_circulant_regular(4), snb::EvenOrder);
  CHECK_THROWS_AS(snb::gen_circulant_regular(-3), snb::EvenOrder);
}

TEST_CASE("almost regular tournament structure") {
  Digraph t4 = snb::gen_almost_regular(4);
  std::vector<std::pair<int, int>> want = {{0, 1}, {0, 2}, {1, 2},
                                           {1, 3}, {2, 3}, {3, 0}};
  CHECK(t4.arcs() == want);

  for (int n = 2; n <= 14; n += 2) {
    Digraph t = snb::gen_almost_regular(n);
    CHECK(t.is_tournament());
    int surplus = 0, deficit = 0;
    for (int v = 0; v < n; ++v) {
      int diff = t.out_degree(v) - t.in_degree(v);
      CHECK((diff == 1 || diff == -1));
      (diff == 1 ? surplus : deficit) += 1;
    }
    CHECK(surplus == n / 2);
    CHECK(deficit == n / 2);
  }
  CHECK_THROWS_AS(snb::gen_almost_regular(5), snb::OddOrder);
}

TEST_CASE("split generation labels Y first") {
  Digraph y = snb::gen_circulant_regular(5);
  snb::SplitDigraph s = snb::gen_split(3, y, 0.2, 0.4, 0.4, 42);
  CHECK(s.y() == VertexSet::full(5));
  CHECK(s.x() == (VertexSet{5, 6, 7}));
  // Y keeps its arcs
  for (auto [u, v] : y.arcs()) CHECK(s.graph().has_arc(u, v));

  snb::SplitDigraph complete = snb::gen_split(3, y, 0.0, 0.5, 0.5, 42);
  CHECK(complete.is_complete());

  CHECK_THROWS_AS(snb::gen_split(2, y, 0.5, 0.5, 0.5, 1),
                  snb::InvalidProbability);
  Digraph not_tournament(3, {{0, 1}});
  CHECK_THROWS_AS(snb::gen_split(1, not_tournament, 0.0, 0.5, 0.5, 1),
                  snb::NotATournament);
}

TEST_CASE("planar orientation has triangulation arc count") {
  for (int n = 3; n <= 20; ++n) {
    Digraph d = snb::gen_planar_orientation(n, n * 31u + 7);
    CHECK(d.order() == n);
    CHECK(d.arc_count() == 3 * n - 6);
  }
  CHECK(snb::gen_planar_orientation(12, 3) ==
        snb::gen_planar_orientation(12, 3));
  CHECK_THROWS_AS(snb::gen_planar_orientation(2, 1), snb::TooSmall);
}

TEST_CASE("bipartite orientation is triangle-free") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    Digraph d = snb::gen_bipartite_orientation(4, 5, 0.7, seed);
    CHECK(d.order() == 9);
    CHECK(snb::is_triangle_free_underlying(d));
    // no arcs inside either part
    CHECK(d.is_independent(VertexSet{0, 1, 2, 3}));
    CHECK(d.is_independent(VertexSet{4, 5, 6, 7, 8}));
  }
  CHECK(snb::gen_bipartite_orientation(3, 3, 1.0, 0).arc_count() == 9);
}

TEST_CASE("family names round trip") {
  for (Family f :
       {Family::OrientedRandom, Family::TournamentRandom,
        Family::CirculantRegular, Family::AlmostRegular, Family::Split,
        Family::CompleteSplit, Family::PlanarOrientation,
        Family::BipartiteOrientation}) {
    CHECK(snb::parse_family(snb::family_name(f)) == f);
  }
  CHECK(snb::family_name(Family::OrientedRandom) == "oriented-random");
  CHECK_THROWS_AS(snb::parse_family("no-such-family"), snb::SyntaxError);
}

TEST_CASE("declarative generation covers every family") {
  GenSpec oriented;
  oriented.family = Family::OrientedRandom;
  oriented.n = 9;
  oriented.p = 0.5;
  auto g1 = snb::generate(oriented, 7);
  CHECK(g1.graph().order() == 9);
  CHECK(g1.split() == nullptr);
  CHECK(g1.graph() == snb::generate(oriented, 7).graph());

  GenSpec split;
  split.family = Family::Split;
  split.x_size = 2;
  split.y_size = 5;
  split.y_family = Family::CirculantRegular;
  auto g2 = snb::generate(split, 3);
  REQUIRE(g2.split() != nullptr);
  CHECK(g2.split()->x() == (VertexSet{5, 6}));
  for (int v : g2.split()->y())
    CHECK(g2.graph().out(v).intersection_count(g2.split()->y()) == 2);

  GenSpec complete;
  complete.family = Family::CompleteSplit;
  complete.x_size = 3;
  complete.y_size = 4;
  complete.y_family = Family::AlmostRegular;
  complete.q_none = 0.0;
  complete.q_xy = 0.5;
  complete.q_yx = 0.5;
  auto g3 = snb::generate(complete, 11);
  REQUIRE(g3.split() != nullptr);
  CHECK(g3.split()->is_complete());

  GenSpec bip;
  bip.family = Family::BipartiteOrientation;
  bip.n1 = 3;
  bip.n2 = 4;
  bip.p = 0.6;
  CHECK(snb::generate(bip, 2).graph().order() == 7);

  GenSpec bad;
  bad.family = Family::CirculantRegular;
  bad.n = 6;
  CHECK_THROWS_AS(snb::generate(bad, 1), snb::EvenOrder);

  CHECK_FALSE(oriented.describe().empty());
  CHECK_FALSE(split.describe().empty());
}
