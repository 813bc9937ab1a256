#include "snb/split.hpp"

#include <vector>

#include "doctest.h"
#include "snb/enumeration.hpp"
#include "snb/errors.hpp"
#include "snb/generators.hpp"
#include "snb/harness.hpp"

using snb::Digraph;
using snb::SplitDigraph;
using snb::VertexSet;

namespace {

Digraph r5() { return snb::gen_circulant_regular(5); }

// AR4 with an extra vertex 4 fed by 2->4; source-free, |X| = 1.
SplitDigraph ar4_plus_sink() {
  std::vector<std::pair<int, int>> arcs = snb::gen_almost_regular(4).arcs();
  arcs.emplace_back(2, 4);
  return SplitDigraph(Digraph(5, arcs), VertexSet{4});
}

}  // namespace

TEST_CASE("split construction validates both sides") {
  Digraph d(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  SplitDigraph s(d, VertexSet{3});
  CHECK(s.y() == VertexSet{0, 1, 2});
  CHECK(s.is_complete() == false);  // 3 is adjacent to 0 only

  CHECK_THROWS_AS(SplitDigraph(d, VertexSet{0}), snb::NotTournamentOnY);
  Digraph e(3, {{0, 1}});
  CHECK_THROWS_AS(SplitDigraph(e, VertexSet{0, 1}), snb::NotIndependent);
  CHECK_THROWS_AS(SplitDigraph(e, VertexSet{5}), snb::VertexOutOfRange);
}

TEST_CASE("sum identities hold on every small split graph") {
  // every placement: Y a 3-vertex tournament, two X vertices, all cross
  // patterns
  snb::for_each_tournament(3, [&](std::uint64_t, const Digraph& y) {
    const std::uint64_t total = snb::split_pattern_count(2, 3);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      SplitDigraph s = snb::decode_split_pattern(2, y, idx);
      auto sums = snb::check_sum_identities(s);
      CHECK(sums.ok);
      CHECK(sums.lhs1 == sums.rhs1);
      CHECK(sums.lhs2 == sums.rhs2);
    }
  });
}

TEST_CASE("sum identities hold on generated split graphs") {
  for (unsigned seed = 1; seed <= 40; ++seed) {
    Digraph y = snb::gen_random_tournament(7, seed);
    SplitDigraph s = snb::gen_split(4, y, 0.2, 0.5, 0.3, seed * 11);
    CHECK(snb::check_sum_identities(s).ok);
  }
}

TEST_CASE("single-X king search follows the in-neighbor") {
  // rotational tournament plus x = 5 with one feeding arc: the
  // in-neighbor of x is already a king of D[Y]
  std::vector<std::pair<int, int>> arcs = r5().arcs();
  arcs.emplace_back(0, 5);
  SplitDigraph direct(Digraph(6, arcs), VertexSet{5});
  int k = snb::single_x_2king(direct);
  CHECK(k == 0);
  CHECK(snb::is_two_king(direct.graph(), k));

  // the in-neighbor (vertex 2) is not a king of D[Y], so the search
  // falls through to a king dominating its closed out-neighborhood
  SplitDigraph indirect = ar4_plus_sink();
  int k2 = snb::single_x_2king(indirect);
  CHECK(indirect.y().contains(k2));
  CHECK(snb::is_two_king(indirect.graph(), k2));
  CHECK(indirect.graph().has_arc(k2, 2));
}

TEST_CASE("single-X king search rejects bad inputs") {
  SplitDigraph no_x(r5(), VertexSet{});
  CHECK_THROWS_AS(snb::single_x_2king(no_x), snb::PreconditionViolated);

  std::vector<std::pair<int, int>> arcs = r5().arcs();
  arcs.emplace_back(5, 0);  // x is a source
  SplitDigraph with_source(Digraph(6, arcs), VertexSet{5});
  CHECK_THROWS_AS(snb::single_x_2king(with_source), snb::PreconditionViolated);
}

TEST_CASE("complete split Sullivan construction") {
  SplitDigraph pair(Digraph(2, {{0, 1}}), VertexSet{0});
  CHECK(snb::complete_split_sullivan(pair) == 0);

  SplitDigraph no_x(r5(), VertexSet{});
  int v = snb::complete_split_sullivan(no_x);
  auto prof = snb::degree_profile(no_x.graph(), v);
  CHECK(prof.d_pp >= prof.d_minus);

  for (unsigned seed = 1; seed <= 30; ++seed) {
    Digraph y = snb::gen_random_tournament(6, seed);
    SplitDigraph s = snb::gen_split(3, y, 0.0, 0.6, 0.4, seed * 7);
    REQUIRE(s.is_complete());
    int w = snb::complete_split_sullivan(s);
    auto p = snb::degree_profile(s.graph(), w);
    CHECK(p.d_pp >= p.d_minus);
  }

  Digraph gap(3, {{0, 2}});  // X = {0,1}, pair (1,2) unjoined
  CHECK_THROWS_AS(
      snb::complete_split_sullivan(SplitDigraph(gap, VertexSet{0, 1})),
      snb::NotCompleteSplit);
  CHECK_THROWS_AS(
      snb::complete_split_sullivan(SplitDigraph(Digraph(0, {}), VertexSet{})),
      snb::PreconditionViolated);
}

TEST_CASE("vertex context partitions Y and C dominates A") {
  for (unsigned seed = 1; seed <= 25; ++seed) {
    Digraph y = snb::gen_random_tournament(6, seed);
    SplitDigraph s = snb::gen_split(3, y, 0.4, 0.3, 0.3, seed * 13);
    for (int x : s.x()) {
      auto ctx = snb::vertex_context(s, x);
      CHECK((ctx.a | ctx.b | ctx.c) == s.y());
      CHECK_FALSE(ctx.a.intersects(ctx.b));
      CHECK_FALSE(ctx.a.intersects(ctx.c));
      CHECK_FALSE(ctx.b.intersects(ctx.c));
      for (int c : ctx.c)
        for (int a : ctx.a) CHECK(s.graph().has_arc(c, a));
    }
  }
  SplitDigraph s(r5(), VertexSet{});
  CHECK_THROWS_AS(snb::vertex_context(s, 0), snb::VertexNotInX);
}

TEST_CASE("regular tournament core satisfies all six statements") {
  SplitDigraph bare(r5(), VertexSet{});
  auto rep = snb::regular_split_report(bare);
  CHECK(rep.all());
  CHECK(rep.c1_witness == 0);
  CHECK(rep.c2_witness == 0);

  Digraph d(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
  auto rep2 = snb::regular_split_report(SplitDigraph(d, VertexSet{3}));
  CHECK(rep2.all());
  CHECK(snb::seymour_vertices(d).contains(rep2.c1_witness));
  CHECK(snb::sullivan_vertices(d).contains(rep2.c2_witness));

  SplitDigraph uneven(snb::gen_almost_regular(4), VertexSet{});
  CHECK_THROWS_AS(snb::regular_split_report(uneven),
                  snb::NotRegularTournamentOnY);
}

TEST_CASE("surplus and deficit classes of near-regular tournaments") {
  auto part = snb::ar_partition(snb::gen_almost_regular(4));
  CHECK(part.d == 2);
  CHECK(part.v_plus == VertexSet{0, 1});
  CHECK(part.v_minus == VertexSet{2, 3});

  CHECK_THROWS_AS(snb::ar_partition(r5()), snb::NotAlmostRegular);
  CHECK_THROWS_AS(snb::ar_partition(Digraph(3, {{0, 1}})),
                  snb::NotATournament);
}

TEST_CASE("second-degree closed forms on the 4-vertex instance") {
  auto report = snb::ar_second_degree_formulas(snb::gen_almost_regular(4));
  REQUIRE(report.per_vertex.size() == 4);
  CHECK(report.ok);
  // vertices 0, 1, 3 are 2-kings; 2 is not
  CHECK(report.per_vertex[0].is_2king);
  CHECK(report.per_vertex[0].dpp_minus_dm == 0);
  CHECK(report.per_vertex[0].dpp_minus_dp == -1);  // d+ = d
  CHECK_FALSE(report.per_vertex[2].is_2king);
  CHECK(report.per_vertex[2].dpp_minus_dm == -1);
  CHECK(report.per_vertex[2].dpp_minus_dp == 0);
  CHECK(report.per_vertex[3].is_2king);
  CHECK(report.per_vertex[3].dpp_minus_dp == 1);  // king with d- = d
}

TEST_CASE("closed forms hold across generated even tournaments") {
  for (int n = 2; n <= 12; n += 2) {
    auto report = snb::ar_second_degree_formulas(snb::gen_almost_regular(n));
    CHECK(report.ok);
    for (const auto& check : report.per_vertex) CHECK(check.ok);
  }
}

TEST_CASE("set degree bound and its tightness") {
  Digraph ar4 = snb::gen_almost_regular(4);
  auto surplus = snb::set_degree_bound_check(ar4, VertexSet{0, 1});
  CHECK(surplus.diff == 2);
  CHECK(surplus.tight_plus);
  CHECK_FALSE(surplus.tight_minus);

  auto mixed = snb::set_degree_bound_check(ar4, VertexSet{0, 2});
  CHECK(mixed.diff == 0);
  CHECK_FALSE(mixed.tight_plus);

  auto deficit = snb::set_degree_bound_check(ar4, VertexSet{2, 3});
  CHECK(deficit.diff == -2);
  CHECK(deficit.tight_minus);

  for (int mask = 0; mask < 16; ++mask) {
    VertexSet s;
    for (int v = 0; v < 4; ++v)
      if (mask & (1 << v)) s.insert(v);
    CHECK(snb::set_degree_bound_check(ar4, s).ok);
  }
}

TEST_CASE("witness scans over near-regular cores") {
  std::vector<std::pair<int, int>> arcs = snb::gen_almost_regular(4).arcs();
  arcs.emplace_back(4, 0);
  arcs.emplace_back(1, 4);
  arcs.emplace_back(5, 2);
  arcs.emplace_back(3, 5);
  SplitDigraph s(Digraph(6, arcs), VertexSet{4, 5});

  auto sul = snb::verify_ar_sullivan(s);
  REQUIRE(sul.found);
  auto p = snb::degree_profile(s.graph(), sul.witness);
  CHECK(p.d_pp >= p.d_minus);

  auto sey = snb::verify_ar_seymour(s);
  REQUIRE(sey.found);
  auto q = snb::degree_profile(s.graph(), sey.witness);
  CHECK(q.d_pp >= q.d_plus);

  SplitDigraph regular_core(r5(), VertexSet{});
  CHECK_THROWS_AS(snb::verify_ar_sullivan(regular_core),
                  snb::NotAlmostRegularOnY);
}
