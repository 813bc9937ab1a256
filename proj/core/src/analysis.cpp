#include "snb/analysis.hpp"

#include <string>

namespace snb {

VertexSet sullivan_vertices(const Digraph& d) {
  VertexSet result;
  for (int u = 0; u < d.order(); ++u)
    if (d.second_out(u).count() >= d.in_degree(u)) result.insert(u);
  return result;
}

VertexSet seymour_vertices(const Digraph& d) {
  VertexSet result;
  for (int u = 0; u < d.order(); ++u)
    if (d.second_out(u).count() >= d.out_degree(u)) result.insert(u);
  return result;
}

bool is_two_king(const Digraph& d, int u) {
  VertexSet cover = d.out(u) | d.second_out(u);
  cover.insert(u);
  return cover == d.vertices();
}

VertexSet two_kings(const Digraph& d) {
  VertexSet result;
  for (int u = 0; u < d.order(); ++u)
    if (is_two_king(d, u)) result.insert(u);
  return result;
}

int tournament_2king(const Digraph& d) {
  if (d.order() == 0) throw PreconditionViolated("empty tournament has no 2-king");
  if (!d.is_tournament()) throw NotATournament("tournament_2king needs a tournament");
  int best = 0;
  for (int u = 1; u < d.order(); ++u)
    if (d.out_degree(u) > d.out_degree(best)) best = u;
  if (!is_two_king(d, best))
    throw TheoremViolation("max out-degree vertex " + std::to_string(best) +
                           " is not a 2-king");
  return best;
}

int dominating_2king(const Digraph& d, int x) {
  if (!d.is_tournament()) throw NotATournament("dominating_2king needs a tournament");
  if (is_two_king(d, x))
    throw AlreadyKing("vertex " + std::to_string(x) + " is already a 2-king");

  VertexSet closed_out = d.out(x);
  closed_out.insert(x);
  VertexSet unreached = d.vertices() - (closed_out | d.second_out(x));
  // nonempty exactly because x is not a 2-king
  InducedSubgraph sub = induced_subgraph(d, unreached);
  int y = sub.new_to_old[tournament_2king(sub.graph)];

  if (!is_two_king(d, y) || !closed_out.is_subset_of(d.out(y)))
    throw TheoremViolation("vertex " + std::to_string(y) +
                           " fails to dominate N+[x] as a 2-king");
  return y;
}

TriangleStats triangle_stats(const Digraph& d) {
  const int n = d.order();
  TriangleStats stats;
  stats.tt_u.assign(n, 0);
  stats.w_u.assign(n, 0);
  long long w_total = 0;
  long long degree_sum = 0;
  for (int u = 0; u < n; ++u) {
    const VertexSet& nplus = d.out(u);
    const VertexSet npp = d.second_out(u);
    for (int v : nplus) {
      stats.tt_u[u] += d.out(v).intersection_count(nplus);
      stats.w_u[u] += d.out(v).intersection_count(npp);
    }
    stats.tt_total += stats.tt_u[u];
    w_total += stats.w_u[u];
    degree_sum += static_cast<long long>(d.in_degree(u)) * d.out_degree(u);
  }
  stats.identity_residual = degree_sum - stats.tt_total - w_total;
  if (stats.identity_residual != 0)
    throw TheoremViolation("triangle counting identity residual " +
                           std::to_string(stats.identity_residual));
  return stats;
}

TtSufficiency tt_sufficiency(const Digraph& d) {
  TtSufficiency result;
  result.tt = triangle_stats(d).tt_total;
  result.arcs = d.arc_count();
  result.guaranteed = result.tt < result.arcs;
  if (result.guaranteed && sullivan_vertices(d).empty())
    throw TheoremViolation("tt(D) < |A| but no Sullivan vertex found");
  return result;
}

bool is_triangle_free_underlying(const Digraph& d) {
  const int n = d.order();
  std::vector<VertexSet> und(n);
  for (int u = 0; u < n; ++u) und[u] = d.out(u) | d.in(u);
  for (int u = 0; u < n; ++u)
    for (int v : und[u]) {
      if (v <= u) continue;
      if (und[u].intersects(und[v])) return false;
    }
  return true;
}

ConjectureStatus conjecture_status(const Digraph& d) {
  ConjectureStatus status;
  status.sullivan_vertices = sullivan_vertices(d);
  status.seymour_vertices = seymour_vertices(d);
  status.two_kings = two_kings(d);
  for (int u = 0; u < d.order(); ++u)
    if (d.in_degree(u) == 0) status.sources.insert(u);
  if (d.order() > 0) {
    status.holds_sullivan = !status.sullivan_vertices.empty();
    status.holds_seymour = !status.seymour_vertices.empty();
  }
  return status;
}

}  // namespace snb
