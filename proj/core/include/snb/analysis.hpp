#pragma once

#include <vector>

#include "snb/digraph.hpp"

namespace snb {

// Transitive-triangle census. tt_u[u] counts transitive triangles whose
// source is u (arcs inside N+(u)); w_u[u] counts arcs from N+(u) into
// N++(u). For every oriented graph
//
//     tt_total + sum(w_u) == sum over u of d-(u) * d+(u)
//
// and construction enforces identity_residual == 0, so computing the
// stats re-proves the identity on every input.
struct TriangleStats {
  long long tt_total = 0;
  std::vector<long long> tt_u;
  std::vector<long long> w_u;
  long long identity_residual = 0;
};

struct TtSufficiency {
  bool guaranteed = false;  // tt(D) < |A|
  long long tt = 0;
  long long arcs = 0;
};

// One-graph summary of both conjectures plus the vertex classes the
// implications relate (sources and 2-kings are Sullivan witnesses).
struct ConjectureStatus {
  VertexSet sullivan_vertices;
  VertexSet seymour_vertices;
  VertexSet two_kings;
  VertexSet sources;
  bool holds_sullivan = true;  // vacuously true for n = 0
  bool holds_seymour = true;
};

// { u : d++(u) >= d-(u) }
VertexSet sullivan_vertices(const Digraph& d);

// { u : d++(u) >= d+(u) }
VertexSet seymour_vertices(const Digraph& d);

// { u : {u} + N+(u) + N++(u) = V }
VertexSet two_kings(const Digraph& d);

bool is_two_king(const Digraph& d, int u);

// Smallest-index vertex of maximum out-degree; in a tournament that
// vertex is always a 2-king, and the result is re-verified before it is
// returned. Throws NotATournament, PreconditionViolated (n = 0).
int tournament_2king(const Digraph& d);

// For a non-king x of a tournament, returns a 2-king dominating all of
// N+[x], found by taking a 2-king of the subtournament on
// V - (N+[x] + N++(x)). Throws NotATournament, AlreadyKing.
int dominating_2king(const Digraph& d, int x);

// Throws TheoremViolation if the counting identity fails (impossible
// for a genuine oriented graph).
TriangleStats triangle_stats(const Digraph& d);

// guaranteed = tt(D) < |A|; when guaranteed, verifies a Sullivan vertex
// exists and throws TheoremViolation otherwise.
TtSufficiency tt_sufficiency(const Digraph& d);

// True iff the underlying undirected graph has no 3-clique.
bool is_triangle_free_underlying(const Digraph& d);

ConjectureStatus conjecture_status(const Digraph& d);

}  // namespace snb
