#pragma once

#include <vector>

#include "snb/analysis.hpp"
#include "snb/digraph.hpp"

namespace snb {

// An oriented split graph: V partitioned into an independent set X and
// a set Y inducing a tournament. Construction validates both sides, so
// holding a SplitDigraph is proof of the structure.
class SplitDigraph {
 public:
  // Y = V - x. Throws NotIndependent / NotTournamentOnY.
  SplitDigraph(Digraph graph, const VertexSet& x);

  const Digraph& graph() const { return graph_; }
  const VertexSet& x() const { return x_; }
  const VertexSet& y() const { return y_; }

  // Every X-Y pair adjacent (one direction or the other).
  bool is_complete() const;

 private:
  Digraph graph_;
  VertexSet x_;
  VertexSet y_;
};

// Both sum identities relating X-side second in-neighborhoods to Y-side
// second out-neighborhoods:
//   sum over x in X of d--_Y(x) == sum over y in Y of d++_X(y)
//   sum over x in X of d-_Y(x)  == sum over y in Y of d+_X(y)
struct SumIdentities {
  long long lhs1 = 0, rhs1 = 0;  // second-neighborhood identity
  long long lhs2 = 0, rhs2 = 0;  // first-neighborhood identity
  bool ok = false;
};

// Computes all four sums; they are provably equal for every valid split
// graph, so a mismatch throws TheoremViolation.
SumIdentities check_sum_identities(const SplitDigraph& s);

// For |X| = 1 and a source-free digraph, returns a 2-king of the whole
// graph lying in Y: the in-neighbor y of x if y is a 2-king of D[Y],
// otherwise a 2-king of D[Y] dominating N+[y]. The result is
// independently re-verified. Throws PreconditionViolated.
int single_x_2king(const SplitDigraph& s);

// Sullivan vertex of a complete oriented split graph, following the
// max-out-degree-in-Y construction; re-verified before returning.
// Throws NotCompleteSplit, PreconditionViolated (empty graph).
int complete_split_sullivan(const SplitDigraph& s);

// The proof-level decomposition of Y as seen from one x in X:
//   a = N+(x), b = N++(x) & Y, c = Y - a - b,
//   c_prime = Y - N-(x) - (N--(x) & Y).
// a, b, c partition Y, and every vertex of c dominates every vertex
// of a.
struct VertexContext {
  int x = -1;
  VertexSet a;
  VertexSet b;
  VertexSet c;
  VertexSet c_prime;
};

VertexContext vertex_context(const SplitDigraph& s, int x);

// The six statements that hold when D[Y] is a regular tournament; all
// are evaluated literally and a false one throws TheoremViolation.
// On the empty graph everything is vacuously true with witness -1.
struct RegularSplitReport {
  bool a1 = false, a2 = false;  // per-x disjunctions, all x in X
  bool b1 = false, b2 = false;  // exists-x / for-all-x alternatives
  bool c1 = false, c2 = false;  // Seymour / Sullivan witness in whole D
  int c1_witness = -1;
  int c2_witness = -1;
  bool all() const { return a1 && a2 && b1 && b2 && c1 && c2; }
};

// Throws NotRegularTournamentOnY when D[Y] is not a regular tournament.
RegularSplitReport regular_split_report(const SplitDigraph& s);

// Surplus/deficit classes of an almost regular tournament: every member
// of v_plus has d+ = d- + 1, every member of v_minus the reverse, and
// |v_plus| = |v_minus| = d where d is the maximum out-degree.
struct ArPartition {
  int d = 0;
  VertexSet v_plus;
  VertexSet v_minus;
};

// Throws NotATournament / NotAlmostRegular.
ArPartition ar_partition(const Digraph& t);

// Per-vertex second-degree differences of an almost regular tournament
// checked against the closed forms:
//   d++ - d-  = 0 if the vertex is a 2-king, else -1
//   d++ - d+  = +1 if 2-king with d- = d, -1 if d+ = d, else 0
struct ArVertexCheck {
  int vertex = -1;
  bool is_2king = false;
  int dpp_minus_dm = 0;
  int dpp_minus_dp = 0;
  bool ok = false;
};

struct ArFormulaReport {
  std::vector<ArVertexCheck> per_vertex;
  bool ok = false;
};

// Throws NotATournament / NotAlmostRegular; a vertex off the closed
// form throws TheoremViolation.
ArFormulaReport ar_second_degree_formulas(const Digraph& t);

// |d+(S) - d-(S)| <= |S| inside an almost regular tournament, with
// equality at +|S| exactly when S is inside v_plus (and symmetrically
// at -|S| for v_minus). ok covers the bound and both equivalences.
struct SetDegreeBound {
  long long diff = 0;
  bool ok = false;
  bool tight_plus = false;
  bool tight_minus = false;
};

SetDegreeBound set_degree_bound_check(const Digraph& t, const VertexSet& s);

// Existence result of a one-graph theorem check.
struct WitnessReport {
  bool found = false;
  int witness = -1;
};

// Sullivan (resp. Seymour) witness search over a split graph whose Y
// induces an almost regular tournament. The underlying proofs are
// non-constructive, so the witness comes from a full vertex scan; a
// scan with no witness throws TheoremViolation.
// Throws NotAlmostRegularOnY.
WitnessReport verify_ar_sullivan(const SplitDigraph& s);
WitnessReport verify_ar_seymour(const SplitDigraph& s);

}  // namespace snb
