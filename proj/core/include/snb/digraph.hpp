#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "snb/errors.hpp"
#include "snb/vertex_set.hpp"

namespace snb {

// Immutable oriented graph on vertices 0..n-1. No loops, no digons:
// construction rejects any arc pair (u,v),(v,u). Adjacency is stored as
// one out-row and one in-row bitset per vertex, kept consistent, so
// second-neighborhood queries reduce to word-parallel ORs over rows.
//
// Instances never change after construction and are safe to share
// across threads.
class Digraph {
 public:
  Digraph() = default;

  // Validates and deduplicates the arc list.
  // Throws VertexOutOfRange, LoopArc, OrientationViolation, TooManyVertices.
  Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

  // Builds from per-vertex out-neighborhoods (rows may only use bits < n).
  // Same validation as the arc-list constructor.
  static Digraph from_out_neighborhoods(int n, const std::vector<VertexSet>& rows);

  int order() const { return n_; }
  long long arc_count() const { return arc_count_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return out_[u].contains(v);
  }

  // N+(u) / N-(u)
  const VertexSet& out(int u) const {
    check_vertex(u);
    return out_[u];
  }
  const VertexSet& in(int u) const {
    check_vertex(u);
    return in_[u];
  }

  // N++(u): two-hop targets minus N+(u) and minus u itself. Orientation
  // already keeps u out of the two-hop union (that would need a digon),
  // but u is subtracted anyway so the routine stays correct if a future
  // caller feeds it a general digraph.
  VertexSet second_out(int u) const;

  // N--(u), the mirror of second_out under arc reversal.
  VertexSet second_in(int u) const;

  int out_degree(int u) const { return out(u).count(); }
  int in_degree(int u) const { return in(u).count(); }

  // Every arc flipped; an involution.
  Digraph reversed() const;

  // True iff every unordered pair inside S carries exactly one arc.
  bool is_tournament(const VertexSet& s) const;
  bool is_tournament() const { return is_tournament(vertices()); }

  // True iff no pair inside S carries any arc.
  bool is_independent(const VertexSet& s) const;

  // Arcs in row order (u ascending, then v ascending).
  std::vector<std::pair<int, int>> arcs() const;

  bool operator==(const Digraph& o) const {
    return n_ == o.n_ && out_ == o.out_;
  }

 private:
  void check_vertex(int u) const {
    if (u < 0 || u >= n_)
      throw VertexOutOfRange("vertex " + std::to_string(u) +
                             " out of range [0, " + std::to_string(n_) + ")");
  }

  int n_ = 0;
  long long arc_count_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// Per-vertex degree snapshot: d+, d-, d++ (= |N++|), d-- and the same
// four restricted to a target set S. Without a restriction the *_s
// fields equal their unrestricted counterparts (S = V).
struct DegreeProfile {
  int vertex = 0;
  int d_plus = 0;
  int d_minus = 0;
  int d_pp = 0;
  int d_mm = 0;
  int d_plus_s = 0;
  int d_minus_s = 0;
  int d_pp_s = 0;
  int d_mm_s = 0;
};

DegreeProfile degree_profile(const Digraph& d, int u,
                             const std::optional<VertexSet>& s = std::nullopt);

// d+(S) restricted to targets in T: sum over v in S of |N+(v) & T|.
long long set_out_degree(const Digraph& d, const VertexSet& s, const VertexSet& t);
long long set_in_degree(const Digraph& d, const VertexSet& s, const VertexSet& t);

struct InducedSubgraph {
  Digraph graph;
  std::vector<int> new_to_old;  // size graph.order()
  std::vector<int> old_to_new;  // size parent order, -1 where absent
};

// Vertices of S relabeled 0..|S|-1 in increasing original order.
InducedSubgraph induced_subgraph(const Digraph& d, const VertexSet& s);

}  // namespace snb
