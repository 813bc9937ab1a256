#include "snb/digraph.hpp"

#include <string>

namespace snb {

namespace {

void check_order(int n) {
  if (n < 0) throw VertexOutOfRange("negative vertex count");
  if (n > kMaxVertices)
    throw TooManyVertices("n = " + std::to_string(n) + " exceeds capacity " +
                          std::to_string(kMaxVertices) +
                          " (rebuild with a larger SNB_MAX_VERTICES)");
}

std::string arc_str(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
  check_order(n);
  n_ = n;
  out_.assign(n, VertexSet{});
  in_.assign(n, VertexSet{});
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw VertexOutOfRange("arc " + arc_str(u, v) + " outside [0, " +
                             std::to_string(n) + ")");
    if (u == v) throw LoopArc("loop arc at vertex " + std::to_string(u));
    if (out_[v].contains(u))
      throw OrientationViolation("digon between " + std::to_string(u) +
                                 " and " + std::to_string(v));
    if (!out_[u].contains(v)) {
      out_[u].insert(v);
      in_[v].insert(u);
      ++arc_count_;
    }
  }
}

Digraph Digraph::from_out_neighborhoods(int n, const std::vector<VertexSet>& rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n)
    throw VertexOutOfRange("expected " + std::to_string(n) + " rows, got " +
                           std::to_string(rows.size()));
  Digraph d;
  d.n_ = n;
  d.out_ = rows;
  d.in_.assign(n, VertexSet{});
  const VertexSet all = VertexSet::full(n);
  for (int u = 0; u < n; ++u) {
    if (!rows[u].is_subset_of(all))
      throw VertexOutOfRange("row " + std::to_string(u) +
                             " references vertices >= " + std::to_string(n));
    if (rows[u].contains(u))
      throw LoopArc("loop arc at vertex " + std::to_string(u));
    for (int v : rows[u]) {
      if (v > u && rows[v].contains(u))
        throw OrientationViolation("digon between " + std::to_string(u) +
                                   " and " + std::to_string(v));
      d.in_[v].insert(u);
    }
    d.arc_count_ += rows[u].count();
  }
  return d;
}

VertexSet Digraph::second_out(int u) const {
  check_vertex(u);
  VertexSet acc;
  for (int w : out_[u]) acc |= out_[w];
  acc -= out_[u];
  acc.erase(u);
  return acc;
}

VertexSet Digraph::second_in(int u) const {
  check_vertex(u);
  VertexSet acc;
  for (int w : in_[u]) acc |= in_[w];
  acc -= in_[u];
  acc.erase(u);
  return acc;
}

Digraph Digraph::reversed() const {
  Digraph d;
  d.n_ = n_;
  d.arc_count_ = arc_count_;
  d.out_ = in_;
  d.in_ = out_;
  return d;
}

bool Digraph::is_tournament(const VertexSet& s) const {
  for (int u : s) {
    check_vertex(u);
    // within s, u must have an arc with every other member, one way only
    VertexSet others = s;
    others.erase(u);
    VertexSet touched = (out_[u] | in_[u]) & others;
    if (!(touched == others)) return false;
  }
  return true;  // orientation invariant already rules out digons
}

bool Digraph::is_independent(const VertexSet& s) const {
  for (int u : s) {
    check_vertex(u);
    if ((out_[u] | in_[u]).intersects(s)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(static_cast<size_t>(arc_count_));
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) result.emplace_back(u, v);
  return result;
}

DegreeProfile degree_profile(const Digraph& d, int u,
                             const std::optional<VertexSet>& s) {
  DegreeProfile p;
  p.vertex = u;
  const VertexSet& out = d.out(u);
  const VertexSet& in = d.in(u);
  const VertexSet pp = d.second_out(u);
  const VertexSet mm = d.second_in(u);
  p.d_plus = out.count();
  p.d_minus = in.count();
  p.d_pp = pp.count();
  p.d_mm = mm.count();
  const VertexSet restrict_to = s.value_or(d.vertices());
  p.d_plus_s = out.intersection_count(restrict_to);
  p.d_minus_s = in.intersection_count(restrict_to);
  p.d_pp_s = pp.intersection_count(restrict_to);
  p.d_mm_s = mm.intersection_count(restrict_to);
  return p;
}

long long set_out_degree(const Digraph& d, const VertexSet& s, const VertexSet& t) {
  long long total = 0;
  for (int v : s) total += d.out(v).intersection_count(t);
  return total;
}

long long set_in_degree(const Digraph& d, const VertexSet& s, const VertexSet& t) {
  long long total = 0;
  for (int v : s) total += d.in(v).intersection_count(t);
  return total;
}

InducedSubgraph induced_subgraph(const Digraph& d, const VertexSet& s) {
  InducedSubgraph result;
  result.old_to_new.assign(d.order(), -1);
  for (int v : s) {
    result.old_to_new[v] = static_cast<int>(result.new_to_old.size());
    result.new_to_old.push_back(v);
  }
  const int k = static_cast<int>(result.new_to_old.size());
  std::vector<VertexSet> rows(k);
  for (int nu = 0; nu < k; ++nu) {
    for (int v : d.out(result.new_to_old[nu]) & s)
      rows[nu].insert(result.old_to_new[v]);
  }
  result.graph = Digraph::from_out_neighborhoods(k, rows);
  return result;
}

}  // namespace snb
