#include "snb/split.hpp"

#include <string>

namespace snb {

namespace {

std::string vstr(int v) { return std::to_string(v); }

}  // namespace

SplitDigraph::SplitDigraph(Digraph graph, const VertexSet& x)
    : graph_(std::move(graph)), x_(x) {
  if (!x_.is_subset_of(graph_.vertices()))
    throw VertexOutOfRange("X contains vertices outside the graph");
  y_ = graph_.vertices() - x_;
  if (!graph_.is_independent(x_))
    throw NotIndependent("X carries an arc");
  if (!graph_.is_tournament(y_))
    throw NotTournamentOnY("Y = V - X does not induce a tournament");
}

bool SplitDigraph::is_complete() const {
  for (int x : x_)
    if (!y_.is_subset_of(graph_.out(x) | graph_.in(x))) return false;
  return true;
}

SumIdentities check_sum_identities(const SplitDigraph& s) {
  const Digraph& d = s.graph();
  SumIdentities sums;
  for (int x : s.x()) {
    sums.lhs1 += d.second_in(x).intersection_count(s.y());
    sums.lhs2 += d.in(x).intersection_count(s.y());
  }
  for (int y : s.y()) {
    sums.rhs1 += d.second_out(y).intersection_count(s.x());
    sums.rhs2 += d.out(y).intersection_count(s.x());
  }
  sums.ok = sums.lhs1 == sums.rhs1 && sums.lhs2 == sums.rhs2;
  if (!sums.ok)
    throw TheoremViolation("split sum identity failed: " +
                           std::to_string(sums.lhs1) + " vs " +
                           std::to_string(sums.rhs1) + ", " +
                           std::to_string(sums.lhs2) + " vs " +
                           std::to_string(sums.rhs2));
  return sums;
}

int single_x_2king(const SplitDigraph& s) {
  if (s.x().count() != 1)
    throw PreconditionViolated("single_x_2king needs |X| = 1, got " +
                               vstr(s.x().count()));
  const Digraph& d = s.graph();
  for (int u = 0; u < d.order(); ++u)
    if (d.in_degree(u) == 0)
      throw PreconditionViolated("source " + vstr(u) +
                                 " present; sources are trivial Sullivan vertices");

  const int x = s.x().first();
  const int y = d.in(x).first();  // in-neighbors of x all lie in Y
  InducedSubgraph sub = induced_subgraph(d, s.y());
  const int y_local = sub.old_to_new[y];
  int king;
  if (is_two_king(sub.graph, y_local))
    king = y;
  else
    king = sub.new_to_old[dominating_2king(sub.graph, y_local)];

  if (!s.y().contains(king) || !is_two_king(d, king))
    throw TheoremViolation("constructed vertex " + vstr(king) +
                           " is not a 2-king of the split graph");
  return king;
}

int complete_split_sullivan(const SplitDigraph& s) {
  const Digraph& d = s.graph();
  if (d.order() == 0) throw PreconditionViolated("empty split graph");
  if (!s.is_complete())
    throw NotCompleteSplit("some X-Y pair carries no arc");

  int candidate;
  if (s.y().empty()) {
    candidate = s.x().first();  // isolated, hence a source
  } else {
    int v = -1, best = -1;
    for (int y : s.y()) {
      int deg = d.out(y).intersection_count(s.y());
      if (deg > best) {
        best = deg;
        v = y;
      }
    }
    VertexSet blockers = (d.in(v) & s.x()) - d.second_out(v);
    candidate = blockers.empty() ? v : blockers.first();
  }

  if (d.second_out(candidate).count() < d.in_degree(candidate))
    throw TheoremViolation("constructed vertex " + vstr(candidate) +
                           " is not a Sullivan vertex");
  return candidate;
}

VertexContext vertex_context(const SplitDigraph& s, int x) {
  if (!s.x().contains(x))
    throw VertexNotInX("vertex " + vstr(x) + " is not in X");
  const Digraph& d = s.graph();
  VertexContext ctx;
  ctx.x = x;
  ctx.a = d.out(x);
  ctx.b = d.second_out(x) & s.y();
  ctx.c = s.y() - ctx.a - ctx.b;
  ctx.c_prime = s.y() - d.in(x) - (d.second_in(x) & s.y());
  return ctx;
}

RegularSplitReport regular_split_report(const SplitDigraph& s) {
  const Digraph& d = s.graph();
  for (int y : s.y()) {
    if (d.out(y).intersection_count(s.y()) != d.in(y).intersection_count(s.y()))
      throw NotRegularTournamentOnY("vertex " + vstr(y) +
                                    " has unequal in/out degree within Y");
  }

  RegularSplitReport report;
  if (d.order() == 0) {
    report.a1 = report.a2 = report.b1 = report.b2 = true;
    report.c1 = report.c2 = true;  // vacuous on the empty graph
    return report;
  }

  report.a1 = report.a2 = true;
  bool exists_b1 = false, forall_b1 = true;
  bool exists_b2 = false, forall_b2 = true;
  for (int x : s.x()) {
    const int dpp_y = d.second_out(x).intersection_count(s.y());
    const int dmm_y = d.second_in(x).intersection_count(s.y());
    const int dp = d.out_degree(x);
    const int dm = d.in_degree(x);
    report.a1 = report.a1 && (dpp_y >= dp || dpp_y >= dm);
    report.a2 = report.a2 && (dmm_y >= dm || dmm_y >= dp);
    exists_b1 = exists_b1 || dpp_y >= dp;
    forall_b1 = forall_b1 && dmm_y >= dm;
    exists_b2 = exists_b2 || dpp_y >= dm;
    forall_b2 = forall_b2 && dmm_y >= dp;
  }
  report.b1 = exists_b1 || forall_b1;
  report.b2 = exists_b2 || forall_b2;

  for (int v = 0; v < d.order(); ++v) {
    const int dpp = d.second_out(v).count();
    if (!report.c1 && dpp >= d.out_degree(v)) {
      report.c1 = true;
      report.c1_witness = v;
    }
    if (!report.c2 && dpp >= d.in_degree(v)) {
      report.c2 = true;
      report.c2_witness = v;
    }
  }

  if (!report.all()) {
    std::string which;
    if (!report.a1) which += " A1";
    if (!report.a2) which += " A2";
    if (!report.b1) which += " B1";
    if (!report.b2) which += " B2";
    if (!report.c1) which += " C1";
    if (!report.c2) which += " C2";
    throw TheoremViolation("regular-split statement(s) failed:" + which);
  }
  return report;
}

ArPartition ar_partition(const Digraph& t) {
  if (!t.is_tournament())
    throw NotATournament("ar_partition needs a tournament");
  ArPartition part;
  for (int v = 0; v < t.order(); ++v) {
    const int diff = t.out_degree(v) - t.in_degree(v);
    if (diff == 1)
      part.v_plus.insert(v);
    else if (diff == -1)
      part.v_minus.insert(v);
    else
      throw NotAlmostRegular("vertex " + vstr(v) + " has |d+ - d-| = " +
                             vstr(diff < 0 ? -diff : diff));
    part.d = std::max(part.d, t.out_degree(v));
  }
  if (part.v_plus.count() != part.d || part.v_minus.count() != part.d ||
      2 * part.d != t.order())
    throw TheoremViolation("surplus/deficit classes do not split evenly");
  return part;
}

ArFormulaReport ar_second_degree_formulas(const Digraph& t) {
  const ArPartition part = ar_partition(t);
  ArFormulaReport report;
  report.ok = true;
  for (int v = 0; v < t.order(); ++v) {
    ArVertexCheck check;
    check.vertex = v;
    check.is_2king = is_two_king(t, v);
    const int dpp = t.second_out(v).count();
    const int dp = t.out_degree(v);
    const int dm = t.in_degree(v);
    check.dpp_minus_dm = dpp - dm;
    check.dpp_minus_dp = dpp - dp;

    const int want_dm = check.is_2king ? 0 : -1;
    int want_dp = 0;
    if (check.is_2king && dm == part.d)
      want_dp = 1;
    else if (dp == part.d)
      want_dp = -1;
    check.ok = check.dpp_minus_dm == want_dm && check.dpp_minus_dp == want_dp;
    if (!check.ok) {
      report.ok = false;
      throw TheoremViolation("vertex " + vstr(v) +
                             " off the almost-regular closed form: d++-d- = " +
                             vstr(check.dpp_minus_dm) + ", d++-d+ = " +
                             vstr(check.dpp_minus_dp));
    }
    report.per_vertex.push_back(check);
  }
  return report;
}

SetDegreeBound set_degree_bound_check(const Digraph& t, const VertexSet& s) {
  const ArPartition part = ar_partition(t);
  SetDegreeBound result;
  const VertexSet all = t.vertices();
  result.diff = set_out_degree(t, s, all) - set_in_degree(t, s, all);
  const long long size = s.count();
  result.tight_plus = result.diff == size;
  result.tight_minus = result.diff == -size;
  const bool bounded = result.diff <= size && result.diff >= -size;
  result.ok = bounded && result.tight_plus == s.is_subset_of(part.v_plus) &&
              result.tight_minus == s.is_subset_of(part.v_minus);
  if (!result.ok)
    throw TheoremViolation("set degree bound violated: diff = " +
                           std::to_string(result.diff) + ", |S| = " +
                           std::to_string(size));
  return result;
}

namespace {

void require_ar_on_y(const SplitDigraph& s) {
  const Digraph& d = s.graph();
  for (int y : s.y()) {
    const int diff = d.out(y).intersection_count(s.y()) -
                     d.in(y).intersection_count(s.y());
    if (diff != 1 && diff != -1)
      throw NotAlmostRegularOnY("vertex " + vstr(y) +
                                " breaks almost-regularity of D[Y]");
  }
}

WitnessReport scan_witness(const SplitDigraph& s, bool sullivan) {
  require_ar_on_y(s);
  const Digraph& d = s.graph();
  WitnessReport report;
  if (d.order() == 0) {
    report.found = true;  // vacuous
    return report;
  }
  for (int u = 0; u < d.order(); ++u) {
    const int dpp = d.second_out(u).count();
    const int target = sullivan ? d.in_degree(u) : d.out_degree(u);
    if (dpp >= target) {
      report.found = true;
      report.witness = u;
      return report;
    }
  }
  throw TheoremViolation(std::string("no ") +
                         (sullivan ? "Sullivan" : "Seymour") +
                         " vertex in an almost-regular split graph");
}

}  // namespace

WitnessReport verify_ar_sullivan(const SplitDigraph& s) {
  return scan_witness(s, true);
}

WitnessReport verify_ar_seymour(const SplitDigraph& s) {
  return scan_witness(s, false);
}

}  // namespace snb
