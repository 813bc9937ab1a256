#include "snb/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "snb/analysis.hpp"
#include "snb/enumeration.hpp"
#include "snb/errors.hpp"
#include "snb/io.hpp"
#include "snb/rng.hpp"

namespace snb {
namespace {

constexpr int kDecompositionCap = 16;  // 2^n subset scans stop here

struct PredicateInfo {
  Predicate value;
  const char* name;
};

constexpr PredicateInfo kPredicates[] = {
    {Predicate::SullivanExists, "sullivan-exists"},
    {Predicate::SeymourExists, "seymour-exists"},
    {Predicate::TwoKingExists, "2king-exists"},
    {Predicate::TtIdentity, "tt-identity"},
    {Predicate::TtSufficiency, "tt-sufficiency"},
    {Predicate::KingsAreSullivan, "kings-are-sullivan"},
    {Predicate::ArSullivanGap, "ar-sullivan-gap"},
    {Predicate::ArSeymourGap, "ar-seymour-gap"},
    {Predicate::ArSetDegreeBound, "ar-set-degree-bound"},
    {Predicate::SplitSumIdentities, "split-sum-identities"},
    {Predicate::RegularSplitStatements, "regular-split-statements"},
    {Predicate::SingleX2King, "single-x-2king"},
    {Predicate::CompleteSplitSullivan, "complete-split-sullivan"},
    {Predicate::ArSplitSullivan, "ar-split-sullivan"},
    {Predicate::ArSplitSeymour, "ar-split-seymour"},
};

bool is_split_predicate(Predicate p) {
  switch (p) {
    case Predicate::SplitSumIdentities:
    case Predicate::RegularSplitStatements:
    case Predicate::SingleX2King:
    case Predicate::CompleteSplitSullivan:
    case Predicate::ArSplitSullivan:
    case Predicate::ArSplitSeymour:
      return true;
    default:
      return false;
  }
}

bool is_almost_regular_tournament(const Digraph& d) {
  if (!d.is_tournament()) return false;
  for (int v : d.vertices()) {
    if (std::abs(d.out_degree(v) - d.in_degree(v)) != 1) return false;
  }
  return d.order() > 0;
}

bool is_regular_on_y(const SplitDigraph& s) {
  int ny = s.y().count();
  if (ny == 0) return false;
  int want = -1;
  for (int y : s.y()) {
    int dy = (s.graph().out(y) & s.y()).count();
    if (want < 0) want = dy;
    if (dy != want) return false;
  }
  return true;
}

bool is_almost_regular_on_y(const SplitDigraph& s) {
  if (s.y().empty()) return false;
  for (int y : s.y()) {
    int dp = (s.graph().out(y) & s.y()).count();
    int dm = (s.graph().in(y) & s.y()).count();
    if (std::abs(dp - dm) != 1) return false;
  }
  return true;
}

std::string vertex_list(const VertexSet& s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

CheckResult eval_digraph(Predicate p, const Digraph& d);

// The split evaluations check their structural preconditions and pass
// vacuously when they do not apply; the design is that theorem checks
// fire exactly on the instances the theorems speak about.
CheckResult eval_split(Predicate p, const SplitDigraph& s) {
  switch (p) {
    case Predicate::SplitSumIdentities: {
      SumIdentities ids = check_sum_identities(s);
      std::ostringstream os;
      os << "sums " << ids.lhs1 << "=" << ids.rhs1 << ", " << ids.lhs2 << "="
         << ids.rhs2;
      return {ids.ok, os.str()};
    }
    case Predicate::RegularSplitStatements: {
      if (!is_regular_on_y(s)) return {true, "D[Y] not regular; vacuous"};
      RegularSplitReport r = regular_split_report(s);
      return {r.all(), "all six statements hold"};
    }
    case Predicate::SingleX2King: {
      if (s.x().count() != 1) return {true, "|X| != 1; vacuous"};
      for (int v : s.graph().vertices()) {
        if (s.graph().in_degree(v) == 0) return {true, "has a source; vacuous"};
      }
      int king = single_x_2king(s);
      return {true, "2-king " + std::to_string(king)};
    }
    case Predicate::CompleteSplitSullivan: {
      if (s.graph().order() == 0) return {true, "empty; vacuous"};
      if (!s.is_complete()) return {true, "not complete; vacuous"};
      int v = complete_split_sullivan(s);
      return {true, "Sullivan vertex " + std::to_string(v)};
    }
    case Predicate::ArSplitSullivan: {
      if (!is_almost_regular_on_y(s))
        return {true, "D[Y] not almost regular; vacuous"};
      WitnessReport w = verify_ar_sullivan(s);
      return {w.found, "Sullivan vertex " + std::to_string(w.witness)};
    }
    case Predicate::ArSplitSeymour: {
      if (!is_almost_regular_on_y(s))
        return {true, "D[Y] not almost regular; vacuous"};
      WitnessReport w = verify_ar_seymour(s);
      return {w.found, "Seymour vertex " + std::to_string(w.witness)};
    }
    default:
      return eval_digraph(p, s.graph());
  }
}

CheckResult eval_ar_sullivan_gap(const Digraph& d) {
  if (!is_almost_regular_tournament(d))
    return {true, "not almost regular; vacuous"};
  ArPartition part = ar_partition(d);  // validates the class sizes
  VertexSet kings = two_kings(d);
  for (int v : d.vertices()) {
    int gap = d.second_out(v).count() - d.in_degree(v);
    int want = kings.contains(v) ? 0 : -1;
    if (gap != want) {
      return {false, "vertex " + std::to_string(v) + ": d++ - d- = " +
                         std::to_string(gap) + ", expected " +
                         std::to_string(want)};
    }
  }
  return {true, "d = " + std::to_string(part.d)};
}

CheckResult eval_ar_seymour_gap(const Digraph& d) {
  if (!is_almost_regular_tournament(d))
    return {true, "not almost regular; vacuous"};
  int half = d.order() / 2;
  VertexSet kings = two_kings(d);
  for (int v : d.vertices()) {
    int gap = d.second_out(v).count() - d.out_degree(v);
    int want = 0;
    if (kings.contains(v) && d.in_degree(v) == half) {
      want = 1;
    } else if (d.out_degree(v) == half) {
      want = -1;
    }
    if (gap != want) {
      return {false, "vertex " + std::to_string(v) + ": d++ - d+ = " +
                         std::to_string(gap) + ", expected " +
                         std::to_string(want)};
    }
  }
  return {true, "d = " + std::to_string(half)};
}

CheckResult eval_ar_set_degree_bound(const Digraph& d) {
  if (!is_almost_regular_tournament(d))
    return {true, "not almost regular; vacuous"};
  int n = d.order();
  if (n <= kDecompositionCap) {
    std::uint64_t masks = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      VertexSet s;
      for (int v = 0; v < n; ++v) {
        if ((mask >> v) & 1) s.insert(v);
      }
      set_degree_bound_check(d, s);  // throws on any violation
    }
    return {true, std::to_string(masks) + " subsets"};
  }
  // Too many subsets to exhaust: cover the singletons, the pairs and the
  // distinguished classes, which include every tightness case.
  ArPartition part = ar_partition(d);
  set_degree_bound_check(d, VertexSet{});
  set_degree_bound_check(d, part.v_plus);
  set_degree_bound_check(d, part.v_minus);
  set_degree_bound_check(d, d.vertices());
  for (int u = 0; u < n; ++u) {
    set_degree_bound_check(d, VertexSet::single(u));
    for (int v = u + 1; v < n; ++v) {
      VertexSet s;
      s.insert(u);
      s.insert(v);
      set_degree_bound_check(d, s);
    }
  }
  return {true, "sampled subsets (order exceeds exhaustive cap)"};
}

CheckResult eval_digraph(Predicate p, const Digraph& d) {
  switch (p) {
    case Predicate::SullivanExists: {
      if (d.order() == 0) return {true, "empty; vacuous"};
      VertexSet s = sullivan_vertices(d);
      return {!s.empty(), "Sullivan vertices {" + vertex_list(s) + "}"};
    }
    case Predicate::SeymourExists: {
      if (d.order() == 0) return {true, "empty; vacuous"};
      VertexSet s = seymour_vertices(d);
      return {!s.empty(), "Seymour vertices {" + vertex_list(s) + "}"};
    }
    case Predicate::TwoKingExists: {
      if (d.order() == 0) return {true, "empty; vacuous"};
      VertexSet s = two_kings(d);
      return {!s.empty(), "2-kings {" + vertex_list(s) + "}"};
    }
    case Predicate::TtIdentity: {
      TriangleStats st = triangle_stats(d);  // throws if the sums disagree
      return {true, "tt = " + std::to_string(st.tt_total)};
    }
    case Predicate::TtSufficiency: {
      TtSufficiency r = tt_sufficiency(d);  // throws if guarantee unmet
      std::ostringstream os;
      os << "tt = " << r.tt << ", |A| = " << r.arcs
         << (r.guaranteed ? " (guarantee fired)" : "");
      return {true, os.str()};
    }
    case Predicate::KingsAreSullivan: {
      VertexSet kings = two_kings(d);
      VertexSet sullivan = sullivan_vertices(d);
      if (kings.is_subset_of(sullivan)) {
        return {true, std::to_string(kings.count()) + " 2-kings"};
      }
      VertexSet bad = kings - sullivan;
      return {false, "2-kings not Sullivan: {" + vertex_list(bad) + "}"};
    }
    case Predicate::ArSullivanGap:
      return eval_ar_sullivan_gap(d);
    case Predicate::ArSeymourGap:
      return eval_ar_seymour_gap(d);
    case Predicate::ArSetDegreeBound:
      return eval_ar_set_degree_bound(d);
    default:
      break;
  }

  // Split checks against a bare digraph: quantify over every valid
  // (X, Y) decomposition.
  int n = d.order();
  if (n > kDecompositionCap) {
    return {true, "decomposition search skipped (n > " +
                      std::to_string(kDecompositionCap) + "); vacuous"};
  }
  std::uint64_t masks = std::uint64_t{1} << n;
  std::uint64_t tried = 0;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    VertexSet x;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) x.insert(v);
    }
    VertexSet y = x.complement(n);
    if (!d.is_independent(x) || !d.is_tournament(y)) continue;
    ++tried;
    CheckResult r = eval_split(p, SplitDigraph(d, x));
    if (!r.pass) {
      return {false, "X={" + vertex_list(x) + "}: " + r.details};
    }
  }
  return {true, std::to_string(tried) + " decompositions"};
}

}  // namespace

std::string predicate_name(Predicate p) {
  for (const auto& info : kPredicates) {
    if (info.value == p) return info.name;
  }
  return "?";
}

Predicate parse_predicate(const std::string& name) {
  for (const auto& info : kPredicates) {
    if (name == info.name) return info.value;
  }
  throw UnknownPredicate("unknown check '" + name + "'");
}

std::vector<Predicate> all_predicates() {
  std::vector<Predicate> out;
  for (const auto& info : kPredicates) out.push_back(info.value);
  return out;
}

CheckResult run_predicate(Predicate p, const Digraph& d) {
  try {
    return eval_digraph(p, d);
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

CheckResult run_predicate(Predicate p, const SplitDigraph& s) {
  try {
    return eval_split(p, s);
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

CheckResult run_predicate(Predicate p, const GeneratedInstance& g) {
  if (const SplitDigraph* s = g.split()) return run_predicate(p, *s);
  return run_predicate(p, g.graph());
}

CheckResult replay_failure(const FailureRecord& f) {
  Digraph d = parse_arclist(f.graph_text);
  Predicate p = parse_predicate(f.predicate);
  if (f.x_set.rfind("X:", 0) == 0) {
    VertexSet x;
    std::istringstream in(f.x_set.substr(2));
    std::string token;
    while (std::getline(in, token, ',')) {
      if (!token.empty()) x.insert(std::stoi(token));
    }
    return run_predicate(p, SplitDigraph(d, x));
  }
  return run_predicate(p, d);
}

std::uint64_t graph_hash(const Digraph& d) {
  std::string text = serialize_arclist(d);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Domain::Domain(Kind kind, int n, int x_size, Digraph y)
    : kind_(kind), n_(n), x_size_(x_size), y_(std::move(y)) {}

Domain Domain::oriented(int n) {
  oriented_count(n);  // validates feasibility up front
  return Domain(Kind::Oriented, n, 0, Digraph(0, {}));
}

Domain Domain::tournaments(int n) {
  tournament_count(n);
  return Domain(Kind::Tournaments, n, 0, Digraph(0, {}));
}

Domain Domain::split_patterns(int x_size, Digraph y) {
  split_pattern_count(x_size, y.order());
  if (!y.is_tournament()) {
    throw NotATournament("split pattern domain needs a tournament on Y");
  }
  return Domain(Kind::SplitPatterns, y.order() + x_size, x_size, std::move(y));
}

std::uint64_t Domain::size() const {
  switch (kind_) {
    case Kind::Oriented: return oriented_count(n_);
    case Kind::Tournaments: return tournament_count(n_);
    case Kind::SplitPatterns: return split_pattern_count(x_size_, y_.order());
  }
  return 0;
}

std::string Domain::describe() const {
  switch (kind_) {
    case Kind::Oriented:
      return "oriented graphs on " + std::to_string(n_) + " vertices";
    case Kind::Tournaments:
      return "tournaments on " + std::to_string(n_) + " vertices";
    case Kind::SplitPatterns:
      return "cross patterns |X|=" + std::to_string(x_size_) + " |Y|=" +
             std::to_string(y_.order());
  }
  return "?";
}

Digraph Domain::decode(std::uint64_t index) const {
  switch (kind_) {
    case Kind::Oriented: return decode_oriented(n_, index);
    case Kind::Tournaments: return decode_tournament(n_, index);
    case Kind::SplitPatterns:
      return decode_split_pattern(x_size_, y_, index).graph();
  }
  throw Error("unreachable");
}

SplitDigraph Domain::decode_split(std::uint64_t index) const {
  if (kind_ != Kind::SplitPatterns) {
    throw PreconditionViolated("domain has no split structure");
  }
  return decode_split_pattern(x_size_, y_, index);
}

std::uint64_t split_pattern_count(int x_size, int y_size) {
  if (x_size < 0 || y_size < 0) {
    throw VertexOutOfRange("part sizes must be nonnegative");
  }
  int pairs = x_size * y_size;
  if (pairs > kMaxEnumPairsOriented) {
    throw SpaceTooLarge("cross pattern space has " + std::to_string(pairs) +
                        " pairs; indices only cover " +
                        std::to_string(kMaxEnumPairsOriented));
  }
  std::uint64_t total = 1;
  for (int k = 0; k < pairs; ++k) total *= 3;
  return total;
}

SplitDigraph decode_split_pattern(int x_size, const Digraph& y,
                                  std::uint64_t index) {
  split_pattern_count(x_size, y.order());  // feasibility guard
  int ny = y.order();
  std::vector<std::pair<int, int>> arcs = y.arcs();
  for (int xi = 0; xi < x_size; ++xi) {
    int x = ny + xi;
    for (int yv = 0; yv < ny; ++yv) {
      switch (index % 3) {
        case 1: arcs.emplace_back(x, yv); break;
        case 2: arcs.emplace_back(yv, x); break;
        default: break;
      }
      index /= 3;
    }
  }
  if (index != 0) {
    throw VertexOutOfRange("cross pattern index out of range");
  }
  VertexSet x_set;
  for (int xi = 0; xi < x_size; ++xi) x_set.insert(ny + xi);
  return SplitDigraph(Digraph(ny + x_size, arcs), x_set);
}

std::uint64_t encode_split_pattern(const SplitDigraph& s) {
  int n = s.graph().order();
  int ny = s.y().count();
  for (int xi = ny; xi < n; ++xi) {
    if (!s.x().contains(xi)) {
      throw PreconditionViolated(
          "pattern codec expects X on the top labels |Y|..n-1");
    }
  }
  split_pattern_count(n - ny, ny);
  std::uint64_t index = 0;
  std::uint64_t place = 1;
  for (int x = ny; x < n; ++x) {
    for (int yv = 0; yv < ny; ++yv) {
      if (s.graph().has_arc(x, yv)) {
        index += place;
      } else if (s.graph().has_arc(yv, x)) {
        index += 2 * place;
      }
      place *= 3;
    }
  }
  return index;
}

int default_thread_count() {
  if (const char* env = std::getenv("SNB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

int resolve_threads(int requested) {
  return requested > 0 ? requested : default_thread_count();
}

namespace {

struct WorkerTally {
  std::uint64_t count = 0;
  std::uint64_t hash = 0;
  std::vector<FailureRecord> failures;
};

std::string format_x_set(const SplitDigraph& s) {
  return "X:" + vertex_list(s.x());
}

// Shards [lo, hi) into contiguous chunks, one worker each. Chunk results
// are merged in chunk order, so failure lists come out sorted by id and
// identical for every thread count.
template <typename Body>
void run_sharded(std::uint64_t lo, std::uint64_t hi, int threads,
                 VerificationReport& report, Body&& body) {
  std::uint64_t span = hi > lo ? hi - lo : 0;
  int workers = threads;
  if (span < static_cast<std::uint64_t>(workers)) {
    workers = span > 0 ? static_cast<int>(span) : 1;
  }
  std::vector<WorkerTally> tallies(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    std::uint64_t begin = lo + span * w / workers;
    std::uint64_t end = lo + span * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      WorkerTally& tally = tallies[static_cast<std::size_t>(w)];
      for (std::uint64_t id = begin; id < end; ++id) {
        body(id, tally);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& tally : tallies) {
    report.instances_checked += tally.count;
    report.aggregate_hash ^= tally.hash;
    report.failures.insert(report.failures.end(),
                           std::make_move_iterator(tally.failures.begin()),
                           std::make_move_iterator(tally.failures.end()));
  }
}

}  // namespace

VerificationReport exhaustive_check(const Domain& domain, Predicate p,
                                    int threads, std::uint64_t lo,
                                    std::uint64_t hi) {
  auto start = std::chrono::steady_clock::now();
  std::uint64_t total = domain.size();
  if (hi > total) hi = total;
  if (lo > hi) lo = hi;

  VerificationReport report;
  report.description = domain.describe();
  report.predicate = predicate_name(p);
  {
    std::ostringstream os;
    os << "range=[" << lo << "," << hi << ") of " << total;
    report.provenance = os.str();
  }

  bool split = domain.is_split();
  run_sharded(lo, hi, resolve_threads(threads), report,
              [&](std::uint64_t index, WorkerTally& tally) {
                CheckResult r;
                std::string graph_text;
                std::string x_set;
                if (split) {
                  SplitDigraph s = domain.decode_split(index);
                  tally.hash ^= graph_hash(s.graph());
                  r = run_predicate(p, s);
                  if (!r.pass) {
                    graph_text = serialize_arclist(s.graph());
                    x_set = format_x_set(s);
                  }
                } else {
                  Digraph d = domain.decode(index);
                  tally.hash ^= graph_hash(d);
                  r = run_predicate(p, d);
                  if (!r.pass) graph_text = serialize_arclist(d);
                }
                ++tally.count;
                if (!r.pass) {
                  tally.failures.push_back({"index", index,
                                            std::move(graph_text),
                                            std::move(x_set),
                                            predicate_name(p), r.details});
                }
              });

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

VerificationReport random_search(const GenSpec& spec, std::uint64_t trials,
                                 Predicate p, std::uint64_t seed,
                                 int threads) {
  spec.validate();
  auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.description = spec.describe();
  report.predicate = predicate_name(p);
  {
    std::ostringstream os;
    os << "seed=" << seed << " trials=" << trials;
    report.provenance = os.str();
  }

  run_sharded(0, trials, resolve_threads(threads), report,
              [&](std::uint64_t trial, WorkerTally& tally) {
                std::uint64_t trial_seed = Rng::mix(seed, trial);
                GeneratedInstance g = generate(spec, trial_seed);
                tally.hash ^= graph_hash(g.graph());
                CheckResult r = run_predicate(p, g);
                ++tally.count;
                if (!r.pass) {
                  std::string x_set;
                  if (const SplitDigraph* s = g.split()) {
                    x_set = format_x_set(*s);
                  }
                  tally.failures.push_back(
                      {"seed", trial_seed, serialize_arclist(g.graph()),
                       std::move(x_set), predicate_name(p), r.details});
                }
              });

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << description << " :: " << predicate << "\n";
  os << "  checked " << instances_checked << " instance"
     << (instances_checked == 1 ? "" : "s") << ", " << failures.size()
     << " failure" << (failures.size() == 1 ? "" : "s") << ", " << std::fixed
     << std::setprecision(2) << elapsed_seconds << "s, hash 0x" << std::hex
     << aggregate_hash << std::dec << "\n";
  os << "  " << provenance << "\n";
  std::size_t shown = 0;
  for (const auto& f : failures) {
    if (shown == 10) {
      os << "  ... " << (failures.size() - shown) << " more\n";
      break;
    }
    os << "  FAIL " << f.source << " " << f.id << ": " << f.details << "\n";
    ++shown;
  }
  return os.str();
}

std::vector<std::string> archive_failures(const VerificationReport& report,
                                          const std::string& dir) {
  std::vector<std::string> paths;
  if (report.failures.empty()) return paths;
  std::filesystem::create_directories(dir);
  for (const auto& f : report.failures) {
    std::string name =
        f.predicate + "_" + f.source + "_" + std::to_string(f.id) + ".txt";
    std::filesystem::path path = std::filesystem::path(dir) / name;
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << "# check: " << f.predicate << "\n";
    out << "# " << f.source << ": " << f.id << "\n";
    out << "# details: " << f.details << "\n";
    if (!f.x_set.empty()) out << "# " << f.x_set << "\n";
    out << f.graph_text;
    paths.push_back(path.string());
  }
  return paths;
}

double markov_expectation(int n, double p) {
  if (n < 2) {
    throw PreconditionViolated("expectation needs n >= 2, got " +
                               std::to_string(n));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidProbability("p must lie in [0, 1], got " + std::to_string(p));
  }
  return (n - 1) * (1.0 - p / 2.0) * std::pow(1.0 - p * p / 4.0, n - 2);
}

std::string MonteCarloResult::to_text() const {
  std::ostringstream os;
  os << "n=" << n << " p=" << p << " trials=" << trials << "\n";
  os << std::setprecision(6) << std::fixed;
  os << "  P(vertex 0 not a 2-king): " << empirical_u_uncovered << " ("
     << u_uncovered_count << " trials)\n";
  os << "  P(no 2-king at all):      " << empirical_no_king << " ("
     << no_king_count << " trials)\n";
  os << "  Markov bound E(X_u):      " << markov_bound << "\n";
  os << "  std error:                " << std_error << "\n";
  return os.str();
}

MonteCarloResult montecarlo_2king(int n, double p, std::uint64_t trials,
                                  std::uint64_t seed, int threads) {
  if (n < 2) {
    throw PreconditionViolated("sampling needs n >= 2, got " +
                               std::to_string(n));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidProbability("p must lie in [0, 1], got " + std::to_string(p));
  }
  if (trials < 1) throw PreconditionViolated("need at least one trial");

  int workers = resolve_threads(threads);
  if (trials < static_cast<std::uint64_t>(workers)) {
    workers = static_cast<int>(trials);
  }
  std::vector<std::uint64_t> uncovered(static_cast<std::size_t>(workers), 0);
  std::vector<std::uint64_t> kingless(static_cast<std::size_t>(workers), 0);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t begin = trials * w / workers;
    std::uint64_t end = trials * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      for (std::uint64_t t = begin; t < end; ++t) {
        Digraph d = gen_random_oriented(n, p, Rng::mix(seed, t));
        bool zero_covers = is_two_king(d, 0);
        if (!zero_covers) ++uncovered[static_cast<std::size_t>(w)];
        bool any = zero_covers;
        for (int u = 1; !any && u < n; ++u) {
          any = is_two_king(d, u);
        }
        if (!any) ++kingless[static_cast<std::size_t>(w)];
      }
    });
  }
  for (auto& t : pool) t.join();

  MonteCarloResult result;
  result.n = n;
  result.p = p;
  result.trials = trials;
  for (int w = 0; w < workers; ++w) {
    result.u_uncovered_count += uncovered[static_cast<std::size_t>(w)];
    result.no_king_count += kingless[static_cast<std::size_t>(w)];
  }
  result.empirical_u_uncovered =
      static_cast<double>(result.u_uncovered_count) /
      static_cast<double>(trials);
  result.empirical_no_king = static_cast<double>(result.no_king_count) /
                             static_cast<double>(trials);
  result.markov_bound = markov_expectation(n, p);
  result.std_error = std::sqrt(result.empirical_u_uncovered *
                               (1.0 - result.empirical_u_uncovered) /
                               static_cast<double>(trials));
  return result;
}

}  // namespace snb
