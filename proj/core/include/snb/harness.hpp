#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snb/digraph.hpp"
#include "snb/generators.hpp"
#include "snb/split.hpp"

namespace snb {

// Named checks the batch runners know how to apply to an instance.
// Plain-digraph checks evaluate the instance directly. Structural checks
// (the split and tournament ones) are vacuously true on instances that
// lack the structure; when a bare digraph is handed to a split check,
// every valid (X, Y) decomposition is tried (n <= 16).
enum class Predicate {
  SullivanExists,          // some u with |N++(u)| >= |N-(u)|
  SeymourExists,           // some u with |N++(u)| >= |N+(u)|
  TwoKingExists,           // some u whose closed 2-out-neighborhood is V
  TtIdentity,              // tt + sum w_u = sum d-*d+
  TtSufficiency,           // tt < |A| forces a Sullivan vertex
  KingsAreSullivan,        // every 2-king is a Sullivan vertex
  ArSullivanGap,           // almost regular: class sizes and d++ - d- cases
  ArSeymourGap,            // almost regular: d++ - d+ cases
  ArSetDegreeBound,        // |d+(S) - d-(S)| <= |S| with exact tightness
  SplitSumIdentities,      // the two X/Y degree-sum identities
  RegularSplitStatements,  // six neighborhood statements, regular D[Y]
  SingleX2King,            // |X| = 1 finder returns a verified 2-king
  CompleteSplitSullivan,   // complete split finder returns Sullivan vertex
  ArSplitSullivan,         // almost regular D[Y] has a Sullivan vertex
  ArSplitSeymour,          // almost regular D[Y] has a Seymour vertex
};

std::string predicate_name(Predicate p);
Predicate parse_predicate(const std::string& name);  // throws UnknownPredicate
std::vector<Predicate> all_predicates();

struct CheckResult {
  bool pass = true;
  std::string details;
};

CheckResult run_predicate(Predicate p, const Digraph& d);
CheckResult run_predicate(Predicate p, const SplitDigraph& s);
CheckResult run_predicate(Predicate p, const GeneratedInstance& g);

// One failed instance, carrying enough to reproduce it: the arc-list
// payload, the X set when the instance was a split graph, and the
// enumeration index or trial seed it came from.
struct FailureRecord {
  std::string source;     // "index" or "seed"
  std::uint64_t id = 0;   // enumeration index / trial seed
  std::string graph_text; // arc-list serialization
  std::string x_set;      // comma-separated X for split instances, else ""
  std::string predicate;
  std::string details;
};

// Re-runs a failure record from its payload alone.
CheckResult replay_failure(const FailureRecord& f);

struct VerificationReport {
  std::string description;  // what was swept
  std::string predicate;
  std::string provenance;   // range / seed bookkeeping for reruns
  std::uint64_t instances_checked = 0;
  std::uint64_t aggregate_hash = 0;  // XOR of per-instance graph hashes
  std::vector<FailureRecord> failures;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
  std::string to_text() const;
};

// Order-independent fingerprint of an instance stream (FNV-1a of the
// arc-list bytes, XORed across instances by the runners), used to prove
// that range-sharded sweeps cover exactly the same graphs.
std::uint64_t graph_hash(const Digraph& d);

// An enumerable instance space for exhaustive_check.
class Domain {
 public:
  static Domain oriented(int n);
  static Domain tournaments(int n);
  // All 3^(x_size * |Y|) cross-arc patterns over a fixed tournament on
  // Y; X takes labels |Y|..|Y|+x_size-1.
  static Domain split_patterns(int x_size, Digraph y);

  std::uint64_t size() const;
  std::string describe() const;
  bool is_split() const { return kind_ == Kind::SplitPatterns; }

  Digraph decode(std::uint64_t index) const;
  SplitDigraph decode_split(std::uint64_t index) const;

 private:
  enum class Kind { Oriented, Tournaments, SplitPatterns };
  Domain(Kind kind, int n, int x_size, Digraph y);

  Kind kind_;
  int n_;
  int x_size_;
  Digraph y_;
};

// Cross-arc pattern codec behind Domain::split_patterns: digit k of the
// base-3 index describes pair (x_k, y_k) with x outer and y inner, both
// ascending; 0 no arc, 1 x->y, 2 y->x.
std::uint64_t split_pattern_count(int x_size, int y_size);
SplitDigraph decode_split_pattern(int x_size, const Digraph& y,
                                  std::uint64_t index);
std::uint64_t encode_split_pattern(const SplitDigraph& s);

// Thread count resolution: explicit argument wins, then the SNB_THREADS
// environment variable, then hardware concurrency.
int default_thread_count();
int resolve_threads(int requested);

// Applies the check to every instance of the domain with index in
// [lo, hi) (clamped to the domain size), sharded contiguously across
// threads. Aggregate counts, the XOR hash and the failure set do not
// depend on the thread count.
VerificationReport exhaustive_check(const Domain& domain, Predicate p,
                                    int threads = 0, std::uint64_t lo = 0,
                                    std::uint64_t hi = UINT64_MAX);

// Generates `trials` seeded instances of the given family and applies
// the check.
// Trial t uses seed mix(seed, t), so results are reproducible and
// thread-count independent; failures record that derived seed.
VerificationReport random_search(const GenSpec& spec, std::uint64_t trials,
                                 Predicate p, std::uint64_t seed,
                                 int threads = 0);

// Writes each failure as a standalone arc-list file (metadata in
// comments) under dir, creating it if needed. Returns the file paths.
std::vector<std::string> archive_failures(const VerificationReport& report,
                                          const std::string& dir);

// E(X_u) = (n-1)(1-p/2)(1-p^2/4)^(n-2): the expected number of vertices
// outside u's closed 2-out-neighborhood in a random oriented graph where
// each pair carries an arc with probability p (direction uniform). By
// Markov's inequality this bounds P(X_u >= 1), the probability that a
// fixed vertex fails to be a 2-king.
double markov_expectation(int n, double p);

struct MonteCarloResult {
  int n = 0;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t u_uncovered_count = 0;  // trials where vertex 0 is not a 2-king
  std::uint64_t no_king_count = 0;      // trials where no vertex is a 2-king
  double empirical_u_uncovered = 0.0;   // what the Markov bound caps
  double empirical_no_king = 0.0;       // whole-graph frequency, <= the above
  double markov_bound = 0.0;
  double std_error = 0.0;  // binomial s.e. of empirical_u_uncovered

  std::string to_text() const;
};

// Samples the random model `trials` times. For the fixed vertex u = 0 it
// counts trials where some vertex escapes {u} and u's first and second
// out-neighborhoods; it also counts trials with no 2-king at all. The
// result reports, never asserts: callers compare empirical_u_uncovered
// against markov_bound plus a few standard errors.
MonteCarloResult montecarlo_2king(int n, double p, std::uint64_t trials,
                                  std::uint64_t seed, int threads = 0);

}  // namespace snb
