#include "snb/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include "snb/analysis.hpp"
#include "snb/digraph.hpp"
#include "snb/enumeration.hpp"
#include "snb/errors.hpp"
#include "snb/generators.hpp"
#include "snb/harness.hpp"
#include "snb/io.hpp"
#include "snb/rng.hpp"
#include "snb/split.hpp"

namespace snb {
namespace {

// Reference value for the closed-form expectation at n=100, p=0.5,
// frozen from an independent high-precision evaluation
// (99 * 3/4 * (15/16)^98 = 0.1330091582911443530697759...).
constexpr double kMarkovReference = 0.13300915829114435;
constexpr double kMarkovTolerance = 1e-6;

// Exhaustive split-structure sweep size for |X| <= 2, |Y| <= 4: the sum
// of 2^(|Y| choose 2) * 3^(|X|*|Y|) over all shapes, cross-checked
// against the live enumeration below.
constexpr std::uint64_t kSplitSweepFull = 431406;

// Labeled almost regular tournament counts by order.
constexpr std::uint64_t kArCount2 = 2;
constexpr std::uint64_t kArCount4 = 24;
constexpr std::uint64_t kArCount6 = 2640;

struct Ctx {
  Level level;
  int threads;
  std::string archive_dir;
  bool full() const { return level == Level::Full; }
};

std::uint64_t criterion_seed(int id) {
  // Arbitrary fixed per-criterion streams; frozen so every run of the
  // suite sees the same instances.
  return Rng::mix(0x736e6220616363ULL, static_cast<std::uint64_t>(id));
}

bool is_ar_tournament(const Digraph& d) {
  if (d.order() == 0 || !d.is_tournament()) return false;
  for (int v : d.vertices()) {
    if (std::abs(d.out_degree(v) - d.in_degree(v)) != 1) return false;
  }
  return true;
}

std::string count_tag(std::uint64_t instances, std::uint64_t failures) {
  std::ostringstream os;
  os << instances << " instances, " << failures << " failures";
  return os.str();
}

// 1. The triangle-count identity, exhaustively, single-threaded, with
// the stated time budget.
CriterionResult c1_counting_identity(const Ctx& ctx) {
  int n = ctx.full() ? 5 : 4;
  VerificationReport rep =
      exhaustive_check(Domain::oriented(n), Predicate::TtIdentity, 1);
  bool pass = rep.passed() && rep.instances_checked == oriented_count(n) &&
              rep.elapsed_seconds < 10.0;
  std::ostringstream os;
  os << count_tag(rep.instances_checked, rep.failures.size()) << ", "
     << std::fixed << std::setprecision(2) << rep.elapsed_seconds
     << "s on one thread";
  return {1, "triangle-count identity sweep", pass, os.str(), 0.0};
}

// 2. Sparse triangle count forces a Sullivan vertex, exhaustively.
CriterionResult c2_sufficiency(const Ctx& ctx) {
  int n = ctx.full() ? 5 : 4;
  VerificationReport rep = exhaustive_check(Domain::oriented(n),
                                            Predicate::TtSufficiency,
                                            ctx.threads);
  bool pass = rep.passed() && rep.instances_checked == oriented_count(n);
  return {2, "sparse-triangle sufficiency sweep", pass,
          count_tag(rep.instances_checked, rep.failures.size()), 0.0};
}

// 3. The conjecture sweeps proper: Sullivan and Seymour vertices exist
// in every small oriented graph and in large random samples. A failure
// here would be a refutation, so it is archived verbatim.
CriterionResult c3_conjecture_sweeps(const Ctx& ctx) {
  int n_max = ctx.full() ? 5 : 4;
  std::uint64_t trials = ctx.full() ? 100000 : 1000;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;

  for (Predicate p : {Predicate::SullivanExists, Predicate::SeymourExists}) {
    for (int n = 0; n <= n_max; ++n) {
      VerificationReport rep =
          exhaustive_check(Domain::oriented(n), p, ctx.threads);
      instances += rep.instances_checked;
      failures += rep.failures.size();
      if (!rep.passed() && !ctx.archive_dir.empty()) {
        archive_failures(rep, ctx.archive_dir);
      }
    }
    for (double prob : {0.3, 0.5, 0.8}) {
      GenSpec spec;
      spec.family = Family::OrientedRandom;
      spec.n = 12;
      spec.p = prob;
      VerificationReport rep = random_search(
          spec, trials, p,
          Rng::mix(criterion_seed(3), static_cast<std::uint64_t>(prob * 10)),
          ctx.threads);
      instances += rep.instances_checked;
      failures += rep.failures.size();
      if (!rep.passed() && !ctx.archive_dir.empty()) {
        archive_failures(rep, ctx.archive_dir);
      }
    }
  }
  return {3, "Sullivan and Seymour existence sweeps", failures == 0,
          count_tag(instances, failures), 0.0};
}

// 4. Every 2-king is a Sullivan vertex.
CriterionResult c4_kings_are_sullivan(const Ctx& ctx) {
  int oriented_max = ctx.full() ? 5 : 4;
  int tournament_max = ctx.full() ? 6 : 5;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  for (int n = 0; n <= oriented_max; ++n) {
    VerificationReport rep = exhaustive_check(
        Domain::oriented(n), Predicate::KingsAreSullivan, ctx.threads);
    instances += rep.instances_checked;
    failures += rep.failures.size();
  }
  for (int n = 0; n <= tournament_max; ++n) {
    VerificationReport rep = exhaustive_check(
        Domain::tournaments(n), Predicate::KingsAreSullivan, ctx.threads);
    instances += rep.instances_checked;
    failures += rep.failures.size();
  }
  return {4, "2-kings are Sullivan vertices", failures == 0,
          count_tag(instances, failures), 0.0};
}

// 5. Almost regular tournaments: surplus/deficit classes have size d and
// the two second-degree gap formulas hold at every vertex, both over the
// full labeled enumeration (with the known family counts as a filter
// sanity check) and over the direct constructions.
CriterionResult c5_ar_degree_gaps(const Ctx& ctx) {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  bool counts_ok = true;

  std::vector<int> orders = ctx.full() ? std::vector<int>{4, 6}
                                       : std::vector<int>{4};
  for (int n : orders) {
    for (Predicate p : {Predicate::ArSullivanGap, Predicate::ArSeymourGap}) {
      VerificationReport rep =
          exhaustive_check(Domain::tournaments(n), p, ctx.threads);
      instances += rep.instances_checked;
      failures += rep.failures.size();
    }
    std::uint64_t ar_count = 0;
    for_each_tournament(n, [&](std::uint64_t, const Digraph& d) {
      if (is_ar_tournament(d)) ++ar_count;
    });
    std::uint64_t want = n == 4 ? kArCount4 : kArCount6;
    if (ar_count != want) counts_ok = false;
  }

  int gen_max = ctx.full() ? 30 : 10;
  for (int n = 2; n <= gen_max; n += 2) {
    Digraph d = gen_almost_regular(n);
    if (!is_ar_tournament(d)) {
      counts_ok = false;
      continue;
    }
    for (Predicate p : {Predicate::ArSullivanGap, Predicate::ArSeymourGap}) {
      CheckResult r = run_predicate(p, d);
      ++instances;
      if (!r.pass) ++failures;
    }
  }

  std::ostringstream os;
  os << count_tag(instances, failures)
     << (counts_ok ? ", family counts match" : ", family counts WRONG");
  return {5, "almost regular second-degree gap formulas",
          failures == 0 && counts_ok, os.str(), 0.0};
}

// 6. The subset degree bound with its exact tightness characterization,
// over every subset of every small almost regular tournament.
CriterionResult c6_subset_degree_bound(const Ctx& ctx) {
  std::vector<int> orders = ctx.full() ? std::vector<int>{2, 4, 6}
                                       : std::vector<int>{2, 4};
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t ar_seen = 0;
  for (int n : orders) {
    VerificationReport rep = exhaustive_check(
        Domain::tournaments(n), Predicate::ArSetDegreeBound, ctx.threads);
    instances += rep.instances_checked;
    failures += rep.failures.size();
    for_each_tournament(n, [&](std::uint64_t, const Digraph& d) {
      if (is_ar_tournament(d)) ++ar_seen;
    });
  }
  std::uint64_t want = kArCount2 + kArCount4 + (ctx.full() ? kArCount6 : 0);
  std::ostringstream os;
  os << count_tag(instances, failures) << ", " << ar_seen
     << " almost regular instances";
  return {6, "subset degree bound and tightness", failures == 0 &&
          ar_seen == want, os.str(), 0.0};
}

// 7. The split degree-sum identities: randomized across shapes and
// exhaustively over every small split structure (all Y tournaments, all
// cross patterns), with the stream size recomputed as a bijection check.
CriterionResult c7_sum_identities(const Ctx& ctx) {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;

  std::uint64_t per_shape = ctx.full() ? 112 : 12;
  for (int x = 1; x <= 10; ++x) {
    for (int y = 1; y <= 9; ++y) {
      GenSpec spec;
      spec.family = Family::Split;
      spec.x_size = x;
      spec.y_size = y;
      VerificationReport rep = random_search(
          spec, per_shape, Predicate::SplitSumIdentities,
          Rng::mix(criterion_seed(7),
                   static_cast<std::uint64_t>(x * 100 + y)),
          ctx.threads);
      instances += rep.instances_checked;
      failures += rep.failures.size();
    }
  }
  std::uint64_t random_instances = instances;

  int x_max = ctx.full() ? 2 : 1;
  int y_max = ctx.full() ? 4 : 3;
  std::uint64_t sweep = 0;
  std::uint64_t expected = 0;
  for (int x = 0; x <= x_max; ++x) {
    for (int ny = 0; ny <= y_max; ++ny) {
      expected += tournament_count(ny) * split_pattern_count(x, ny);
      for (std::uint64_t ti = 0; ti < tournament_count(ny); ++ti) {
        Domain dom = Domain::split_patterns(x, decode_tournament(ny, ti));
        VerificationReport rep = exhaustive_check(
            dom, Predicate::SplitSumIdentities, ctx.threads);
        sweep += rep.instances_checked;
        failures += rep.failures.size();
      }
    }
  }
  instances += sweep;

  bool size_ok = sweep == expected &&
                 (!ctx.full() || sweep == kSplitSweepFull);
  std::ostringstream os;
  os << random_instances << " random + " << sweep << " exhaustive, "
     << failures << " failures";
  return {7, "split degree-sum identities", failures == 0 && size_ok,
          os.str(), 0.0};
}

// 8. The six neighborhood statements over split graphs with a rotational
// (regular) tournament on Y, across shapes and random cross patterns,
// inside the stated time budget.
CriterionResult c8_regular_split(const Ctx& ctx) {
  auto start = std::chrono::steady_clock::now();
  std::vector<int> y_sizes = ctx.full() ? std::vector<int>{3, 5, 7, 9}
                                        : std::vector<int>{3, 5};
  int x_max = ctx.full() ? 8 : 4;
  std::uint64_t per_cell = ctx.full() ? 1250 : 250;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  for (int y : y_sizes) {
    for (int x = 1; x <= x_max; ++x) {
      GenSpec spec;
      spec.family = Family::Split;
      spec.y_family = Family::CirculantRegular;
      spec.x_size = x;
      spec.y_size = y;
      VerificationReport rep = random_search(
          spec, per_cell, Predicate::RegularSplitStatements,
          Rng::mix(criterion_seed(8),
                   static_cast<std::uint64_t>(y * 100 + x)),
          ctx.threads);
      instances += rep.instances_checked;
      failures += rep.failures.size();
    }
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  bool pass = failures == 0 && (!ctx.full() || elapsed < 30.0);
  std::ostringstream os;
  os << count_tag(instances, failures) << ", " << std::fixed
     << std::setprecision(2) << elapsed << "s";
  return {8, "regular split neighborhood statements", pass, os.str(), 0.0};
}

// 9. The two constructive finders, with their outputs re-verified from
// scratch rather than trusted: the single-X 2-king construction and the
// complete-split Sullivan construction.
CriterionResult c9_constructive_finders(const Ctx& ctx) {
  std::uint64_t trials = ctx.full() ? 10000 : 1000;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t base = criterion_seed(9);

  for (std::uint64_t t = 0; t < trials; ++t) {
    // Draw complete-split instances with |X| = 1 until source-free; with
    // every X-Y pair adjacent the rejection rate is tiny.
    int y_size = 3 + static_cast<int>(t % 7);
    bool found = false;
    for (std::uint64_t j = 0; j < 64 && !found; ++j) {
      std::uint64_t s = Rng::mix(base, t * 64 + j);
      Digraph y = gen_random_tournament(y_size, Rng::mix(s, 1));
      SplitDigraph split = gen_split(1, y, 0.0, 0.5, 0.5, Rng::mix(s, 2));
      bool source_free = true;
      for (int v : split.graph().vertices()) {
        if (split.graph().in_degree(v) == 0) {
          source_free = false;
          break;
        }
      }
      if (!source_free) continue;
      found = true;
      ++checked;
      try {
        int king = single_x_2king(split);
        if (!split.y().contains(king) ||
            !is_two_king(split.graph(), king)) {
          ++failures;
        }
      } catch (const Error&) {
        ++failures;
      }
    }
    if (!found) ++failures;
  }

  for (std::uint64_t t = 0; t < trials; ++t) {
    GenSpec spec;
    spec.family = Family::CompleteSplit;
    spec.x_size = 1 + static_cast<int>(t % 6);
    spec.y_size = static_cast<int>(t % 10);
    spec.q_xy = 0.5;
    spec.q_yx = 0.5;
    GeneratedInstance g = generate(spec, Rng::mix(base, 1000000 + t));
    const SplitDigraph& split = *g.split();
    ++checked;
    try {
      int v = complete_split_sullivan(split);
      DegreeProfile prof = degree_profile(split.graph(), v);
      if (prof.d_pp < prof.d_minus) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }

  return {9, "constructive finders re-verified", failures == 0,
          count_tag(checked, failures), 0.0};
}

// 10. Sullivan and Seymour witnesses exist in every split graph over an
// almost regular tournament: exhaustive over all cross patterns on the
// 4-vertex family, randomized over the 6- and 8-vertex families.
CriterionResult c10_ar_split_witnesses(const Ctx& ctx) {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  int x_max = ctx.full() ? 3 : 2;
  Digraph y4 = gen_almost_regular(4);
  for (Predicate p : {Predicate::ArSplitSullivan, Predicate::ArSplitSeymour}) {
    for (int x = 0; x <= x_max; ++x) {
      VerificationReport rep =
          exhaustive_check(Domain::split_patterns(x, y4), p, ctx.threads);
      instances += rep.instances_checked;
      failures += rep.failures.size();
    }
    std::vector<int> y_sizes = ctx.full() ? std::vector<int>{6, 8}
                                          : std::vector<int>{6};
    std::uint64_t per_cell = ctx.full() ? 500 : 100;
    int x_hi = ctx.full() ? 10 : 5;
    for (int y : y_sizes) {
      for (int x = 1; x <= x_hi; ++x) {
        GenSpec spec;
        spec.family = Family::Split;
        spec.y_family = Family::AlmostRegular;
        spec.x_size = x;
        spec.y_size = y;
        VerificationReport rep = random_search(
            spec, per_cell, p,
            Rng::mix(criterion_seed(10),
                     static_cast<std::uint64_t>(y * 1000 + x)),
            ctx.threads);
        instances += rep.instances_checked;
        failures += rep.failures.size();
      }
    }
  }
  return {10, "almost regular split witnesses", failures == 0,
          count_tag(instances, failures), 0.0};
}

// 11. The closed-form expectation against its frozen reference, the
// Markov bound against empirical frequencies at every grid point, and
// the vanishing trend in n.
CriterionResult c11_markov_montecarlo(const Ctx& ctx) {
  bool pass = true;
  std::ostringstream os;

  double ref = markov_expectation(100, 0.5);
  if (std::abs(ref - kMarkovReference) > kMarkovTolerance) {
    pass = false;
    os << "closed form off: " << std::setprecision(17) << ref << "; ";
  }

  std::vector<int> ns = ctx.full() ? std::vector<int>{20, 40, 80}
                                   : std::vector<int>{20, 40};
  std::uint64_t trials = ctx.full() ? 100000 : 10000;
  int grid_ok = 0;
  int grid_total = 0;
  bool trend_ok = true;
  for (double p : {0.3, 0.5, 0.8}) {
    double prev_emp = -1.0;
    double prev_se = 0.0;
    double first_emp = 0.0;
    double first_se = 0.0;
    double last_emp = 0.0;
    double last_se = 0.0;
    for (int n : ns) {
      MonteCarloResult r = montecarlo_2king(
          n, p, trials,
          Rng::mix(criterion_seed(11),
                   static_cast<std::uint64_t>(n * 100 + p * 10)),
          ctx.threads);
      ++grid_total;
      if (r.empirical_u_uncovered <= r.markov_bound + 4 * r.std_error) {
        ++grid_ok;
      }
      // The escape probability is nearly flat between adjacent orders at
      // low p (the exact n=20 to n=40 decrease at p=0.3 is 5e-5, under
      // one standard error at these trial counts), so step comparisons
      // get the same 4-sigma slack as the bound check.
      if (prev_emp >= 0.0) {
        double slack =
            4 * std::sqrt(prev_se * prev_se + r.std_error * r.std_error);
        if (r.empirical_u_uncovered > prev_emp + slack) trend_ok = false;
      } else {
        first_emp = r.empirical_u_uncovered;
        first_se = r.std_error;
      }
      prev_emp = r.empirical_u_uncovered;
      prev_se = r.std_error;
      last_emp = r.empirical_u_uncovered;
      last_se = r.std_error;
    }
    // Across the full three-point grid the decrease is unmistakable;
    // require it outright. (The quick grid stops at n=40, where the
    // p=0.3 decrease is still below sampling noise.)
    if (ns.size() >= 3) {
      double end_slack =
          4 * std::sqrt(first_se * first_se + last_se * last_se);
      if (!(last_emp <= first_emp - end_slack)) trend_ok = false;
    }
  }
  if (grid_ok != grid_total) pass = false;
  if (!trend_ok) pass = false;

  os << "closed form within " << kMarkovTolerance << ", " << grid_ok << "/"
     << grid_total << " grid points within 4 sigma, trend "
     << (trend_ok ? "ok" : "VIOLATED");
  return {11, "Markov bound Monte Carlo", pass, os.str(), 0.0};
}

// 12. Orientations of maximal planar graphs: few enough transitive
// triangles to trigger the sufficiency guarantee, and a Sullivan vertex
// in every sample.
CriterionResult c12_planar(const Ctx& ctx) {
  std::uint64_t trials = ctx.full() ? 1000 : 200;
  int n = ctx.full() ? 40 : 30;
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Digraph d = gen_planar_orientation(n, Rng::mix(criterion_seed(12), t));
    TriangleStats st = triangle_stats(d);
    if (st.tt_total >= d.arc_count()) ++failures;
    if (sullivan_vertices(d).empty()) ++failures;
  }
  return {12, "planar orientations stay sparse and Sullivan", failures == 0,
          count_tag(trials, failures), 0.0};
}

// 13. Plumbing: both formats round-trip bit-exactly over every small
// graph, the index codec is a bijection, and sharded sweeps give
// identical counts, hashes and failure sets at 1 and 8 threads.
CriterionResult c13_infrastructure(const Ctx& ctx) {
  int n_max = ctx.full() ? 5 : 4;
  std::uint64_t round_trips = 0;
  std::uint64_t failures = 0;
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t seen = 0;
    for_each_oriented(n, [&](std::uint64_t index, const Digraph& d) {
      ++seen;
      ++round_trips;
      if (parse_arclist(serialize_arclist(d)) != d) ++failures;
      if (parse_digraph6(serialize_digraph6(d)) != d) ++failures;
      if (encode_oriented(d) != index) ++failures;
    });
    if (seen != oriented_count(n)) ++failures;
  }

  bool deterministic = true;
  for (Predicate p : {Predicate::TwoKingExists, Predicate::SullivanExists}) {
    VerificationReport one = exhaustive_check(Domain::oriented(4), p, 1);
    VerificationReport eight = exhaustive_check(Domain::oriented(4), p, 8);
    if (one.instances_checked != eight.instances_checked ||
        one.aggregate_hash != eight.aggregate_hash ||
        one.failures.size() != eight.failures.size()) {
      deterministic = false;
      continue;
    }
    for (std::size_t i = 0; i < one.failures.size(); ++i) {
      if (one.failures[i].id != eight.failures[i].id ||
          one.failures[i].details != eight.failures[i].details) {
        deterministic = false;
      }
    }
    if (p == Predicate::TwoKingExists && one.failures.empty()) {
      // The comparison is only meaningful if some failures exist; plenty
      // of 4-vertex oriented graphs have no 2-king.
      deterministic = false;
    }
  }

  std::ostringstream os;
  os << round_trips << " round-trips, " << failures << " mismatches, "
     << "sharding " << (deterministic ? "deterministic" : "DIVERGED");
  return {13, "formats, enumeration and sharding", failures == 0 &&
          deterministic, os.str(), 0.0};
}

}  // namespace

std::string CriterionResult::to_line() const {
  std::ostringstream os;
  os << (passed ? "PASS" : "FAIL") << " " << std::setw(2) << id << "  " << name
     << ": " << details << " [" << std::fixed << std::setprecision(2)
     << elapsed_seconds << "s]";
  return os.str();
}

std::vector<CriterionResult> run_all(Level level, int threads,
                                     const ProgressFn& progress,
                                     const std::string& archive_dir) {
  Ctx ctx{level, resolve_threads(threads), archive_dir};
  using CriterionFn = CriterionResult (*)(const Ctx&);
  const CriterionFn criteria[] = {
      c1_counting_identity, c2_sufficiency,        c3_conjecture_sweeps,
      c4_kings_are_sullivan, c5_ar_degree_gaps,    c6_subset_degree_bound,
      c7_sum_identities,    c8_regular_split,      c9_constructive_finders,
      c10_ar_split_witnesses, c11_markov_montecarlo, c12_planar,
      c13_infrastructure,
  };

  std::vector<CriterionResult> results;
  int id = 0;
  for (CriterionFn fn : criteria) {
    ++id;
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn(ctx);
    } catch (const std::exception& e) {
      r = {id, "criterion aborted", false, e.what(), 0.0};
    }
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (progress) progress(r);
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return results.size() == 13;
}

}  // namespace snb
