#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "snb/digraph.hpp"
#include "snb/rng.hpp"
#include "snb/split.hpp"

namespace snb {

// Random oriented graph D(n, p): each unordered pair {i, j} (taken in
// lexicographic order) independently carries an arc with probability p,
// oriented each way with probability p/2. One uniform draw decides the
// pair: u < p/2 gives i->j, u < p gives j->i, else no arc.
Digraph gen_random_oriented(int n, double p, std::uint64_t seed);

// Uniform random tournament; D(n, 1) with the same pair protocol.
Digraph gen_random_tournament(int n, std::uint64_t seed);

// Rotational tournament on odd n: arcs i -> i+j (mod n) for
// j = 1..(n-1)/2; every vertex has d+ = d- = (n-1)/2.
Digraph gen_circulant_regular(int n);

// Almost regular tournament on even n = 2d: the circulant arcs
// i -> i+j (mod n) for j = 1..d-1 plus the half diagonal i -> i+d for
// i < d. Vertices 0..d-1 form the surplus class.
Digraph gen_almost_regular(int n);

// Split graph over a given tournament on Y. Y keeps its labels
// 0..|Y|-1 and X occupies |Y|..|Y|+x_size-1. Every X-Y pair draws once
// (x ascending, then y ascending): u < q_none no arc, u < q_none + q_xy
// gives x->y, else y->x. q_none = 0 yields a complete split graph.
SplitDigraph gen_split(int x_size, const Digraph& y_tournament, double q_none,
                       double q_xy, double q_yx, std::uint64_t seed);

// Random orientation of a stacked (Apollonian) triangulation: start
// from triangle {0,1,2}, insert each new vertex into a uniformly chosen
// face joining its three corners, then orient every edge uniformly.
// Maximal planar by construction with exactly 3n-6 edges.
Digraph gen_planar_orientation(int n, std::uint64_t seed);

// Random orientation of a bipartite graph with parts n1, n2 and cross
// pairs present with probability p; triangle-free by construction.
Digraph gen_bipartite_orientation(int n1, int n2, double p, std::uint64_t seed);

enum class Family {
  OrientedRandom,
  TournamentRandom,
  CirculantRegular,
  AlmostRegular,
  Split,
  CompleteSplit,
  PlanarOrientation,
  BipartiteOrientation,
};

std::string family_name(Family f);
Family parse_family(const std::string& name);  // throws SyntaxError

// Declarative generator configuration, the unit the search harness and
// the CLI share. For split families y_family selects the tournament on
// Y (tournament-random, circulant-regular or almost-regular).
struct GenSpec {
  Family family = Family::OrientedRandom;
  int n = 0;
  int n1 = 0, n2 = 0;          // bipartite parts
  int x_size = 0, y_size = 0;  // split shape
  Family y_family = Family::TournamentRandom;
  double p = 0.5;
  double q_none = 1.0 / 3, q_xy = 1.0 / 3, q_yx = 1.0 / 3;

  void validate() const;  // throws InvalidProbability / size errors
  std::string describe() const;
};

// A generated instance: split families carry the validated structure,
// everything else a plain digraph.
class GeneratedInstance {
 public:
  explicit GeneratedInstance(Digraph d) : value_(std::move(d)) {}
  explicit GeneratedInstance(SplitDigraph s) : value_(std::move(s)) {}

  const Digraph& graph() const {
    if (auto* s = std::get_if<SplitDigraph>(&value_)) return s->graph();
    return std::get<Digraph>(value_);
  }
  const SplitDigraph* split() const { return std::get_if<SplitDigraph>(&value_); }

 private:
  std::variant<Digraph, SplitDigraph> value_;
};

GeneratedInstance generate(const GenSpec& spec, std::uint64_t seed);

}  // namespace snb
