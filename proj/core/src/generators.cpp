#include "snb/generators.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "snb/errors.hpp"

namespace snb {
namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidProbability(std::string(what) + " must lie in [0, 1], got " +
                             std::to_string(p));
  }
}

// Shared pair protocol: one draw per unordered pair {i, j}, i < j, pairs
// visited lexicographically. Splitting the acceptance region in two keeps
// the two orientations exactly equally likely for any p.
Digraph draw_pairs(int n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double u = rng.next_unit();
      if (u < p / 2) {
        arcs.emplace_back(i, j);
      } else if (u < p) {
        arcs.emplace_back(j, i);
      }
    }
  }
  return Digraph(n, arcs);
}

}  // namespace

Digraph gen_random_oriented(int n, double p, std::uint64_t seed) {
  check_probability(p, "arc probability");
  Rng rng(seed);
  return draw_pairs(n, p, rng);
}

Digraph gen_random_tournament(int n, std::uint64_t seed) {
  Rng rng(seed);
  return draw_pairs(n, 1.0, rng);
}

Digraph gen_circulant_regular(int n) {
  if (n < 1 || n % 2 == 0) {
    throw EvenOrder("rotational tournament needs odd order, got " +
                    std::to_string(n));
  }
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= (n - 1) / 2; ++j) {
      arcs.emplace_back(i, (i + j) % n);
    }
  }
  return Digraph(n, arcs);
}

Digraph gen_almost_regular(int n) {
  if (n < 2 || n % 2 != 0) {
    throw OddOrder("almost regular tournament needs even order, got " +
                   std::to_string(n));
  }
  int d = n / 2;
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j < d; ++j) {
      arcs.emplace_back(i, (i + j) % n);
    }
  }
  // The diagonal pairs {i, i+d} would make every vertex degree-regular on
  // an even order, which is impossible; give the first half the surplus.
  for (int i = 0; i < d; ++i) {
    arcs.emplace_back(i, i + d);
  }
  return Digraph(n, arcs);
}

SplitDigraph gen_split(int x_size, const Digraph& y_tournament, double q_none,
                       double q_xy, double q_yx, std::uint64_t seed) {
  if (x_size < 0) {
    throw VertexOutOfRange("split part size must be nonnegative, got " +
                           std::to_string(x_size));
  }
  if (!y_tournament.is_tournament()) {
    throw NotATournament("split construction needs a tournament on Y");
  }
  check_probability(q_none, "q_none");
  check_probability(q_xy, "q_xy");
  check_probability(q_yx, "q_yx");
  double total = q_none + q_xy + q_yx;
  if (!(total > 0.999999 && total < 1.000001)) {
    throw InvalidProbability("cross-pair probabilities must sum to 1, got " +
                             std::to_string(total));
  }

  int ny = y_tournament.order();
  int n = ny + x_size;
  std::vector<std::pair<int, int>> arcs = y_tournament.arcs();

  Rng rng(seed);
  for (int xi = 0; xi < x_size; ++xi) {
    int x = ny + xi;
    for (int y = 0; y < ny; ++y) {
      double u = rng.next_unit();
      if (u < q_none) continue;
      if (u < q_none + q_xy) {
        arcs.emplace_back(x, y);
      } else {
        arcs.emplace_back(y, x);
      }
    }
  }

  VertexSet x_set;
  for (int xi = 0; xi < x_size; ++xi) x_set.insert(ny + xi);
  return SplitDigraph(Digraph(n, arcs), x_set);
}

Digraph gen_planar_orientation(int n, std::uint64_t seed) {
  if (n < 3) {
    throw TooSmall("stacked triangulation needs at least 3 vertices, got " +
                   std::to_string(n));
  }
  Rng rng(seed);

  struct Face {
    int a, b, c;
  };
  std::vector<Face> faces = {{0, 1, 2}};
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
  for (int v = 3; v < n; ++v) {
    std::size_t idx = static_cast<std::size_t>(rng.next_below(faces.size()));
    Face f = faces[idx];
    edges.emplace_back(f.a, v);
    edges.emplace_back(f.b, v);
    edges.emplace_back(f.c, v);
    // Splitting the chosen face keeps the triangulation stacked: replace
    // it in place and append the other two daughters.
    faces[idx] = {f.a, f.b, v};
    faces.push_back({f.a, f.c, v});
    faces.push_back({f.b, f.c, v});
  }

  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (rng.bernoulli(0.5)) {
      arcs.emplace_back(a, b);
    } else {
      arcs.emplace_back(b, a);
    }
  }
  return Digraph(n, arcs);
}

Digraph gen_bipartite_orientation(int n1, int n2, double p,
                                  std::uint64_t seed) {
  if (n1 < 0 || n2 < 0) {
    throw VertexOutOfRange("part sizes must be nonnegative");
  }
  check_probability(p, "edge probability");
  Rng rng(seed);
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      double u = rng.next_unit();
      if (u < p / 2) {
        arcs.emplace_back(i, n1 + j);
      } else if (u < p) {
        arcs.emplace_back(n1 + j, i);
      }
    }
  }
  return Digraph(n1 + n2, arcs);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::OrientedRandom: return "oriented-random";
    case Family::TournamentRandom: return "tournament-random";
    case Family::CirculantRegular: return "circulant-regular";
    case Family::AlmostRegular: return "almost-regular";
    case Family::Split: return "split";
    case Family::CompleteSplit: return "complete-split";
    case Family::PlanarOrientation: return "planar-orientation";
    case Family::BipartiteOrientation: return "bipartite-orientation";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::OrientedRandom, Family::TournamentRandom,
                   Family::CirculantRegular, Family::AlmostRegular,
                   Family::Split, Family::CompleteSplit,
                   Family::PlanarOrientation, Family::BipartiteOrientation}) {
    if (family_name(f) == name) return f;
  }
  throw SyntaxError("unknown graph family '" + name + "'");
}

void GenSpec::validate() const {
  switch (family) {
    case Family::OrientedRandom:
      if (n < 0) throw VertexOutOfRange("n must be nonnegative");
      check_probability(p, "arc probability");
      break;
    case Family::TournamentRandom:
      if (n < 0) throw VertexOutOfRange("n must be nonnegative");
      break;
    case Family::CirculantRegular:
      if (n < 1 || n % 2 == 0) throw EvenOrder("order must be odd");
      break;
    case Family::AlmostRegular:
      if (n < 2 || n % 2 != 0) throw OddOrder("order must be even");
      break;
    case Family::Split:
    case Family::CompleteSplit: {
      if (x_size < 0 || y_size < 0) {
        throw VertexOutOfRange("split part sizes must be nonnegative");
      }
      if (y_family == Family::CirculantRegular &&
          (y_size < 1 || y_size % 2 == 0)) {
        throw EvenOrder("circulant tournament on Y needs odd |Y|");
      }
      if (y_family == Family::AlmostRegular &&
          (y_size < 2 || y_size % 2 != 0)) {
        throw OddOrder("almost regular tournament on Y needs even |Y|");
      }
      if (y_family != Family::TournamentRandom &&
          y_family != Family::CirculantRegular &&
          y_family != Family::AlmostRegular) {
        throw SyntaxError("y_family must be a tournament family");
      }
      check_probability(q_none, "q_none");
      check_probability(q_xy, "q_xy");
      check_probability(q_yx, "q_yx");
      double total = q_none + q_xy + q_yx;
      if (family == Family::CompleteSplit) total = q_xy + q_yx;
      if (!(total > 0.999999 && total < 1.000001)) {
        throw InvalidProbability("cross-pair probabilities must sum to 1");
      }
      break;
    }
    case Family::PlanarOrientation:
      if (n < 3) throw TooSmall("planar family needs n >= 3");
      break;
    case Family::BipartiteOrientation:
      if (n1 < 0 || n2 < 0) {
        throw VertexOutOfRange("part sizes must be nonnegative");
      }
      check_probability(p, "edge probability");
      break;
  }
}

std::string GenSpec::describe() const {
  std::ostringstream os;
  os << family_name(family);
  switch (family) {
    case Family::OrientedRandom:
      os << " n=" << n << " p=" << p;
      break;
    case Family::TournamentRandom:
    case Family::CirculantRegular:
    case Family::AlmostRegular:
      os << " n=" << n;
      break;
    case Family::Split:
    case Family::CompleteSplit:
      os << " |X|=" << x_size << " |Y|=" << y_size << " Y="
         << family_name(y_family);
      if (family == Family::Split) os << " q_none=" << q_none;
      os << " q_xy=" << q_xy << " q_yx=" << q_yx;
      break;
    case Family::PlanarOrientation:
      os << " n=" << n;
      break;
    case Family::BipartiteOrientation:
      os << " n1=" << n1 << " n2=" << n2 << " p=" << p;
      break;
  }
  return os.str();
}

GeneratedInstance generate(const GenSpec& spec, std::uint64_t seed) {
  spec.validate();
  switch (spec.family) {
    case Family::OrientedRandom:
      return GeneratedInstance(gen_random_oriented(spec.n, spec.p, seed));
    case Family::TournamentRandom:
      return GeneratedInstance(gen_random_tournament(spec.n, seed));
    case Family::CirculantRegular:
      return GeneratedInstance(gen_circulant_regular(spec.n));
    case Family::AlmostRegular:
      return GeneratedInstance(gen_almost_regular(spec.n));
    case Family::Split:
    case Family::CompleteSplit: {
      // Derive independent streams so the Y tournament and the cross
      // arcs never share draws; the split stays reproducible even if one
      // half's consumption pattern changes.
      std::uint64_t y_seed = Rng::mix(seed, 1);
      std::uint64_t cross_seed = Rng::mix(seed, 2);
      Digraph y = spec.y_family == Family::CirculantRegular
                      ? gen_circulant_regular(spec.y_size)
                  : spec.y_family == Family::AlmostRegular
                      ? gen_almost_regular(spec.y_size)
                      : gen_random_tournament(spec.y_size, y_seed);
      double qn = spec.q_none, qxy = spec.q_xy, qyx = spec.q_yx;
      if (spec.family == Family::CompleteSplit) {
        double cross = qxy + qyx;
        qn = 0.0;
        qxy = qxy / cross;
        qyx = qyx / cross;
      }
      return GeneratedInstance(
          gen_split(spec.x_size, y, qn, qxy, qyx, cross_seed));
    }
    case Family::PlanarOrientation:
      return GeneratedInstance(gen_planar_orientation(spec.n, seed));
    case Family::BipartiteOrientation:
      return GeneratedInstance(
          gen_bipartite_orientation(spec.n1, spec.n2, spec.p, seed));
  }
  throw Error("unreachable");
}

}  // namespace snb
