#include "snb/enumeration.hpp"

#include <string>

namespace snb {
namespace {

int pair_count(int n) {
  if (n < 0) throw VertexOutOfRange("order must be nonnegative");
  return n * (n - 1) / 2;
}

void check_space(int n, int max_pairs, const char* kind) {
  int m = pair_count(n);
  if (m > max_pairs) {
    throw SpaceTooLarge(std::string(kind) + " space on " + std::to_string(n) +
                        " vertices has " + std::to_string(m) +
                        " pairs; indices only cover " +
                        std::to_string(max_pairs));
  }
}

}  // namespace

std::vector<std::pair<int, int>> pair_list(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::uint64_t oriented_count(int n) {
  check_space(n, kMaxEnumPairsOriented, "oriented graph");
  std::uint64_t total = 1;
  for (int k = 0; k < pair_count(n); ++k) total *= 3;
  return total;
}

std::uint64_t tournament_count(int n) {
  check_space(n, kMaxEnumPairsTournament, "tournament");
  return std::uint64_t{1} << pair_count(n);
}

Digraph decode_oriented(int n, std::uint64_t index) {
  check_space(n, kMaxEnumPairsOriented, "oriented graph");
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      switch (index % 3) {
        case 1: arcs.emplace_back(i, j); break;
        case 2: arcs.emplace_back(j, i); break;
        default: break;
      }
      index /= 3;
    }
  }
  if (index != 0) {
    throw VertexOutOfRange("orientation index out of range for n=" +
                           std::to_string(n));
  }
  return Digraph(n, arcs);
}

std::uint64_t encode_oriented(const Digraph& d) {
  int n = d.order();
  check_space(n, kMaxEnumPairsOriented, "oriented graph");
  std::uint64_t index = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d.has_arc(i, j)) {
        index += place;
      } else if (d.has_arc(j, i)) {
        index += 2 * place;
      }
      place *= 3;
    }
  }
  return index;
}

Digraph decode_tournament(int n, std::uint64_t index) {
  check_space(n, kMaxEnumPairsTournament, "tournament");
  int m = pair_count(n);
  if (m < 64 && (index >> m) != 0) {
    throw VertexOutOfRange("tournament index out of range for n=" +
                           std::to_string(n));
  }
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((index >> bit) & 1) {
        arcs.emplace_back(j, i);
      } else {
        arcs.emplace_back(i, j);
      }
    }
  }
  return Digraph(n, arcs);
}

std::uint64_t encode_tournament(const Digraph& d) {
  int n = d.order();
  check_space(n, kMaxEnumPairsTournament, "tournament");
  if (!d.is_tournament()) {
    throw NotATournament("tournament index is only defined for tournaments");
  }
  std::uint64_t index = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (d.has_arc(j, i)) {
        index |= std::uint64_t{1} << bit;
      }
    }
  }
  return index;
}

}  // namespace snb
