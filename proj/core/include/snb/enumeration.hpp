#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "snb/digraph.hpp"
#include "snb/errors.hpp"

namespace snb {

// Exhaustive enumeration of labeled oriented graphs and tournaments on n
// vertices. Every unordered pair {i, j}, i < j, independently takes one
// of three states (absent, i->j, j->i), so the space has size 3^m with
// m = n(n-1)/2 pairs. An index is read in base 3: digit k describes the
// k-th pair in lexicographic order (0,1), (0,2), ..., (0,n-1), (1,2),
// ..., with pair 0 as the least significant digit. Digit values: 0 no
// arc, 1 arc i->j, 2 arc j->i.
//
// Tournaments drop the "absent" state; their space is 2^m indexed the
// same way in base 2 (bit k clear: i->j, set: j->i).
//
// Indices are uint64_t, which caps m at 40 (3^40 < 2^64 <= 3^41); larger
// requests throw SpaceTooLarge. That bound admits n <= 9 for oriented
// graphs. Tournaments fit up to m = 63, n <= 11.

inline constexpr int kMaxEnumPairsOriented = 40;
inline constexpr int kMaxEnumPairsTournament = 63;

// The canonical pair order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
std::vector<std::pair<int, int>> pair_list(int n);

std::uint64_t oriented_count(int n);    // 3^(n(n-1)/2), throws SpaceTooLarge
std::uint64_t tournament_count(int n);  // 2^(n(n-1)/2), throws SpaceTooLarge

Digraph decode_oriented(int n, std::uint64_t index);
std::uint64_t encode_oriented(const Digraph& d);

Digraph decode_tournament(int n, std::uint64_t index);
std::uint64_t encode_tournament(const Digraph& d);

// Visit indices [lo, hi) in order; fn receives (index, digraph). Ranges
// let callers shard the space across threads and recombine: the
// decode/encode bijection guarantees no index is visited twice.
template <typename Fn>
void for_each_oriented(int n, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    fn(idx, decode_oriented(n, idx));
  }
}

template <typename Fn>
void for_each_oriented(int n, Fn&& fn) {
  for_each_oriented(n, 0, oriented_count(n), std::forward<Fn>(fn));
}

template <typename Fn>
void for_each_tournament(int n, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    fn(idx, decode_tournament(n, idx));
  }
}

template <typename Fn>
void for_each_tournament(int n, Fn&& fn) {
  for_each_tournament(n, 0, tournament_count(n), std::forward<Fn>(fn));
}

}  // namespace snb
