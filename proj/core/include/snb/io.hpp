#pragma once

#include <string>

#include "snb/digraph.hpp"

namespace snb {

// Arc-list text format. First non-comment line is `n <order>`, each
// following line `u v` adds the arc u->v. Lines starting with `#` and
// blank lines are skipped anywhere in the file.
//
//   # a 3-cycle
//   n 3
//   0 1
//   1 2
//   2 0
//
// Parse errors carry the 1-based line number.
Digraph parse_arclist(const std::string& text);
std::string serialize_arclist(const Digraph& d);

// digraph6, the directed cousin of the graph6 format, so standard
// tournament corpora can be imported byte for byte. Layout:
//
//   '&'                        header byte
//   N(n)                       order: n+63 for n <= 62, else '~' plus
//                              three bytes (18 bits) or '~~' plus six
//                              bytes (36 bits), 6 bits per byte, +63,
//                              most significant group first
//   adjacency bits             the n*n matrix in row-major order (bit 1
//                              at (u, v) = arc u->v), packed 6 bits per
//                              byte, most significant bit first, each
//                              byte +63, final byte zero-padded
//
// Parsing rejects trailing garbage, nonzero padding and byte values
// outside the printable 63..126 window (BadPadding), a missing '&'
// (BadHeader), diagonal bits (LoopArc) and digon bit pairs
// (OrientationViolation). serialize(parse(b)) == b for every valid
// canonically padded input.
Digraph parse_digraph6(const std::string& bytes);
std::string serialize_digraph6(const Digraph& d);

// Reads either format, deciding by the leading '&'.
Digraph parse_auto(const std::string& payload);

Digraph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const Digraph& d,
                     bool as_digraph6);

}  // namespace snb
