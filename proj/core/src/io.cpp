#include "snb/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "snb/errors.hpp"

namespace snb {
namespace {

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void syntax_error(int line_no, const std::string& what) {
  throw SyntaxError("line " + std::to_string(line_no) + ": " + what);
}

long parse_int_field(const std::string& token, int line_no) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(token, &pos);
  } catch (const std::exception&) {
    syntax_error(line_no, "expected an integer, got '" + token + "'");
  }
  if (pos != token.size()) {
    syntax_error(line_no, "trailing characters after integer in '" + token + "'");
  }
  return value;
}

}  // namespace

Digraph parse_arclist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_order = false;
  int n = 0;
  std::vector<std::pair<int, int>> arcs;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line) || line[0] == '#') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      syntax_error(line_no, "expected two fields");
    }

    if (!have_order) {
      if (a != "n") {
        syntax_error(line_no, "expected header 'n <order>' before arcs");
      }
      long order = parse_int_field(b, line_no);
      if (order < 0) syntax_error(line_no, "order must be nonnegative");
      n = static_cast<int>(order);
      have_order = true;
      continue;
    }

    long u = parse_int_field(a, line_no);
    long v = parse_int_field(b, line_no);
    arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }

  if (!have_order) {
    throw SyntaxError("missing header line 'n <order>'");
  }
  return Digraph(n, arcs);
}

std::string serialize_arclist(const Digraph& d) {
  std::ostringstream out;
  out << "n " << d.order() << "\n";
  for (auto [u, v] : d.arcs()) {
    out << u << " " << v << "\n";
  }
  return out.str();
}

namespace {

constexpr int kSixBitOffset = 63;

int read_sixbit(const std::string& bytes, std::size_t pos) {
  unsigned char c = static_cast<unsigned char>(bytes[pos]);
  if (c < 63 || c > 126) {
    throw BadPadding("byte " + std::to_string(pos) + " value " +
                     std::to_string(int{c}) + " outside the 63..126 window");
  }
  return int{c} - kSixBitOffset;
}

// Decodes N(n) starting at pos, advancing pos past it.
long long read_order(const std::string& bytes, std::size_t& pos) {
  if (pos >= bytes.size()) throw BadHeader("truncated before order field");
  int first = read_sixbit(bytes, pos);
  if (first < 63) {
    ++pos;
    return first;
  }
  ++pos;  // consumed '~'
  int groups = 3;
  if (pos < bytes.size() && bytes[pos] == '~') {
    ++pos;
    groups = 6;
  }
  if (pos + groups > bytes.size()) {
    throw BadHeader("truncated extended order field");
  }
  long long n = 0;
  for (int g = 0; g < groups; ++g, ++pos) {
    n = (n << 6) | read_sixbit(bytes, pos);
  }
  return n;
}

void append_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kSixBitOffset));
    return;
  }
  out.push_back('~');
  for (int shift = 12; shift >= 0; shift -= 6) {
    out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kSixBitOffset));
  }
}

}  // namespace

Digraph parse_digraph6(const std::string& bytes) {
  if (bytes.empty() || bytes[0] != '&') {
    throw BadHeader("digraph6 data must start with '&'");
  }
  std::size_t pos = 1;
  long long order = read_order(bytes, pos);
  if (order > kMaxVertices) {
    throw TooManyVertices("digraph6 order " + std::to_string(order) +
                          " exceeds the compiled limit of " +
                          std::to_string(kMaxVertices) +
                          "; rebuild with a larger SNB_MAX_VERTICES");
  }
  int n = static_cast<int>(order);

  long long bit_count = static_cast<long long>(n) * n;
  std::size_t byte_count = static_cast<std::size_t>((bit_count + 5) / 6);
  if (bytes.size() - pos != byte_count) {
    throw BadPadding("expected " + std::to_string(byte_count) +
                     " matrix bytes, got " + std::to_string(bytes.size() - pos));
  }

  std::vector<std::pair<int, int>> arcs;
  long long bit = 0;
  for (std::size_t k = 0; k < byte_count; ++k) {
    int group = read_sixbit(bytes, pos + k);
    for (int b = 5; b >= 0; --b, ++bit) {
      int on = (group >> b) & 1;
      if (bit >= bit_count) {
        if (on) throw BadPadding("nonzero padding bits in final byte");
        continue;
      }
      if (!on) continue;
      int u = static_cast<int>(bit / n);
      int v = static_cast<int>(bit % n);
      arcs.emplace_back(u, v);  // the Digraph ctor rejects loops and digons
    }
  }
  return Digraph(n, arcs);
}

std::string serialize_digraph6(const Digraph& d) {
  int n = d.order();
  std::string out = "&";
  append_order(out, n);

  int group = 0;
  int filled = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      group = (group << 1) | (d.has_arc(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kSixBitOffset));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + kSixBitOffset));
  }
  return out;
}

Digraph parse_auto(const std::string& payload) {
  if (!payload.empty() && payload[0] == '&') {
    std::string trimmed = payload;
    while (!trimmed.empty() &&
           (trimmed.back() == '\n' || trimmed.back() == '\r')) {
      trimmed.pop_back();
    }
    return parse_digraph6(trimmed);
  }
  return parse_arclist(payload);
}

Digraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_auto(buf.str());
}

void save_graph_file(const std::string& path, const Digraph& d,
                     bool as_digraph6) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  if (as_digraph6) {
    out << serialize_digraph6(d) << "\n";
  } else {
    out << serialize_arclist(d);
  }
}

}  // namespace snb
