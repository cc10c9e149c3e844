#include "zagreb/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <vector>

namespace zagreb {
namespace {

constexpr long long kMaxGraph6Vertices = 258047;
constexpr std::string_view kGraph6Header = ">>graph6<<";

int graph6_byte(std::string_view line, size_t pos) {
  const unsigned char c = static_cast<unsigned char>(line[pos]);
  if (c < 63 || c > 126)
    fail(errc::bad_checksum_byte,
         "byte " + std::to_string(static_cast<int>(c)) + " at position " + std::to_string(pos));
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) fail(errc::syntax_error, "empty graph6 line");

  for (size_t i = 0; i < line.size(); ++i) graph6_byte(line, i);

  long long n = 0;
  size_t pos = 0;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      fail(errc::too_large, "8-byte size prefix (n > 258047) not supported");
    if (line.size() < 4) fail(errc::truncated_body, "size prefix needs 4 bytes");
    n = (static_cast<long long>(graph6_byte(line, 1)) << 12) |
        (static_cast<long long>(graph6_byte(line, 2)) << 6) | graph6_byte(line, 3);
    if (n < 63) fail(errc::syntax_error, "non-canonical long size prefix for n = " + std::to_string(n));
    if (n > kMaxGraph6Vertices) fail(errc::too_large, "n = " + std::to_string(n));
    pos = 4;
  } else {
    n = graph6_byte(line, 0);
    pos = 1;
  }

  const long long bits = n * (n - 1) / 2;
  const size_t body_bytes = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos < body_bytes)
    fail(errc::truncated_body, "need " + std::to_string(body_bytes) + " body bytes, got " +
                                   std::to_string(line.size() - pos));
  if (line.size() - pos > body_bytes)
    fail(errc::trailing_garbage,
         std::to_string(line.size() - pos - body_bytes) + " extra bytes after the adjacency bits");

  std::vector<std::pair<int, int>> edges;
  long long k = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i, ++k) {
      const int value = graph6_byte(line, pos + static_cast<size_t>(k / 6));
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  for (long long pad = bits; pad < static_cast<long long>(body_bytes) * 6; ++pad) {
    const int value = graph6_byte(line, pos + static_cast<size_t>(pad / 6));
    if ((value >> (5 - pad % 6)) & 1) fail(errc::trailing_garbage, "nonzero padding bit");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  if (n > kMaxGraph6Vertices) fail(errc::too_large, "n = " + std::to_string(n));

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }

  const long long bits = n * (n - 1) / 2;
  std::vector<int> body(static_cast<size_t>((bits + 5) / 6), 0);
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) body[static_cast<size_t>(k / 6)] |= 1 << (5 - k % 6);
    }
  }
  for (int value : body) out.push_back(static_cast<char>(63 + value));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  struct Line {
    std::string_view content;
    long long number;
  };
  std::vector<Line> lines;
  long long number = 0;
  while (!text.empty()) {
    ++number;
    size_t eol = text.find('\n');
    std::string_view raw = eol == std::string_view::npos ? text : text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
      raw.remove_suffix(1);
    while (!raw.empty() && (raw.front() == ' ' || raw.front() == '\t')) raw.remove_prefix(1);
    if (!raw.empty()) lines.push_back({raw, number});
  }
  if (lines.empty()) fail(errc::syntax_error, "line 1: missing \"n m\" header");

  auto parse_two = [](const Line& line, const char* what) -> std::pair<long long, long long> {
    long long first = 0;
    long long second = 0;
    const char* begin = line.content.data();
    const char* end = begin + line.content.size();
    auto r1 = std::from_chars(begin, end, first);
    if (r1.ec != std::errc{})
      fail(errc::syntax_error, "line " + std::to_string(line.number) + ": expected " + what);
    const char* mid = r1.ptr;
    while (mid < end && (*mid == ' ' || *mid == '\t')) ++mid;
    auto r2 = std::from_chars(mid, end, second);
    if (r2.ec != std::errc{} || mid == r1.ptr)
      fail(errc::syntax_error, "line " + std::to_string(line.number) + ": expected " + what);
    for (const char* rest = r2.ptr; rest < end; ++rest)
      if (*rest != ' ' && *rest != '\t')
        fail(errc::syntax_error, "line " + std::to_string(line.number) + ": trailing characters");
    return {first, second};
  };

  const auto [n, m] = parse_two(lines[0], "\"n m\" header");
  if (n < 0 || m < 0)
    fail(errc::syntax_error, "line " + std::to_string(lines[0].number) + ": negative header value");
  if (static_cast<long long>(lines.size()) - 1 != m)
    fail(errc::syntax_error, "expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(lines.size() - 1));

  std::vector<std::pair<int, int>> edges;
  std::set<Edge> seen;
  edges.reserve(static_cast<size_t>(m));
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = parse_two(lines[i], "\"u v\" edge");
    const std::string at = "line " + std::to_string(lines[i].number) + ": ";
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::vertex_out_of_range,
           at + "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n = " + std::to_string(n));
    if (u == v) fail(errc::self_loop, at + "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const Edge normalized{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(normalized).second)
      fail(errc::duplicate_edge, at + "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string edge_list_line(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count());
  for (const Edge& e : g.edges())
    out += " " + std::to_string(e.u) + " " + std::to_string(e.v);
  return out;
}

void for_each_graph6_line(std::istream& in,
                          const std::function<void(const Graph&, long long line_no)>& fn) {
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (view.starts_with(kGraph6Header)) view.remove_prefix(kGraph6Header.size());
    while (!view.empty() && (view.back() == '\r' || view.back() == '\n')) view.remove_suffix(1);
    if (view.empty()) continue;
    try {
      fn(parse_graph6(view), line_no);
    } catch (const Error& e) {
      fail(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace zagreb
