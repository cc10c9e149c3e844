#include "zagreb/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zagreb {
namespace {

constexpr int kAdjBitsetMaxN = 1024;

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) fail(errc::parameter_out_of_range, "vertex count " + std::to_string(n) + " is negative");

  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(errc::vertex_out_of_range, "edge " + pair_text(a, b) + " with n = " + std::to_string(n));
    if (a == b) fail(errc::self_loop, "edge " + pair_text(a, b));
    g.edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (size_t i = 1; i < g.edges_.size(); ++i)
    if (g.edges_[i] == g.edges_[i - 1])
      fail(errc::duplicate_edge, "edge " + pair_text(g.edges_[i].u, g.edges_[i].v));

  g.degrees_.assign(static_cast<size_t>(n), 0);
  for (const Edge& e : g.edges_) {
    ++g.degrees_[static_cast<size_t>(e.u)];
    ++g.degrees_[static_cast<size_t>(e.v)];
  }
  if (n > 0) {
    auto [lo, hi] = std::minmax_element(g.degrees_.begin(), g.degrees_.end());
    g.min_degree_ = *lo;
    g.max_degree_ = *hi;
  }

  g.nbr_offsets_.assign(static_cast<size_t>(n) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.nbr_offsets_[static_cast<size_t>(e.u) + 1];
    ++g.nbr_offsets_[static_cast<size_t>(e.v) + 1];
  }
  for (int v = 0; v < n; ++v) g.nbr_offsets_[static_cast<size_t>(v) + 1] += g.nbr_offsets_[static_cast<size_t>(v)];
  g.nbrs_.resize(g.edges_.size() * 2);
  std::vector<int> cursor(g.nbr_offsets_.begin(), g.nbr_offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.nbrs_[static_cast<size_t>(cursor[static_cast<size_t>(e.u)]++)] = e.v;
    g.nbrs_[static_cast<size_t>(cursor[static_cast<size_t>(e.v)]++)] = e.u;
  }
  for (int v = 0; v < n; ++v)
    std::sort(g.nbrs_.begin() + g.nbr_offsets_[static_cast<size_t>(v)],
              g.nbrs_.begin() + g.nbr_offsets_[static_cast<size_t>(v) + 1]);

  if (n <= kAdjBitsetMaxN) {
    g.row_words_ = (n + 63) / 64;
    g.adj_bits_.assign(static_cast<size_t>(n) * static_cast<size_t>(g.row_words_), 0);
    for (const Edge& e : g.edges_) {
      g.adj_bits_[static_cast<size_t>(e.u) * g.row_words_ + e.v / 64] |= uint64_t{1} << (e.v % 64);
      g.adj_bits_[static_cast<size_t>(e.v) * g.row_words_ + e.u / 64] |= uint64_t{1} << (e.u % 64);
    }
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  if (row_words_ > 0)
    return (adj_bits_[static_cast<size_t>(u) * row_words_ + v / 64] >> (v % 64)) & 1;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  auto begin = static_cast<size_t>(nbr_offsets_[static_cast<size_t>(v)]);
  auto end = static_cast<size_t>(nbr_offsets_[static_cast<size_t>(v) + 1]);
  return {nbrs_.data() + begin, end - begin};
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  const int n = g.vertex_count();
  const long long m = g.edge_count();

  Dsu dsu(n);
  int components = n;
  for (const Edge& e : g.edges())
    if (dsu.unite(e.u, e.v)) --components;

  c.components = components;
  c.connected = n >= 1 && components == 1;
  c.cycle_rank = m - n + components;
  c.max_degree = g.max_degree();
  c.min_degree = g.min_degree();
  c.is_tree = c.connected && c.cycle_rank == 0;
  c.is_unicyclic = c.connected && c.cycle_rank == 1;
  c.is_chemical = c.max_degree <= 4;
  c.is_regular = c.max_degree == c.min_degree;
  c.is_star = c.is_tree && n >= 2 && c.max_degree == n - 1;
  c.is_cycle = c.connected && n >= 3 && c.max_degree == 2 && c.min_degree == 2;
  c.is_complete = c.connected && m == static_cast<long long>(n) * (n - 1) / 2;
  return c;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(g1.edge_count() + g2.edge_count()));
  for (const Edge& e : g1.edges()) edges.emplace_back(e.u, e.v);
  const int shift = g1.vertex_count();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph::from_edges(g1.vertex_count() + g2.vertex_count(), edges);
}

}  // namespace zagreb
