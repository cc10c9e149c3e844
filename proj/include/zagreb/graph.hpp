#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "zagreb/error.hpp"

namespace zagreb {

using Vertex = int;

/// Undirected edge with endpoints stored as u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over dense 0-based vertices. Immutable after
/// construction: degrees, neighbor lists and (for small n) adjacency bitsets
/// are built once, so values are safe to share across threads.
class Graph {
public:
  Graph() = default;  // the empty graph, n = 0

  /// Validates and builds. Rejects self-loops, duplicate pairs and endpoints
  /// outside [0, n); the error message names the offending pair.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }

  /// Edges in canonical order (sorted lexicographically, u < v).
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& degrees() const { return degrees_; }
  int degree(Vertex v) const { return degrees_[static_cast<size_t>(v)]; }
  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  int max_degree_ = 0;
  int min_degree_ = 0;
  std::vector<int> nbr_offsets_;
  std::vector<Vertex> nbrs_;
  // Adjacency bitset rows, built when n is small enough that O(n^2) bits are
  // cheap; gives O(1) has_edge in enumeration loops.
  std::vector<uint64_t> adj_bits_;
  int row_words_ = 0;
};

/// Derived classification: connectivity, cycle rank m - n + c, degree extremes
/// and the structural flags the index checks condition on.
struct GraphClass {
  bool connected = false;
  int components = 0;
  long long cycle_rank = 0;
  int max_degree = 0;
  int min_degree = 0;
  bool is_tree = false;
  bool is_unicyclic = false;
  bool is_chemical = false;  // max degree <= 4
  bool is_regular = false;
  bool is_star = false;
  bool is_cycle = false;
  bool is_complete = false;
};

GraphClass classify(const Graph& g);

/// Concatenates vertex sets (second graph's indices shifted by n1).
Graph disjoint_union(const Graph& g1, const Graph& g2);

}  // namespace zagreb
