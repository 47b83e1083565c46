#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "megset/errors.hpp"

namespace meg {

// Immutable simple undirected graph. Vertex ids are dense 0..n-1, edge ids
// are dense 0..m-1 in construction order. Endpoints are stored normalized
// with u < v; adjacency lists are sorted by neighbor id.
class Graph {
 public:
  struct Neighbor {
    int vertex;
    int edge;
  };

  Graph() = default;

  // Validates and builds: ids must lie in [0, n), no self-loops, no
  // duplicate edges (in either orientation). Violations raise parse_error.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Endpoints of edge e, normalized u < v.
  std::pair<int, int> edge(int e) const { return edges_[e]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::vector<Neighbor>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Edge id of (u, v), or -1 if not adjacent.
  int edge_id(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<Neighbor>> adj_;
};

// Set of edge ids over a fixed universe 0..m-1, with cached cardinality.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe);
  static EdgeSet full(int universe);

  int universe() const { return universe_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(int e) const {
    return (words_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u;
  }

  void insert(int e);
  void erase(int e);
  void clear();

  // Number of ids in *this that are not in other (same universe).
  int count_not_in(const EdgeSet& other) const;
  bool contains_all(const EdgeSet& other) const;

  EdgeSet& operator|=(const EdgeSet& other);
  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::vector<int> to_vector() const;  // sorted ascending

 private:
  int universe_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Distances from one source; unreachable vertices carry kUnreachable.
struct DistanceRow {
  static constexpr int kUnreachable = -1;

  int source = 0;
  std::vector<int> dist;

  bool reachable(int v) const { return dist[v] != kUnreachable; }
};

DistanceRow bfs_distances(const Graph& g, int source);
std::vector<DistanceRow> distance_matrix(const Graph& g);

// Requires n >= 1 (invalid_input on the empty graph).
bool is_connected(const Graph& g);

// Throws invalid_input unless g is non-empty and connected.
void require_connected(const Graph& g);

// Union of the edges of all shortest u-v paths: edge (a, b) is included iff
// d(u,a) + 1 + d(b,v) = d(u,v) for one of its orientations. Requires u != v
// and v reachable from u.
EdgeSet shortest_path_edge_union(const Graph& g, int u, int v);

// Cut-edges of the spanning subgraph (V, active): the active edges whose
// removal increases that subgraph's component count.
EdgeSet bridges(const Graph& g, const EdgeSet& active);

struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for the deleted vertex
};

// Induced subgraph on V minus {v}. Surviving vertices are renumbered densely
// preserving relative order; surviving edges keep their relative order.
VertexDeletion delete_vertex(const Graph& g, int v);

// Minimum k such that repeatedly removing a minimum-degree vertex never
// removes a vertex of current degree > k.
int degeneracy(const Graph& g);

}  // namespace meg
