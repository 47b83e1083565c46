#pragma once

// Brute-force reference implementations for cross-checking the library.
// Everything here works from the adjacency structure alone and deliberately
// avoids the library's BFS/bridge/solver code paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "megset/graph.hpp"

namespace oracle {

// All simple u-v paths as edge-id sequences, via exhaustive DFS. Exponential;
// fine for n <= 8.
inline std::vector<std::vector<int>> all_simple_paths(const meg::Graph& g, int u, int v) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> used(g.vertex_count(), false);
  std::function<void(int)> dfs = [&](int at) {
    if (at == v) {
      out.push_back(path);
      return;
    }
    used[at] = true;
    for (const auto& nb : g.neighbors(at)) {
      if (used[nb.vertex]) continue;
      path.push_back(nb.edge);
      dfs(nb.vertex);
      path.pop_back();
    }
    used[at] = false;
  };
  dfs(u);
  return out;
}

// Shortest u-v distance by path enumeration; -1 when unreachable.
inline int brute_distance(const meg::Graph& g, int u, int v) {
  if (u == v) return 0;
  auto paths = all_simple_paths(g, u, v);
  if (paths.empty()) return -1;
  std::size_t best = paths[0].size();
  for (const auto& p : paths) best = std::min(best, p.size());
  return static_cast<int>(best);
}

// Edge ids lying on at least one shortest u-v path.
inline std::vector<int> brute_union_of_shortest(const meg::Graph& g, int u, int v) {
  auto paths = all_simple_paths(g, u, v);
  std::size_t best = SIZE_MAX;
  for (const auto& p : paths) best = std::min(best, p.size());
  std::vector<bool> in_union(g.edge_count(), false);
  for (const auto& p : paths)
    if (p.size() == best)
      for (int e : p) in_union[e] = true;
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (in_union[e]) out.push_back(e);
  return out;
}

// Does (u, v) monitor edge e, i.e. does e lie on every shortest u-v path?
inline bool brute_monitors(const meg::Graph& g, int u, int v, int e) {
  auto paths = all_simple_paths(g, u, v);
  std::size_t best = SIZE_MAX;
  for (const auto& p : paths) best = std::min(best, p.size());
  if (best == SIZE_MAX) return false;
  for (const auto& p : paths)
    if (p.size() == best && std::find(p.begin(), p.end(), e) == p.end()) return false;
  return true;
}

inline std::vector<int> brute_monitored_edges(const meg::Graph& g, int u, int v) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (brute_monitors(g, u, v, e)) out.push_back(e);
  return out;
}

inline bool brute_is_meg_set(const meg::Graph& g, const std::vector<int>& set) {
  std::vector<int> s(set);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int e = 0; e < g.edge_count(); ++e) {
    bool covered = false;
    for (std::size_t i = 0; i < s.size() && !covered; ++i)
      for (std::size_t j = i + 1; j < s.size() && !covered; ++j)
        covered = brute_monitors(g, s[i], s[j], e);
    if (!covered) return false;
  }
  return true;
}

// Number of connected components of the spanning subgraph on the given edges.
inline int component_count(const meg::Graph& g, const std::vector<bool>& active_edge) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        if (!active_edge[nb.edge]) continue;
        if (comp[nb.vertex] == -1) {
          comp[nb.vertex] = c;
          stack.push_back(nb.vertex);
        }
      }
    }
    ++c;
  }
  return c;
}

// Quadratic bridge oracle: an active edge is a bridge iff dropping it
// increases the component count of the active spanning subgraph.
inline std::vector<int> brute_bridges(const meg::Graph& g, const std::vector<bool>& active_edge) {
  int base = component_count(g, active_edge);
  std::vector<int> out;
  std::vector<bool> tmp(active_edge);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!active_edge[e]) continue;
    tmp[e] = false;
    if (component_count(g, tmp) > base) out.push_back(e);
    tmp[e] = true;
  }
  return out;
}

// Naive degeneracy: repeatedly delete a minimum-degree vertex.
inline int brute_degeneracy(const meg::Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> gone(n, false);
  int k = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
    k = std::max(k, deg[best]);
    gone[best] = true;
    for (const auto& nb : g.neighbors(best))
      if (!gone[nb.vertex]) --deg[nb.vertex];
  }
  return k;
}

// Tiny builders, independent of the generators module.
inline meg::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return meg::Graph::from_edge_list(n, e);
}

inline meg::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return meg::Graph::from_edge_list(n, e);
}

inline meg::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return meg::Graph::from_edge_list(n, e);
}

// Star with the center at vertex 0 and `leaves` leaves.
inline meg::Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return meg::Graph::from_edge_list(leaves + 1, e);
}

// The labeled graph on n vertices encoded by a bitmask over the C(n,2)
// pairs (0,1),(0,2),...,(n-2,n-1); bit i set means pair i is an edge.
inline meg::Graph mask_graph(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> e;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask & (1u << bit)) e.emplace_back(i, j);
  return meg::Graph::from_edge_list(n, e);
}

inline bool connected_by_scan(const meg::Graph& g) {
  if (g.vertex_count() == 0) return false;
  std::vector<bool> active(g.edge_count(), true);
  return component_count(g, active) == 1;
}

// Deterministic 64-bit mixer for seeding test corpora.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace oracle
