#include "megset/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>
#include <unordered_set>

namespace meg {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw parse_error("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  std::unordered_set<long long> seen;
  seen.reserve(pairs.size() * 2);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw parse_error("vertex id out of range [0, " + std::to_string(n) + "): " +
                        std::to_string(a) + " " + std::to_string(b));
    if (a == b) throw parse_error("self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    long long key = static_cast<long long>(a) * n + b;
    if (!seen.insert(key).second)
      throw parse_error("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    g.edges_.emplace_back(a, b);
  }
  g.adj_.assign(n, {});
  for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
    auto [a, b] = g.edges_[e];
    g.adj_[a].push_back({b, e});
    g.adj_[b].push_back({a, e});
  }
  for (auto& nb : g.adj_)
    std::sort(nb.begin(), nb.end(),
              [](const Neighbor& x, const Neighbor& y) { return x.vertex < y.vertex; });
  return g;
}

int Graph::edge_id(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return -1;
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v,
                             [](const Neighbor& x, int key) { return x.vertex < key; });
  if (it != nb.end() && it->vertex == v) return it->edge;
  return -1;
}

EdgeSet::EdgeSet(int universe) : universe_(universe) {
  if (universe < 0) throw invalid_input("edge set universe must be non-negative");
  words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

EdgeSet EdgeSet::full(int universe) {
  EdgeSet s(universe);
  for (int e = 0; e < universe; ++e) s.insert(e);
  return s;
}

void EdgeSet::insert(int e) {
  std::uint64_t& w = words_[static_cast<std::size_t>(e) >> 6];
  std::uint64_t bit = 1ull << (e & 63);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void EdgeSet::erase(int e) {
  std::uint64_t& w = words_[static_cast<std::size_t>(e) >> 6];
  std::uint64_t bit = 1ull << (e & 63);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

void EdgeSet::clear() {
  std::fill(words_.begin(), words_.end(), 0);
  size_ = 0;
}

int EdgeSet::count_not_in(const EdgeSet& other) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += std::popcount(words_[i] & ~other.words_[i]);
  return c;
}

bool EdgeSet::contains_all(const EdgeSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (other.words_[i] & ~words_[i]) return false;
  return true;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] |= other.words_[i];
    c += std::popcount(words_[i]);
  }
  size_ = c;
  return *this;
}

std::vector<int> EdgeSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size_);
  for (int e = 0; e < universe_; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

DistanceRow bfs_distances(const Graph& g, int source) {
  int n = g.vertex_count();
  if (source < 0 || source >= n) throw invalid_input("bfs source out of range");
  DistanceRow row;
  row.source = source;
  row.dist.assign(n, DistanceRow::kUnreachable);
  row.dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& nb : g.neighbors(v)) {
      if (row.dist[nb.vertex] == DistanceRow::kUnreachable) {
        row.dist[nb.vertex] = row.dist[v] + 1;
        q.push(nb.vertex);
      }
    }
  }
  return row;
}

std::vector<DistanceRow> distance_matrix(const Graph& g) {
  std::vector<DistanceRow> rows;
  rows.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) rows.push_back(bfs_distances(g, v));
  return rows;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) throw invalid_input("connectivity is undefined on the empty graph");
  DistanceRow row = bfs_distances(g, 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!row.reachable(v)) return false;
  return true;
}

void require_connected(const Graph& g) {
  if (g.vertex_count() == 0 || !is_connected(g))
    throw invalid_input("operation requires a connected graph");
}

EdgeSet shortest_path_edge_union(const Graph& g, int u, int v) {
  int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) throw invalid_input("vertex out of range");
  if (u == v) throw invalid_input("shortest_path_edge_union requires distinct endpoints");
  DistanceRow du = bfs_distances(g, u);
  if (!du.reachable(v))
    throw invalid_input("no path between " + std::to_string(u) + " and " + std::to_string(v));
  DistanceRow dv = bfs_distances(g, v);
  int d = du.dist[v];
  EdgeSet out(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge(e);
    if (du.reachable(a) && dv.reachable(b) && du.dist[a] + 1 + dv.dist[b] == d)
      out.insert(e);
    else if (du.reachable(b) && dv.reachable(a) && du.dist[b] + 1 + dv.dist[a] == d)
      out.insert(e);
  }
  return out;
}

EdgeSet bridges(const Graph& g, const EdgeSet& active) {
  if (active.universe() != g.edge_count())
    throw invalid_input("active edge set universe does not match graph");
  int n = g.vertex_count();
  EdgeSet out(g.edge_count());
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    std::size_t idx;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbs = g.neighbors(f.v);
      if (f.idx < nbs.size()) {
        auto [w, e] = nbs[f.idx++];
        if (e == f.parent_edge || !active.contains(e)) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int child = f.v;
        int via = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[p.v] = std::min(low[p.v], low[child]);
          if (low[child] > disc[p.v]) out.insert(via);
        }
      }
    }
  }
  return out;
}

VertexDeletion delete_vertex(const Graph& g, int v) {
  int n = g.vertex_count();
  if (v < 0 || v >= n) throw invalid_input("delete_vertex id out of range");
  VertexDeletion res;
  res.old_to_new.assign(n, -1);
  int next = 0;
  for (int w = 0; w < n; ++w)
    if (w != v) res.old_to_new[w] = next++;
  std::vector<std::pair<int, int>> kept;
  kept.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) kept.emplace_back(res.old_to_new[a], res.old_to_new[b]);
  res.graph = Graph::from_edge_list(n - 1, kept);
  return res;
}

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<int> deg(n);
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    maxdeg = std::max(maxdeg, deg[v]);
  }
  // Bin-sort core decomposition; degeneracy is the largest degree seen at
  // the moment a vertex is peeled.
  std::vector<int> bin(maxdeg + 1, 0), vert(n), pos(n);
  for (int v = 0; v < n; ++v) ++bin[deg[v]];
  int start = 0;
  for (int d = 0; d <= maxdeg; ++d) {
    int cnt = bin[d];
    bin[d] = start;
    start += cnt;
  }
  for (int v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (int d = maxdeg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    int v = vert[i];
    k = std::max(k, deg[v]);
    for (const auto& nb : g.neighbors(v)) {
      int w = nb.vertex;
      if (deg[w] > deg[v]) {
        int dw = deg[w], pw = pos[w];
        int ps = bin[dw], s = vert[ps];
        if (s != w) {
          vert[ps] = w;
          vert[pw] = s;
          pos[w] = ps;
          pos[s] = pw;
        }
        ++bin[dw];
        --deg[w];
      }
    }
  }
  return k;
}

}  // namespace meg
