#include "megset/monitor.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "combinations.hpp"

namespace meg {

namespace {

// Distance from s to t skipping one edge; kUnreachable when t is cut off.
// Kept free of shortest_path_edge_union so the removal method stays an
// independent route.
int bfs_distance_excluding(const Graph& g, int s, int t, int banned_edge) {
  std::vector<int> dist(g.vertex_count(), DistanceRow::kUnreachable);
  dist[s] = 0;
  std::queue<int> q;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == t) return dist[t];
    for (const auto& nb : g.neighbors(v)) {
      if (nb.edge == banned_edge) continue;
      if (dist[nb.vertex] == DistanceRow::kUnreachable) {
        dist[nb.vertex] = dist[v] + 1;
        q.push(nb.vertex);
      }
    }
  }
  return dist[t];
}

EdgeSet monitored_bridge(const Graph& g, int u, int v) {
  return bridges(g, shortest_path_edge_union(g, u, v));
}

EdgeSet monitored_removal(const Graph& g, int u, int v) {
  int base = bfs_distance_excluding(g, u, v, -1);
  EdgeSet out(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    int d = bfs_distance_excluding(g, u, v, e);
    if (d == DistanceRow::kUnreachable || d > base) out.insert(e);
  }
  return out;
}

void check_pair(const Graph& g, int u, int v) {
  int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) throw invalid_input("vertex out of range");
  if (u == v) throw invalid_input("monitoring pair must be two distinct vertices");
}

// Cleaned copy of a vertex set: sorted, deduplicated, range-checked.
std::vector<int> normalize_set(const Graph& g, const std::vector<int>& set) {
  std::vector<int> s(set);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count()))
    throw invalid_input("vertex id out of range in set");
  return s;
}

// Monitored edge sets for all vertex pairs, indexed lexicographically.
struct PairTable {
  int n = 0;
  std::vector<EdgeSet> sets;

  int index(int a, int b) const { return a * (2 * n - a - 1) / 2 + (b - a - 1); }
  const EdgeSet& at(int a, int b) const { return sets[index(a, b)]; }

  static PairTable build(const Graph& g) {
    PairTable t;
    t.n = g.vertex_count();
    t.sets.reserve(static_cast<std::size_t>(t.n) * (t.n - 1) / 2);
    for (int a = 0; a < t.n; ++a)
      for (int b = a + 1; b < t.n; ++b)
        t.sets.push_back(detail::monitored_edges_unchecked(g, a, b));
    return t;
  }
};

// Do the pairs of candidate monitor every edge? Reuses the scratch set.
bool covers_all(const std::vector<int>& candidate, const PairTable& table, int m,
                EdgeSet& scratch) {
  if (m == 0) return true;
  scratch.clear();
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    for (std::size_t j = i + 1; j < candidate.size(); ++j) {
      scratch |= table.at(candidate[i], candidate[j]);
      if (scratch.size() == m) return true;
    }
  }
  return false;
}

WitnessMap witnesses_for(const Graph& g, const std::vector<int>& set) {
  return is_meg_set(g, set).witnesses;
}

}  // namespace

const char* solve_method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::exact: return "exact";
    case SolveMethod::interval: return "interval";
    case SolveMethod::greedy: return "greedy";
  }
  return "?";
}

namespace detail {

EdgeSet monitored_edges_unchecked(const Graph& g, int u, int v) {
  return monitored_bridge(g, u, v);
}

}  // namespace detail

EdgeSet monitored_edges(const Graph& g, int u, int v, MonitorMethod method) {
  require_connected(g);
  check_pair(g, u, v);
  return method == MonitorMethod::bridge ? monitored_bridge(g, u, v)
                                         : monitored_removal(g, u, v);
}

MegCheck is_meg_set(const Graph& g, const std::vector<int>& set) {
  require_connected(g);
  std::vector<int> s = normalize_set(g, set);
  const int m = g.edge_count();
  MegCheck chk;
  chk.witnesses.by_edge.assign(m, std::nullopt);
  EdgeSet covered(m);
  for (std::size_t i = 0; i < s.size() && covered.size() < m; ++i) {
    for (std::size_t j = i + 1; j < s.size() && covered.size() < m; ++j) {
      EdgeSet mon = monitored_bridge(g, s[i], s[j]);
      for (int e = 0; e < m; ++e) {
        if (mon.contains(e) && !covered.contains(e)) {
          covered.insert(e);
          chk.witnesses.by_edge[e] = std::make_pair(s[i], s[j]);
        }
      }
    }
  }
  chk.ok = covered.size() == m;
  return chk;
}

std::vector<int> mandatory_vertices(const Graph& g) {
  require_connected(g);
  const int n = g.vertex_count();
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    bool mandatory = false;
    for (const auto& un : g.neighbors(v)) {
      int u = un.vertex;
      bool supports = true;
      for (const auto& xn : g.neighbors(v)) {
        int x = xn.vertex;
        if (x == u || g.adjacent(u, x)) continue;  // not an induced 2-path u-v-x
        bool closes = false;
        for (const auto& wn : g.neighbors(u)) {
          int w = wn.vertex;
          if (w != v && w != x && g.adjacent(w, x)) {
            closes = true;
            break;
          }
        }
        if (!closes) {
          supports = false;
          break;
        }
      }
      if (supports) {
        mandatory = true;
        break;
      }
    }
    if (mandatory) out.push_back(v);
  }
  return out;
}

std::vector<int> mandatory_oracle(const Graph& g) {
  require_connected(g);
  const int n = g.vertex_count();
  std::vector<int> out;
  std::vector<int> rest;
  rest.reserve(n - 1);
  for (int v = 0; v < n; ++v) {
    rest.clear();
    for (int w = 0; w < n; ++w)
      if (w != v) rest.push_back(w);
    if (!is_meg_set(g, rest).ok) out.push_back(v);
  }
  return out;
}

namespace {

// Shared search core. Enumerates supersets of the mandatory set in
// increasing size, lexicographic within a size; returns the first hit, which
// is the lexicographically least minimum MEG-set. With a budget, gives up
// once candidate sizes would exceed it.
std::optional<MEGResult> exact_search(const Graph& g, std::optional<int> budget,
                                      int max_vertices) {
  require_connected(g);
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw guard_error("instance too large for exact search (n=" + std::to_string(n) +
                      ", guard=" + std::to_string(max_vertices) + ")");
  if (budget && *budget < 0) throw invalid_input("budget must be non-negative");
  const int m = g.edge_count();

  std::vector<int> base = mandatory_vertices(g);
  std::vector<bool> in_base(n, false);
  for (int v : base) in_base[v] = true;
  std::vector<int> free;
  for (int v = 0; v < n; ++v)
    if (!in_base[v]) free.push_back(v);

  const PairTable table = PairTable::build(g);
  EdgeSet scratch(m);
  const int hi = budget ? std::min(n, *budget) : n;
  for (int k = static_cast<int>(base.size()); k <= hi; ++k) {
    std::optional<std::vector<int>> hit;
    detail::for_each_combination(free, k - static_cast<int>(base.size()),
                                 [&](const std::vector<int>& combo) {
                                   std::vector<int> cand(base);
                                   cand.insert(cand.end(), combo.begin(), combo.end());
                                   std::sort(cand.begin(), cand.end());
                                   if (covers_all(cand, table, m, scratch)) {
                                     hit = cand;
                                     return true;
                                   }
                                   return false;
                                 });
    if (hit) {
      MEGResult res;
      res.meg = *hit;
      res.size = static_cast<int>(hit->size());
      res.optimal = true;
      res.method = SolveMethod::exact;
      res.witnesses = witnesses_for(g, *hit);
      return res;
    }
  }
  return std::nullopt;  // only reachable with a budget: V(G) always monitors
}

}  // namespace

MEGResult min_meg_exact(const Graph& g, int max_vertices) {
  return *exact_search(g, std::nullopt, max_vertices);
}

std::optional<MEGResult> min_meg_exact(const Graph& g, int budget, int max_vertices) {
  return exact_search(g, budget, max_vertices);
}

std::optional<MEGResult> meg_decision(const Graph& g, int budget) {
  return exact_search(g, budget, kExactSolveGuard);
}

std::vector<std::vector<int>> enumerate_min_meg(const Graph& g, int max_vertices) {
  require_connected(g);
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw guard_error("instance too large for enumeration (n=" + std::to_string(n) +
                      ", guard=" + std::to_string(max_vertices) + ")");
  const int m = g.edge_count();
  const PairTable table = PairTable::build(g);
  EdgeSet scratch(m);
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<int>> found;
    detail::for_each_combination(all, k, [&](const std::vector<int>& combo) {
      if (covers_all(combo, table, m, scratch)) found.push_back(combo);
      return false;
    });
    if (!found.empty()) return found;
  }
  return {{}};  // unreachable: V(G) is an MEG-set
}

}  // namespace meg
