#include "megset/interval.hpp"

#include <algorithm>
#include <string>

namespace meg {

Graph graph_of_model(const IntervalModel& model) {
  const int n = model.size();
  for (int i = 0; i < n; ++i) {
    auto [l, r] = model.intervals[i];
    if (l > r)
      throw invalid_input("interval " + std::to_string(i) + " has l > r");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto [li, ri] = model.intervals[i];
      auto [lj, rj] = model.intervals[j];
      if (std::max(li, lj) <= std::min(ri, rj)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::optional<int> set_diameter(const Graph& g, const std::vector<int>& set) {
  std::vector<int> s(set);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count()))
    throw invalid_input("vertex id out of range in set");
  if (s.size() <= 1) return 0;
  int best = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    DistanceRow row = bfs_distances(g, s[i]);
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!row.reachable(s[j])) return std::nullopt;
      best = std::max(best, row.dist[s[j]]);
    }
  }
  return best;
}

bool is_mandatory_interval(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw invalid_input("vertex out of range");
  std::vector<int> nbrs;
  nbrs.reserve(g.degree(v));
  for (const auto& nb : g.neighbors(v)) nbrs.push_back(nb.vertex);
  VertexDeletion del = delete_vertex(g, v);
  for (int& w : nbrs) w = del.old_to_new[w];
  std::optional<int> d = set_diameter(del.graph, nbrs);
  return d.has_value() && *d <= 4;
}

MEGResult interval_min_meg(const Graph& g) {
  require_connected(g);
  MEGResult res;
  res.method = SolveMethod::interval;
  res.optimal = true;
  if (g.edge_count() == 0) {
    // Connected and edgeless means the singleton graph; nothing to monitor.
    res.witnesses.by_edge.clear();
    return res;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_mandatory_interval(g, v)) res.meg.push_back(v);
  res.size = static_cast<int>(res.meg.size());
  MegCheck chk = is_meg_set(g, res.meg);
  if (!chk.ok)
    throw invalid_input(
        "diameter-test vertices do not monitor every edge; "
        "input is not a connected interval graph");
  res.witnesses = chk.witnesses;
  return res;
}

MEGResult interval_min_meg(const Graph& g, const IntervalModel& model) {
  Graph derived = graph_of_model(model);
  bool same = derived.vertex_count() == g.vertex_count() &&
              derived.edge_count() == g.edge_count();
  if (same) {
    auto a = derived.edges();
    auto b = g.edges();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    same = a == b;
  }
  if (!same) throw invalid_input("interval model does not match the graph");
  return interval_min_meg(g);
}

}  // namespace meg
