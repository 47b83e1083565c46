#include "megset/reductions.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "combinations.hpp"

namespace meg {

const char* role_name(GadgetRole r) {
  switch (r) {
    case GadgetRole::U: return "U";
    case GadgetRole::UPrime: return "U'";
    case GadgetRole::UDoublePrime: return "U''";
    case GadgetRole::X: return "x";
    case GadgetRole::Y: return "y";
    case GadgetRole::YStar: return "y*";
  }
  return "?";
}

GadgetMap vc_gadget(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw invalid_input("vc_gadget requires at least 2 vertices");
  const int x = 3 * n, y = 3 * n + 1, ystar = 3 * n + 2;
  std::vector<std::pair<int, int>> edges(g.edges());
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n + i);
  for (int i = 0; i < n; ++i) edges.emplace_back(n + i, x);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, y);
  edges.emplace_back(y, ystar);

  GadgetMap map;
  map.ghat = Graph::from_edge_list(3 * n + 3, edges);
  map.roles.assign(3 * n + 3, GadgetRole::U);
  map.back_map.assign(3 * n + 3, -1);
  for (int i = 0; i < n; ++i) {
    map.roles[i] = GadgetRole::U;
    map.back_map[i] = i;
    map.roles[n + i] = GadgetRole::UPrime;
    map.roles[2 * n + i] = GadgetRole::UDoublePrime;
  }
  map.roles[x] = GadgetRole::X;
  map.roles[y] = GadgetRole::Y;
  map.roles[ystar] = GadgetRole::YStar;
  return map;
}

std::vector<int> min_vertex_cover_exact(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw guard_error("instance too large for exact vertex cover (n=" +
                      std::to_string(n) + ", guard=" + std::to_string(max_vertices) + ")");
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  std::vector<bool> in_set(n);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> hit;
    bool found = detail::for_each_combination(all, k, [&](const std::vector<int>& combo) {
      std::fill(in_set.begin(), in_set.end(), false);
      for (int v : combo) in_set[v] = true;
      for (const auto& [a, b] : g.edges())
        if (!in_set[a] && !in_set[b]) return false;
      hit = combo;
      return true;
    });
    if (found) return hit;
  }
  return all;  // unreachable: V covers everything
}

std::vector<int> vc_from_meg(const GadgetMap& map, const std::vector<int>& set) {
  if (!is_meg_set(map.ghat, set).ok)
    throw invalid_input("set is not an MEG-set of the gadget instance");
  std::vector<int> cover;
  for (int v : set) {
    if (v < 0 || v >= map.ghat.vertex_count())
      throw invalid_input("vertex id out of range in set");
    if (map.roles[v] == GadgetRole::U) cover.push_back(map.back_map[v]);
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  return cover;
}

int cubic_vc_lower_bound(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw invalid_input("cubic_vc_lower_bound requires a non-empty graph");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 3)
      throw invalid_input("graph is not cubic: vertex " + std::to_string(v) +
                          " has degree " + std::to_string(g.degree(v)));
  // 2-color every component; success means bipartite, which is rejected.
  std::vector<int> color(n, -1);
  bool bipartite = true;
  for (int s = 0; s < n && bipartite; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && bipartite) {
      int v = q.front();
      q.pop();
      for (const auto& nb : g.neighbors(v)) {
        if (color[nb.vertex] == -1) {
          color[nb.vertex] = color[v] ^ 1;
          q.push(nb.vertex);
        } else if (color[nb.vertex] == color[v]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  if (bipartite)
    throw invalid_input("graph is bipartite; the n/2 + 1 bound needs an odd cycle");
  return n / 2 + 1;
}

}  // namespace meg
