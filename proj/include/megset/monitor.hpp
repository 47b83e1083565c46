#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "megset/graph.hpp"

namespace meg {

// A pair (u, v) monitors edge e when e lies on every shortest u-v path,
// i.e. deleting e strictly increases d(u, v). An MEG-set is a vertex set M
// such that every edge is monitored by some pair of M.

enum class MonitorMethod {
  bridge,   // cut-edges of the shortest-path edge union
  removal,  // edges whose deletion increases d(u, v)
};

enum class SolveMethod { exact, interval, greedy };

const char* solve_method_name(SolveMethod m);

// Per-edge witness: the first monitoring pair in canonical pair order
// ((0,1), (0,2), ..., (1,2), ...) among the pairs of the checked set.
struct WitnessMap {
  std::vector<std::optional<std::pair<int, int>>> by_edge;
};

struct MEGResult {
  std::vector<int> meg;  // sorted ascending
  int size = 0;
  bool optimal = false;
  SolveMethod method = SolveMethod::exact;
  WitnessMap witnesses;
};

struct MegCheck {
  bool ok = false;
  WitnessMap witnesses;
};

inline constexpr int kExactSolveGuard = 20;
inline constexpr int kEnumerateGuard = 14;

// Edges monitored by the pair (u, v). Both methods compute the same set;
// they are kept as independent routes for cross-verification. Requires a
// connected graph and u != v.
EdgeSet monitored_edges(const Graph& g, int u, int v,
                        MonitorMethod method = MonitorMethod::bridge);

// True iff every edge of g is monitored by some pair of M. Witnesses are
// filled for every monitored edge even when the overall answer is false.
// Requires a connected graph; M may be unsorted and may carry duplicates.
MegCheck is_meg_set(const Graph& g, const std::vector<int>& set);

// Vertices that belong to every MEG-set, by the local neighborhood test:
// v is mandatory iff it has a neighbor u such that every induced 2-path
// u-v-x closes into a 4-cycle (some w outside {u,v,x} adjacent to u and x).
// A neighbor u with no induced 2-path qualifies vacuously.
std::vector<int> mandatory_vertices(const Graph& g);

// Ground-truth mandatory vertices: v such that V minus {v} is not an
// MEG-set (supersets of MEG-sets are MEG-sets, so this is equivalent to
// membership in every MEG-set).
std::vector<int> mandatory_oracle(const Graph& g);

// Minimum MEG-set: the lexicographically least one, found by enumerating
// supersets of mandatory_vertices(g) in increasing size, lexicographic
// within a size. Guarded (guard_error when n > max_vertices).
MEGResult min_meg_exact(const Graph& g, int max_vertices = kExactSolveGuard);

// Decision variant: a minimum MEG-set when MEG(g) <= budget, nullopt
// otherwise. Stops as soon as the budget is exceeded.
std::optional<MEGResult> min_meg_exact(const Graph& g, int budget,
                                       int max_vertices);
std::optional<MEGResult> meg_decision(const Graph& g, int budget);

// Every minimum MEG-set, lexicographic. Full unpruned subset search, so it
// independently validates the mandatory-vertex characterization.
std::vector<std::vector<int>> enumerate_min_meg(const Graph& g,
                                                int max_vertices = kEnumerateGuard);

namespace detail {
// monitored_edges without revalidating connectivity; the caller guarantees
// a connected graph and distinct in-range endpoints.
EdgeSet monitored_edges_unchecked(const Graph& g, int u, int v);
}  // namespace detail

}  // namespace meg
