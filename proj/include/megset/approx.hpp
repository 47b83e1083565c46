#pragma once

#include <utility>
#include <vector>

#include "megset/monitor.hpp"

namespace meg {

// Set-cover view of MEG: the universe is the edge set, one candidate set per
// unordered vertex pair, holding the edges that pair monitors. Pairs are in
// lexicographic order; pairs monitoring nothing are retained.
struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::pair<int, int>> pair_keys;
  std::vector<EdgeSet> monitored;
};

struct GreedyCover {
  std::vector<std::pair<int, int>> chosen;  // in pick order
  EdgeSet covered;
};

// Requires a connected graph.
SetCoverInstance build_cover_instance(const Graph& g);

// Classic greedy: repeatedly pick the set covering the most uncovered
// elements, ties broken by lexicographically least pair; stops when the
// universe is covered. Throws invalid_input if it cannot be covered.
GreedyCover greedy_set_cover(const SetCoverInstance& inst);

// Greedy MEG approximation: endpoints of the greedy cover's chosen pairs.
// The result always passes is_meg_set; optimal is reported false.
MEGResult approx_meg(const Graph& g);

// Greedy set-cover ratio bound alpha: H_m for m < 3 (the ln ln term is
// undefined or negative there), ln m - ln ln m + 0.78 otherwise.
double greedy_ratio_alpha(int m);

// Certified size bound for the greedy MEG-set when the optimum is known:
// min(alpha * (opt - 1), sqrt(n * ln m)) * opt; 0 when m = 0.
double approx_ratio_bound(int n, int m, int opt);

// The optimum-free certified approximation factor sqrt(n * ln m), as
// reported by the CLI for greedy runs (0 when m <= 1).
double certified_factor(int n, int m);

}  // namespace meg
