#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "megset/monitor.hpp"

namespace meg {

// Closed intervals with integer endpoints; interval i spans [l, r] with
// l <= r. Vertex i of the derived graph is interval i; touching endpoints
// count as intersecting.
struct IntervalModel {
  std::vector<std::pair<long long, long long>> intervals;

  int size() const { return static_cast<int>(intervals.size()); }
};

// Intersection graph of the model: edge (i, j) iff
// max(l_i, l_j) <= min(r_i, r_j). Rejects intervals with l > r.
Graph graph_of_model(const IntervalModel& model);

// Maximum pairwise distance within S; 0 when |S| <= 1, nullopt (infinite)
// when some pair of S is disconnected.
std::optional<int> set_diameter(const Graph& g, const std::vector<int>& set);

// Diameter test: true iff the neighborhood of v stays within distance 4 in
// g minus v. Characterizes mandatory vertices exactly on connected interval
// graphs with at least one edge; on other graphs it is only an implied
// (necessary) condition of being mandatory, so interpret with care.
bool is_mandatory_interval(const Graph& g, int v);

// Minimum MEG-set of a connected interval graph: exactly the vertices
// passing the diameter test, which is the unique minimum. The result is
// re-verified with is_meg_set, so a non-interval input that slips through
// fails loudly rather than returning a non-monitoring set. On the edgeless
// singleton the empty set is returned, matching the exact solver.
MEGResult interval_min_meg(const Graph& g);

// Same, but first validates that the model's intersection graph equals g.
MEGResult interval_min_meg(const Graph& g, const IntervalModel& model);

}  // namespace meg
