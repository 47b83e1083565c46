#pragma once

#include <vector>

#include "megset/monitor.hpp"

namespace meg {

// Vertex-cover-to-MEG instance. For an input graph g on n vertices the
// instance ghat keeps a copy of g on 0..n-1 (roles U) and adds, per vertex
// i: a pendant path i - (n+i) - (2n+i) (roles U', U''); a hub x = 3n
// adjacent to every U' vertex; a hub y = 3n+1 adjacent to every U vertex;
// and a pendant y* = 3n+2 on y. So ghat has 3n+3 vertices and m+4n+1 edges,
// and g has a vertex cover of size <= k iff MEG(ghat) <= k + n + 1.
enum class GadgetRole { U, UPrime, UDoublePrime, X, Y, YStar };

const char* role_name(GadgetRole r);  // "U", "U'", "U''", "x", "y", "y*"

struct GadgetMap {
  Graph ghat;
  std::vector<GadgetRole> roles;  // by ghat vertex id
  std::vector<int> back_map;      // ghat U-vertex -> original id, else -1
};

// Requires n >= 2. Edge ids: the m copied edges first (original order),
// then groups i-(n+i), (n+i)-(2n+i), (n+i)-x, i-y for i = 0..n-1, then y-y*.
GadgetMap vc_gadget(const Graph& g);

// Lexicographically least minimum vertex cover via size-increasing
// lexicographic subset search. Guarded.
std::vector<int> min_vertex_cover_exact(const Graph& g, int max_vertices = 20);

// Extracts a vertex cover of the original graph from an MEG-set of
// map.ghat: the U-vertices of the set, mapped back. Rejects sets failing
// is_meg_set verification.
std::vector<int> vc_from_meg(const GadgetMap& map, const std::vector<int>& set);

// n/2 + 1, the vertex-cover lower bound valid for connected cubic
// non-bipartite graphs. Rejects inputs that are not cubic or are bipartite.
int cubic_vc_lower_bound(const Graph& g);

}  // namespace meg
