#include "megset/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace meg {

namespace {

constexpr int kMaxRetries = 10000;

// Seeded generator with portable derived draws. mt19937_64's raw stream is
// pinned by the standard; std::uniform_int_distribution is not, so bounded
// draws use rejection sampling on the raw stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [0, 1) with 53 bits.
  double unit() { return (eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

void need_params(const GenSpec& spec, std::size_t count) {
  if (spec.params.size() != count)
    throw invalid_input(std::string(family_name(spec.family)) + " takes " +
                        std::to_string(count) + " parameter(s), got " +
                        std::to_string(spec.params.size()));
}

Graph gen_path(int n) {
  if (n < 1) throw invalid_input("path requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph gen_cycle(int n) {
  if (n < 3) throw invalid_input("cycle requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph gen_complete(int n) {
  if (n < 1) throw invalid_input("complete requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

Graph gen_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw invalid_input("complete_bipartite requires a, b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, edges);
}

Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw invalid_input("grid requires rows, cols >= 1");
  std::vector<std::pair<int, int>> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph::from_edge_list(rows * cols, edges);
}

Graph gen_hypercube(int dim) {
  if (dim < 1 || dim > 24) throw invalid_input("hypercube requires 1 <= dim <= 24");
  int n = 1 << dim;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int d = 0; d < dim; ++d) {
      int w = v ^ (1 << d);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph::from_edge_list(n, edges);
}

Graph gen_random_connected(int n, int p_percent, std::uint64_t seed) {
  if (n < 1) throw invalid_input("random_connected requires n >= 1");
  if (p_percent < 1 || p_percent > 100)
    throw invalid_input("random_connected requires 1 <= p_percent <= 100");
  double p = p_percent / 100.0;
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.unit() < p) edges.emplace_back(i, j);
    Graph g = Graph::from_edge_list(n, edges);
    if (is_connected(g)) return g;
  }
  throw invalid_input("random_connected: no connected sample within retry budget");
}

Graph gen_random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw invalid_input("random_cubic requires even n >= 4");
  Rng rng(seed);
  std::vector<int> stubs(3 * n);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    for (int i = 0; i < 3 * n; ++i) stubs[i] = i / 3;
    for (int i = 3 * n - 1; i > 0; --i) {
      int j = static_cast<int>(rng.below(i + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::vector<std::pair<int, int>> edges;
    bool simple = true;
    for (int i = 0; i < 3 * n && simple; i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) {
        simple = false;
        break;
      }
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph::from_edge_list(n, edges);
  }
  throw invalid_input("random_cubic: no simple pairing within retry budget");
}

}  // namespace

Family family_from_name(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "grid") return Family::grid;
  if (name == "hypercube") return Family::hypercube;
  if (name == "random_connected") return Family::random_connected;
  if (name == "random_interval") return Family::random_interval;
  if (name == "random_cubic") return Family::random_cubic;
  throw invalid_input("unknown family: " + name);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::grid: return "grid";
    case Family::hypercube: return "hypercube";
    case Family::random_connected: return "random_connected";
    case Family::random_interval: return "random_interval";
    case Family::random_cubic: return "random_cubic";
  }
  return "?";
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::path:
      need_params(spec, 1);
      return gen_path(spec.params[0]);
    case Family::cycle:
      need_params(spec, 1);
      return gen_cycle(spec.params[0]);
    case Family::complete:
      need_params(spec, 1);
      return gen_complete(spec.params[0]);
    case Family::complete_bipartite:
      need_params(spec, 2);
      return gen_complete_bipartite(spec.params[0], spec.params[1]);
    case Family::grid:
      need_params(spec, 2);
      return gen_grid(spec.params[0], spec.params[1]);
    case Family::hypercube:
      need_params(spec, 1);
      return gen_hypercube(spec.params[0]);
    case Family::random_connected:
      need_params(spec, 2);
      return gen_random_connected(spec.params[0], spec.params[1], spec.seed);
    case Family::random_interval: {
      need_params(spec, 2);
      return graph_of_model(random_interval_model(spec.params[0], spec.params[1], spec.seed));
    }
    case Family::random_cubic:
      need_params(spec, 1);
      return gen_random_cubic(spec.params[0], spec.seed);
  }
  throw invalid_input("unknown family");
}

IntervalModel random_interval_model(int n, int span, std::uint64_t seed) {
  if (n < 0) throw invalid_input("random_interval_model requires n >= 0");
  if (span < 0) throw invalid_input("random_interval_model requires span >= 0");
  Rng rng(seed);
  IntervalModel model;
  model.intervals.reserve(n);
  for (int i = 0; i < n; ++i) {
    long long a = static_cast<long long>(rng.below(static_cast<std::uint64_t>(span) + 1));
    long long b = static_cast<long long>(rng.below(static_cast<std::uint64_t>(span) + 1));
    if (a > b) std::swap(a, b);
    model.intervals.emplace_back(a, b);
  }
  return model;
}

}  // namespace meg
