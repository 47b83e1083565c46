#include <doctest.h>

#include <algorithm>

#include "megset/generators.hpp"
#include "megset/monitor.hpp"
#include "oracles.hpp"

using meg::Graph;
using meg::MonitorMethod;

namespace {

std::vector<int> both_methods(const Graph& g, int u, int v) {
  auto b = meg::monitored_edges(g, u, v, MonitorMethod::bridge);
  auto r = meg::monitored_edges(g, u, v, MonitorMethod::removal);
  CHECK(b == r);
  return b.to_vector();
}

Graph random_connected(int n, int p_percent, std::uint64_t seed) {
  return meg::generate({meg::Family::random_connected, {n, p_percent}, seed});
}

}  // namespace

TEST_CASE("monitored_edges fixed values") {
  Graph p4 = oracle::path_graph(4);
  CHECK(both_methods(p4, 0, 3) == std::vector<int>{0, 1, 2});
  Graph c4 = oracle::cycle_graph(4);
  CHECK(both_methods(c4, 0, 1) == std::vector<int>{0});
  CHECK(both_methods(c4, 0, 2).empty());  // two edge-disjoint shortest routes
  CHECK(both_methods(c4, 1, 3).empty());
  Graph k3 = oracle::complete_graph(3);
  CHECK(both_methods(k3, 0, 1) == std::vector<int>{0});
}

TEST_CASE("monitored_edges rejects bad input") {
  Graph p3 = oracle::path_graph(3);
  CHECK_THROWS_AS(meg::monitored_edges(p3, 0, 0), meg::invalid_input);
  CHECK_THROWS_AS(meg::monitored_edges(p3, 0, 3), meg::invalid_input);
  Graph split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(meg::monitored_edges(split, 0, 1), meg::invalid_input);
}

TEST_CASE("bridge and removal methods agree and match the path oracle") {
  // Exhaustive over all connected labeled graphs n <= 5.
  for (int n = 2; n <= 5; ++n) {
    int bits = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
      Graph g = oracle::mask_graph(n, mask);
      if (!oracle::connected_by_scan(g)) continue;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          CHECK(both_methods(g, u, v) == oracle::brute_monitored_edges(g, u, v));
    }
  }
  // Random connected graphs up to n = 12 (oracle only used where feasible).
  for (int s = 0; s < 40; ++s) {
    int n = 6 + s % 7;
    Graph g = random_connected(n, 25 + (s % 5) * 15, oracle::mix(6100 + s));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        auto ids = both_methods(g, u, v);
        if (n <= 8) CHECK(ids == oracle::brute_monitored_edges(g, u, v));
      }
  }
}

TEST_CASE("every edge is monitored by its own endpoints") {
  for (int s = 0; s < 50; ++s) {
    int n = 3 + s % 8;
    Graph g = random_connected(n, 30 + (s % 4) * 20, oracle::mix(7000 + s));
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      CHECK(meg::monitored_edges(g, u, v).contains(e));
    }
  }
}

TEST_CASE("is_meg_set fixed values") {
  Graph p3 = oracle::path_graph(3);
  CHECK(meg::is_meg_set(p3, {0, 2}).ok);
  CHECK_FALSE(meg::is_meg_set(p3, {0, 1}).ok);
  CHECK(meg::is_meg_set(p3, {2, 0, 2}).ok);  // duplicates tolerated

  Graph c4 = oracle::cycle_graph(4);
  CHECK(meg::is_meg_set(c4, {0, 1, 2, 3}).ok);
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> three;
    for (int v = 0; v < 4; ++v)
      if (v != skip) three.push_back(v);
    CHECK_FALSE(meg::is_meg_set(c4, three).ok);
  }

  Graph k1 = Graph::from_edge_list(1, {});
  CHECK(meg::is_meg_set(k1, {}).ok);  // nothing to monitor

  CHECK_THROWS_AS(meg::is_meg_set(p3, {0, 5}), meg::invalid_input);
  Graph split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(meg::is_meg_set(split, {0, 1, 2, 3}), meg::invalid_input);
}

TEST_CASE("is_meg_set witnesses use the first monitoring pair in pair order") {
  Graph p4 = oracle::path_graph(4);
  auto chk = meg::is_meg_set(p4, {0, 3});
  REQUIRE(chk.ok);
  for (int e = 0; e < 3; ++e) {
    REQUIRE(chk.witnesses.by_edge[e].has_value());
    CHECK(*chk.witnesses.by_edge[e] == std::make_pair(0, 3));
  }

  Graph star = oracle::star_graph(3);
  auto chk2 = meg::is_meg_set(star, {1, 2, 3});
  REQUIRE(chk2.ok);
  CHECK(*chk2.witnesses.by_edge[0] == std::make_pair(1, 2));
  CHECK(*chk2.witnesses.by_edge[1] == std::make_pair(1, 2));
  CHECK(*chk2.witnesses.by_edge[2] == std::make_pair(1, 3));

  // Failing check still reports witnesses for the monitored part.
  Graph p3 = oracle::path_graph(3);
  auto chk3 = meg::is_meg_set(p3, {0, 1});
  CHECK_FALSE(chk3.ok);
  CHECK(chk3.witnesses.by_edge[0].has_value());
  CHECK_FALSE(chk3.witnesses.by_edge[1].has_value());
}

TEST_CASE("is_meg_set agrees with the brute oracle and is monotone") {
  for (int s = 0; s < 60; ++s) {
    int n = 3 + s % 5;  // n <= 7
    Graph g = random_connected(n, 30 + (s % 4) * 18, oracle::mix(8300 + s));
    std::uint64_t r = oracle::mix(77 * s + 5);
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
      if ((r >> v) & 1) set.push_back(v);
    bool got = meg::is_meg_set(g, set).ok;
    CHECK(got == oracle::brute_is_meg_set(g, set));
    if (got) {
      std::vector<int> bigger(set);
      for (int v = 0; v < n; ++v)
        if (!std::count(bigger.begin(), bigger.end(), v)) {
          bigger.push_back(v);
          break;
        }
      CHECK(meg::is_meg_set(g, bigger).ok);  // supersets stay MEG-sets
    }
    std::vector<int> everything(n);
    for (int v = 0; v < n; ++v) everything[v] = v;
    CHECK(meg::is_meg_set(g, everything).ok);  // V(G) always monitors
  }
}

TEST_CASE("mandatory_vertices fixed values") {
  CHECK(meg::mandatory_vertices(oracle::complete_graph(3)) == std::vector<int>{0, 1, 2});
  CHECK(meg::mandatory_vertices(oracle::path_graph(3)) == std::vector<int>{0, 2});
  CHECK(meg::mandatory_vertices(oracle::path_graph(4)) == std::vector<int>{0, 3});
  CHECK(meg::mandatory_vertices(oracle::cycle_graph(4)) == std::vector<int>{0, 1, 2, 3});
  CHECK(meg::mandatory_vertices(oracle::cycle_graph(5)).empty());
  CHECK(meg::mandatory_vertices(oracle::star_graph(3)) == std::vector<int>{1, 2, 3});
  CHECK(meg::mandatory_vertices(Graph::from_edge_list(1, {})).empty());
}

TEST_CASE("mandatory_vertices equals the deletion oracle") {
  // Exhaustive over all connected labeled graphs n <= 5.
  for (int n = 1; n <= 5; ++n) {
    int bits = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
      Graph g = oracle::mask_graph(n, mask);
      if (!oracle::connected_by_scan(g)) continue;
      CHECK(meg::mandatory_vertices(g) == meg::mandatory_oracle(g));
    }
  }
  for (int s = 0; s < 50; ++s) {
    int n = 6 + s % 5;  // n <= 10
    Graph g = random_connected(n, 25 + (s % 5) * 15, oracle::mix(9900 + s));
    CHECK(meg::mandatory_vertices(g) == meg::mandatory_oracle(g));
  }
}

TEST_CASE("min_meg_exact fixed values") {
  auto p3 = meg::min_meg_exact(oracle::path_graph(3));
  CHECK(p3.meg == std::vector<int>{0, 2});
  CHECK(p3.size == 2);
  CHECK(p3.optimal);
  CHECK(p3.method == meg::SolveMethod::exact);

  CHECK(meg::min_meg_exact(oracle::path_graph(4)).meg == std::vector<int>{0, 3});
  CHECK(meg::min_meg_exact(oracle::cycle_graph(4)).meg == std::vector<int>{0, 1, 2, 3});
  CHECK(meg::min_meg_exact(oracle::cycle_graph(5)).meg == std::vector<int>{0, 1, 3});
  CHECK(meg::min_meg_exact(oracle::complete_graph(5)).size == 5);
  CHECK(meg::min_meg_exact(oracle::star_graph(3)).meg == std::vector<int>{1, 2, 3});

  auto k1 = meg::min_meg_exact(Graph::from_edge_list(1, {}));
  CHECK(k1.meg.empty());
  CHECK(k1.size == 0);
  CHECK(k1.optimal);
}

TEST_CASE("min_meg_exact result is minimum and lexicographically least") {
  for (int s = 0; s < 30; ++s) {
    int n = 3 + s % 5;  // n <= 7: brute subset check affordable
    Graph g = random_connected(n, 30 + (s % 4) * 18, oracle::mix(11000 + s));
    auto res = meg::min_meg_exact(g);
    CHECK(oracle::brute_is_meg_set(g, res.meg));
    // No strictly smaller subset works, and no equal-size subset precedes it.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> sub;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) sub.push_back(v);
      if (static_cast<int>(sub.size()) < res.size)
        CHECK_FALSE(oracle::brute_is_meg_set(g, sub));
      else if (static_cast<int>(sub.size()) == res.size && sub < res.meg)
        CHECK_FALSE(oracle::brute_is_meg_set(g, sub));
    }
  }
}

TEST_CASE("min_meg_exact guard and budget") {
  Graph p21 = oracle::path_graph(21);
  CHECK_THROWS_AS(meg::min_meg_exact(p21), meg::guard_error);
  CHECK(meg::min_meg_exact(p21, 25).meg == std::vector<int>{0, 20});

  Graph p3 = oracle::path_graph(3);
  CHECK_FALSE(meg::meg_decision(p3, 1).has_value());
  auto yes = meg::meg_decision(p3, 2);
  REQUIRE(yes.has_value());
  CHECK(yes->meg == std::vector<int>{0, 2});
  auto slack = meg::meg_decision(p3, 3);  // still reports the minimum
  REQUIRE(slack.has_value());
  CHECK(slack->size == 2);
  CHECK_FALSE(meg::meg_decision(oracle::cycle_graph(4), 3).has_value());
  CHECK(meg::meg_decision(Graph::from_edge_list(1, {}), 0).has_value());
  CHECK_THROWS_AS(meg::meg_decision(p3, -1), meg::invalid_input);
  CHECK_THROWS_AS(meg::min_meg_exact(p21, 2, meg::kExactSolveGuard), meg::guard_error);
}

TEST_CASE("enumerate_min_meg fixed values") {
  CHECK(meg::enumerate_min_meg(oracle::path_graph(3)) ==
        std::vector<std::vector<int>>{{0, 2}});
  CHECK(meg::enumerate_min_meg(oracle::cycle_graph(4)) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(meg::enumerate_min_meg(oracle::path_graph(2)) ==
        std::vector<std::vector<int>>{{0, 1}});
  CHECK(meg::enumerate_min_meg(Graph::from_edge_list(1, {})) ==
        std::vector<std::vector<int>>{{}});
  CHECK(meg::enumerate_min_meg(oracle::cycle_graph(5)).size() == 5);  // rotations
  CHECK_THROWS_AS(meg::enumerate_min_meg(oracle::path_graph(15)), meg::guard_error);
}

TEST_CASE("enumerate_min_meg consistency with the exact solver") {
  for (int s = 0; s < 25; ++s) {
    int n = 3 + s % 7;  // n <= 9
    Graph g = random_connected(n, 25 + (s % 5) * 15, oracle::mix(13000 + s));
    auto res = meg::min_meg_exact(g);
    auto all = meg::enumerate_min_meg(g);
    REQUIRE(!all.empty());
    CHECK(all.front() == res.meg);  // solver reports the lex-least minimum
    CHECK(std::is_sorted(all.begin(), all.end()));
    auto mand = meg::mandatory_vertices(g);
    for (const auto& set : all) {
      CHECK(static_cast<int>(set.size()) == res.size);
      CHECK(std::includes(set.begin(), set.end(), mand.begin(), mand.end()));
      CHECK(meg::is_meg_set(g, set).ok);
    }
  }
}
