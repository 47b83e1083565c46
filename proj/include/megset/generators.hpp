#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "megset/interval.hpp"

namespace meg {

// Instance families. Parameter conventions (all positive unless noted):
//   path n | cycle n (n >= 3) | complete n | complete_bipartite a b |
//   grid rows cols | hypercube dim | random_connected n p_percent |
//   random_interval n span | random_cubic n (n even >= 4)
enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  grid,
  hypercube,
  random_connected,
  random_interval,
  random_cubic,
};

struct GenSpec {
  Family family = Family::path;
  std::vector<int> params;
  std::uint64_t seed = 0;
};

Family family_from_name(const std::string& name);
const char* family_name(Family f);

// Deterministic for a fixed spec: same family, params, and seed always
// produce the identical graph (identical edge order included). Random
// families draw from a seeded mt19937_64 through uniform helpers that do
// not depend on the standard library's distribution implementations.
// random_connected retries G(n, p) until connected, up to 10,000 attempts;
// random_cubic retries a stub pairing until it is a simple graph.
Graph generate(const GenSpec& spec);

// n intervals with endpoints drawn uniformly from {0, ..., span}, each pair
// swapped into l <= r order.
IntervalModel random_interval_model(int n, int span, std::uint64_t seed);

}  // namespace meg
