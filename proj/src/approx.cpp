#include "megset/approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace meg {

SetCoverInstance build_cover_instance(const Graph& g) {
  require_connected(g);
  const int n = g.vertex_count();
  SetCoverInstance inst;
  inst.universe_size = g.edge_count();
  inst.pair_keys.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  inst.monitored.reserve(inst.pair_keys.capacity());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      inst.pair_keys.emplace_back(a, b);
      inst.monitored.push_back(detail::monitored_edges_unchecked(g, a, b));
    }
  }
  return inst;
}

GreedyCover greedy_set_cover(const SetCoverInstance& inst) {
  GreedyCover out;
  out.covered = EdgeSet(inst.universe_size);
  while (out.covered.size() < inst.universe_size) {
    int best = -1, best_gain = 0;
    for (std::size_t i = 0; i < inst.monitored.size(); ++i) {
      int gain = inst.monitored[i].count_not_in(out.covered);
      if (gain > best_gain) {  // strict: first maximum is the lex-least pair
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) throw invalid_input("set-cover universe is not coverable");
    out.covered |= inst.monitored[best];
    out.chosen.push_back(inst.pair_keys[best]);
  }
  return out;
}

MEGResult approx_meg(const Graph& g) {
  SetCoverInstance inst = build_cover_instance(g);
  GreedyCover cover = greedy_set_cover(inst);
  std::vector<int> set;
  set.reserve(cover.chosen.size() * 2);
  for (auto [a, b] : cover.chosen) {
    set.push_back(a);
    set.push_back(b);
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  MegCheck chk = is_meg_set(g, set);
  if (!chk.ok) throw error("greedy cover endpoints fail MEG verification");
  MEGResult res;
  res.meg = std::move(set);
  res.size = static_cast<int>(res.meg.size());
  res.optimal = false;
  res.method = SolveMethod::greedy;
  res.witnesses = std::move(chk.witnesses);
  return res;
}

double greedy_ratio_alpha(int m) {
  if (m < 1) throw invalid_input("alpha requires m >= 1");
  if (m < 3) {
    double h = 0.0;
    for (int i = 1; i <= m; ++i) h += 1.0 / i;
    return h;
  }
  return std::log(m) - std::log(std::log(m)) + 0.78;
}

double approx_ratio_bound(int n, int m, int opt) {
  if (n < 1 || m < 0) throw invalid_input("approx_ratio_bound requires n >= 1, m >= 0");
  if (m == 0) return 0.0;
  if (opt < 1) throw invalid_input("approx_ratio_bound requires opt >= 1");
  double alpha = greedy_ratio_alpha(m);
  double lhs = alpha * (opt - 1);
  double rhs = std::sqrt(static_cast<double>(n) * std::log(m));
  return std::min(lhs, rhs) * opt;
}

double certified_factor(int n, int m) {
  if (n < 1 || m < 0) throw invalid_input("certified_factor requires n >= 1, m >= 0");
  if (m <= 1) return 0.0;
  return std::sqrt(static_cast<double>(n) * std::log(m));
}

}  // namespace meg
