#pragma once

#include <vector>

namespace meg::detail {

// Calls fn(combo) for every k-subset of items in lexicographic order, where
// combo is sorted and items must be sorted. fn returns true to stop early;
// the function returns true iff a call stopped the enumeration.
template <class F>
bool for_each_combination(const std::vector<int>& items, int k, F&& fn) {
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> combo(k);
  while (true) {
    for (int i = 0; i < k; ++i) combo[i] = items[idx[i]];
    if (fn(const_cast<const std::vector<int>&>(combo))) return true;
    if (k == 0) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace meg::detail
