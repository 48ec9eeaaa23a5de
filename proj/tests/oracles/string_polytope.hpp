#pragma once

// The string polytope straight from the long word: n_k is bounded by
// <lam - sum_{l>k} n_l alpha_{i_l}, alpha_{i_k}^vee>, strings listed in the
// order of the word.

#include <functional>

#include "lie.hpp"

namespace oracle {

// 1-based letters.
inline Vec long_word(char family, int r) {
  Vec w;
  for (int k = 1; k <= r; ++k) {
    switch (family) {
      case 'A':
        for (int j = k; j >= 1; --j) w.push_back(j);
        break;
      case 'B':
      case 'C':
        for (int j = k; j >= 1; --j) w.push_back(j);
        for (int j = 2; j <= k; ++j) w.push_back(j);
        break;
      case 'D':
        if (k <= 2) {
          w.push_back(k);
          break;
        }
        for (int j = k; j >= 3; --j) w.push_back(j);
        w.push_back(1);
        w.push_back(2);
        for (int j = 3; j <= k; ++j) w.push_back(j);
        break;
    }
  }
  return w;
}

// Every string satisfying the upper bounds; keep(s) filters (e.g. the cone).
inline std::vector<Vec> bounded_strings(const Lie& L, const Vec& lam, const std::function<bool(const Vec&)>& keep) {
  const Vec word = long_word(L.family, L.r);
  const int N = static_cast<int>(word.size());
  std::vector<Vec> out;
  Vec s(N, 0);
  // cur = lam - sum_{l>k} n_l alpha_{i_l}, in fundamental coordinates
  std::function<void(int, Vec)> rec = [&](int k, Vec cur) {
    if (k < 0) {
      if (keep(s)) out.push_back(s);
      return;
    }
    const int i = word[k] - 1;
    for (int n = 0; n <= cur[i]; ++n) {
      s[k] = n;
      Vec next = cur;
      for (int j = 0; j < L.r; ++j) next[j] -= n * L.C[i][j];
      rec(k - 1, next);
    }
    s[k] = 0;
  };
  rec(N - 1, lam);
  return out;
}

}  // namespace oracle
