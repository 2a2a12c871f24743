#pragma once

// Schubert calculus on Gr(k, n): classical products by iterated Pieri
// expansion through the Jacobi-Trudi determinant, and small quantum products
// by n-rim-hook reduction of products computed in k-variable symmetric
// functions.

#include <gw/error.hpp>
#include <gw/rational.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace gw::schubert {

/// Weakly decreasing positive parts; the empty vector is the empty partition.
using Young = std::vector<int>;
/// Integer linear combination of Schur functions.
using SchurSum = std::map<Young, BigInt>;

inline int size(const Young& y) { return std::accumulate(y.begin(), y.end(), 0); }

inline bool is_partition(const Young& y) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] <= 0) return false;
    if (i > 0 && y[i] > y[i - 1]) return false;
  }
  return true;
}

inline bool fits(const Young& y, int rows, int cols) {
  return static_cast<int>(y.size()) <= rows && (y.empty() || y.front() <= cols);
}

inline void trim(Young& y) {
  while (!y.empty() && y.back() == 0) y.pop_back();
}

/// Every ν with ν/λ a horizontal strip of j boxes and at most max_rows rows.
inline std::vector<Young> pieri(const Young& lambda, int j, int max_rows) {
  std::vector<Young> out;
  if (j < 0) return out;
  if (static_cast<int>(lambda.size()) > max_rows) return out;
  Young base(lambda);
  base.resize(max_rows, 0);
  Young cur(base);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == max_rows) {
      if (left == 0) {
        Young nu(cur);
        trim(nu);
        out.push_back(std::move(nu));
      }
      return;
    }
    int cap = row == 0 ? left : std::min(left, base[row - 1] - base[row]);
    for (int a = 0; a <= cap; ++a) {
      cur[row] = base[row] + a;
      rec(row + 1, left - a);
    }
    cur[row] = base[row];
  };
  rec(0, j);
  return out;
}

/// s_λ · s_μ restricted to partitions with at most max_rows rows.
inline SchurSum product(const Young& lambda, const Young& mu, int max_rows) {
  SchurSum result;
  if (static_cast<int>(lambda.size()) > max_rows || static_cast<int>(mu.size()) > max_rows)
    return result;
  const int len = static_cast<int>(mu.size());
  std::vector<int> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  // s_μ = det[h_{μ_i - i + σ(i)}]; expand over permutations.
  do {
    int inversions = 0;
    for (int a = 0; a < len; ++a)
      for (int b = a + 1; b < len; ++b)
        if (perm[a] > perm[b]) ++inversions;
    std::vector<int> parts;
    bool dead = false;
    for (int i = 0; i < len; ++i) {
      int idx = mu[i] - i + perm[i];
      if (idx < 0) {
        dead = true;
        break;
      }
      if (idx > 0) parts.push_back(idx);
    }
    if (dead) continue;
    SchurSum acc{{lambda, BigInt(inversions % 2 ? -1 : 1)}};
    for (int h : parts) {
      SchurSum next;
      for (const auto& [shape, c] : acc)
        for (auto& nu : pieri(shape, h, max_rows)) next[nu] += c;
      acc = std::move(next);
    }
    for (const auto& [shape, c] : acc) result[shape] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
  return result;
}

/// Classical product σ_λ ∪ σ_μ in H*(Gr(k, n)).
inline SchurSum classical_product(const Young& lambda, const Young& mu, int k, int n) {
  SchurSum out = product(lambda, mu, k);
  std::erase_if(out, [&](const auto& kv) { return !fits(kv.first, k, n - k); });
  return out;
}

struct RimHookResult {
  bool survives = false;
  Young core;
  int q_power = 0;
  int sign = 1;
};

/// Removes n-rim hooks from ν (at most k rows) until it fits the k x (n-k)
/// rectangle. Works on beta numbers ν_i + k - i; each removal lowers one beta
/// number by n and contributes (-1)^(k - height).
inline RimHookResult rim_hook_reduce(const Young& nu, int k, int n) {
  RimHookResult r;
  if (static_cast<int>(nu.size()) > k) return r;
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = (i < static_cast<int>(nu.size()) ? nu[i] : 0) + k - 1 - i;
  auto current = [&] {
    std::vector<int> b(beta);
    std::sort(b.rbegin(), b.rend());
    Young y(k);
    for (int i = 0; i < k; ++i) y[i] = b[i] - (k - 1 - i);
    trim(y);
    return y;
  };
  Young y = current();
  while (!fits(y, k, n - k)) {
    bool removed = false;
    std::set<int> occupied(beta.begin(), beta.end());
    for (int& b : beta) {
      int target = b - n;
      if (target < 0 || occupied.count(target)) continue;
      int between = 0;
      for (int other : beta)
        if (other > target && other < b) ++between;
      int height = between + 1;
      if ((k - height) % 2) r.sign = -r.sign;
      b = target;
      ++r.q_power;
      removed = true;
      break;
    }
    if (!removed) return RimHookResult{};
    y = current();
  }
  r.survives = true;
  r.core = y;
  return r;
}

/// Small quantum product in QH*(Gr(k, n)): map q-power -> (partition -> coefficient).
inline std::map<int, SchurSum> quantum_product(const Young& lambda, const Young& mu, int k, int n) {
  if (!is_partition(lambda) || !is_partition(mu) || !fits(lambda, k, n - k) || !fits(mu, k, n - k))
    fail(ErrorKind::Parameter, "partition does not fit the Grassmannian rectangle");
  std::map<int, SchurSum> out;
  for (const auto& [nu, c] : product(lambda, mu, k)) {
    RimHookResult red = rim_hook_reduce(nu, k, n);
    if (!red.survives) continue;
    out[red.q_power][red.core] += c * red.sign;
  }
  for (auto& [d, sum] : out) std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  for (const auto& [d, sum] : out)
    for (const auto& [shape, c] : sum)
      if (c < 0) fail(ErrorKind::Internal, "negative quantum structure constant");
  return out;
}

/// Partitions inside the rows x cols rectangle, by size then reverse
/// lexicographic order.
inline std::vector<Young> partitions_in_box(int rows, int cols) {
  std::vector<Young> all;
  Young cur;
  std::function<void(int)> rec = [&](int max_part) {
    all.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = max_part; p >= 1; --p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(cols);
  std::stable_sort(all.begin(), all.end(), [](const Young& a, const Young& b) {
    int sa = size(a), sb = size(b);
    if (sa != sb) return sa < sb;
    return a > b;
  });
  return all;
}

inline Young complement(const Young& y, int rows, int cols) {
  Young c(rows);
  for (int i = 0; i < rows; ++i) {
    int yi = rows - 1 - i < static_cast<int>(y.size()) ? y[rows - 1 - i] : 0;
    c[i] = cols - yi;
  }
  trim(c);
  return c;
}

}  // namespace gw::schubert
