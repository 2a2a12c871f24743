#pragma once

// Test-only oracles. Nothing here calls into the Pieri / Jacobi-Trudi /
// rim-hook code paths they are used to check.

#include <gw/rational.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Monomial = std::vector<int>;  // exponent vector in k variables
using Poly = std::map<Monomial, long long>;
using Shape = std::vector<int>;

/// Schur polynomial s_λ(x_1..x_k) by enumerating semistandard tableaux.
inline Poly schur_polynomial(const Shape& lambda, int k) {
  Poly out;
  if (static_cast<int>(lambda.size()) > k) return out;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  std::map<std::pair<int, int>, int> filling;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      Monomial m(k, 0);
      for (auto& [cell, v] : filling) ++m[v];
      ++out[m];
      return;
    }
    auto [r, c] = cells[i];
    int lo = 0;
    if (c > 0) lo = std::max(lo, filling[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, filling[{r - 1, c}] + 1);
    for (int v = lo; v < k; ++v) {
      filling[{r, c}] = v;
      rec(i + 1);
    }
    filling.erase({r, c});
  };
  rec(0);
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  std::erase_if(out, [](auto& kv) { return kv.second == 0; });
  return out;
}

/// Expands a symmetric polynomial in Schur polynomials by peeling off the
/// lexicographically largest monomial.
inline std::map<Shape, long long> schur_expand(Poly p, int k) {
  std::map<Shape, long long> out;
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    Shape nu(lead->first.begin(), lead->first.end());
    while (!nu.empty() && nu.back() == 0) nu.pop_back();
    long long c = lead->second;
    out[nu] += c;
    for (auto& [m, v] : schur_polynomial(nu, k)) {
      p[m] -= c * v;
      if (p[m] == 0) p.erase(m);
    }
  }
  return out;
}

/// Littlewood-Richardson coefficients in k variables.
inline std::map<Shape, long long> lr_product(const Shape& a, const Shape& b, int k) {
  return schur_expand(multiply(schur_polynomial(a, k), schur_polynomial(b, k)), k);
}

/// Plane curve counts from the recursion, coded independently in int64:
/// N_d = Σ N_a N_b [a^2 b^2 C(3d-4, 3a-2) - a^3 b C(3d-4, 3a-1)].
inline std::vector<long long> plane_curve_counts(int max_d) {
  auto choose = [](long long n, long long r) -> long long {
    if (r < 0 || r > n) return 0;
    long long res = 1;
    for (long long i = 1; i <= r; ++i) {
      res = res * (n - r + i) / i;
    }
    return res;
  };
  std::vector<long long> N(max_d + 1, 0);
  N[1] = 1;
  for (int d = 2; d <= max_d; ++d) {
    long long sum = 0;
    for (int a = 1; a < d; ++a) {
      int b = d - a;
      sum += N[a] * N[b] *
             (1LL * a * a * b * b * choose(3 * d - 4, 3 * a - 2) - 1LL * a * a * a * b * choose(3 * d - 4, 3 * a - 1));
    }
    N[d] = sum;
  }
  return N;
}

/// Set partitions of {0..n-1} as block lists, by restricted growth strings.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      std::vector<std::vector<int>> p(blocks);
      for (int j = 0; j < n; ++j) p[rgs[j]].push_back(j);
      out.push_back(p);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) out.push_back({});
  else rec(0, 0);
  return out;
}

}  // namespace oracle
