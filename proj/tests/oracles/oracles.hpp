#pragma once

// Deliberately naive reference implementations used only by the tests.

#include <functional>
#include <map>
#include <vector>

#include "tautring/gradedring.hpp"

namespace oracle {

// Degree-ell part of prod_i (1 + x_i), by multiplying out the factors.
template <class K>
tautring::AlgebraElement<K> elementary_by_expansion(const std::vector<tautring::AlgebraElement<K>>& roots, int ell) {
  using El = tautring::AlgebraElement<K>;
  const auto& ctx = roots.front().context();
  El prod = El::constant(ctx, K(1));
  for (const auto& x : roots) prod = prod * (El::constant(ctx, K(1)) + x);
  return tautring::homogeneous_part(prod, ell);
}

// Poincare polynomials of Hilb^n(S) for n <= n_max: multiply out the
// factors (1 - z^{2k-2+i} t^k)^{(-1)^{i+1} b_i} one at a time, each
// expanded as a geometric or binomial series, on a dense (n, z) grid.
inline std::vector<std::vector<long long>> goettsche_naive(const std::vector<int>& b, int n_max) {
  const int z_max = 4 * n_max;
  using Grid = std::vector<std::vector<long long>>;
  Grid series(n_max + 1, std::vector<long long>(z_max + 1, 0));
  series[0][0] = 1;
  auto multiply = [&](const Grid& f) {
    Grid out(n_max + 1, std::vector<long long>(z_max + 1, 0));
    for (int a = 0; a <= n_max; ++a)
      for (int za = 0; za <= z_max; ++za) {
        if (series[a][za] == 0) continue;
        for (int c = 0; a + c <= n_max; ++c)
          for (int zc = 0; za + zc <= z_max; ++zc) out[a + c][za + zc] += series[a][za] * f[c][zc];
      }
    series = out;
  };
  for (int k = 1; k <= n_max; ++k) {
    for (int i = 0; i <= 4; ++i) {
      for (int rep = 0; rep < b[i]; ++rep) {
        const int zpow = 2 * k - 2 + i;
        Grid f(n_max + 1, std::vector<long long>(z_max + 1, 0));
        if (i % 2 == 1) {
          // (1 - z^a t^k)^{+1}
          f[0][0] = 1;
          if (k <= n_max && zpow <= z_max) f[k][zpow] = -1;
        } else {
          // (1 - z^a t^k)^{-1} = sum_m z^{am} t^{km}
          for (int m = 0; k * m <= n_max && zpow * m <= z_max; ++m) f[k * m][zpow * m] = 1;
        }
        multiply(f);
      }
    }
  }
  // P(z) = sum (-1)^i b_i z^i, so b_i = (-1)^i coefficient
  for (auto& row : series)
    for (std::size_t i = 0; i < row.size(); ++i)
      if (i % 2 == 1) row[i] = -row[i];
  return series;
}

// Number of multisets of generators (given by their degrees) with total
// degree `target`, by recursive exponent-vector enumeration.
inline long long count_monomials_brute(const std::vector<int>& generator_degrees, int target) {
  std::function<long long(std::size_t, int)> rec = [&](std::size_t idx, int remaining) -> long long {
    if (remaining == 0) return 1;
    if (idx == generator_degrees.size()) return 0;
    long long total = 0;
    for (int e = 0; e * generator_degrees[idx] <= remaining; ++e)
      total += rec(idx + 1, remaining - e * generator_degrees[idx]);
    return total;
  };
  return rec(0, target);
}

// Partition numbers p(0..n).
inline std::vector<long long> partition_numbers(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p;
}

}  // namespace oracle
