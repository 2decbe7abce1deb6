#include "tautring/hilbbetti.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tautring {

std::vector<PoincarePolynomial> goettsche(const SurfaceBetti& surface, int n_max, int z_max) {
  if (n_max < 0) throw std::invalid_argument("goettsche: n_max must be non-negative");
  if (z_max < 0 || z_max > 4 * n_max) z_max = 4 * n_max;
  // series[n][z]: coefficient of t^n z^z in the signed product
  std::vector<std::vector<BigInt>> series(n_max + 1, std::vector<BigInt>(z_max + 1, 0));
  series[0][0] = 1;
  for (int k = 1; k <= n_max; ++k) {
    for (int i = 0; i <= 4; ++i) {
      const int a = 2 * k - 2 + i;
      if (a > z_max) continue;
      for (int rep = 0; rep < surface.b[i]; ++rep) {
        if (i % 2 == 0) {
          // divide by (1 - z^a t^k)
          for (int n = k; n <= n_max; ++n)
            for (int z = a; z <= z_max; ++z) series[n][z] += series[n - k][z - a];
        } else {
          // multiply by (1 - z^a t^k)
          for (int n = n_max; n >= k; --n)
            for (int z = z_max; z >= a; --z) series[n][z] -= series[n - k][z - a];
        }
      }
    }
  }
  std::vector<PoincarePolynomial> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const int top = std::min(4 * n, z_max);
    PoincarePolynomial p(series[n].begin(), series[n].begin() + top + 1);
    for (int z = 1; z <= top; z += 2) p[z] = -p[z];
    out.push_back(std::move(p));
  }
  return out;
}

int chi_zero(int d, int chi) {
  if (d < 3) throw std::invalid_argument("chi_zero: d must be at least 3");
  const int lo = -2 * d + 2;
  int r = ((chi - lo) % d + d) % d;
  return lo + r;
}

std::vector<int> chi_zero_candidates(int d, int chi) {
  if (d < 3) throw std::invalid_argument("chi_zero_candidates: d must be at least 3");
  std::vector<int> out;
  for (int c = -2 * d - 1; c <= -d + 1; ++c)
    if (((c - chi) % d + d) % d == 0) out.push_back(c);
  return out;
}

int hilbert_points(int d, int chi) { return d * (d - 3) / 2 - chi_zero(d, chi); }

BigInt moduli_betti(int d, int chi, int i) {
  if (d < 3) throw std::invalid_argument("moduli_betti: d must be at least 3");
  if (std::gcd(d, chi) != 1) throw std::invalid_argument("moduli_betti: gcd(d, chi) must be 1");
  if (i < 0 || i % 2 != 0 || i > 2 * d - 4)
    throw RangeError("moduli_betti: degree " + std::to_string(i) + " outside the even range 0.." +
                     std::to_string(2 * d - 4));
  const int n = hilbert_points(d, chi);
  return goettsche(SurfaceBetti::projective_plane(), n, i)[n][i];
}

}  // namespace tautring
