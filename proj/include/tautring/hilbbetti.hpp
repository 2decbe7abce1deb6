#pragma once

// Betti numbers of Hilbert schemes of points on a surface from the
// infinite-product generating function, and their transport to the
// moduli spaces M_{d,chi} in low degree.

#include <array>
#include <stdexcept>
#include <vector>

#include "tautring/exactalg.hpp"

namespace tautring {

/// Raised when a Betti number is requested outside the range where the
/// Hilbert scheme comparison applies.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct SurfaceBetti {
  std::array<int, 5> b{};

  static SurfaceBetti projective_plane() { return {{1, 0, 1, 0, 1}}; }
};

/// Betti numbers b_0 .. b_{4n} of S^[n] (unsigned, indexed by degree).
using PoincarePolynomial = std::vector<BigInt>;

/// Poincare polynomials of S^[n] for 0 <= n <= n_max. Entries above
/// cohomological degree z_max are dropped (z_max < 0 keeps all of them).
std::vector<PoincarePolynomial> goettsche(const SurfaceBetti& surface, int n_max, int z_max = -1);

/// Representative of chi mod d in [-2d+2, -d+1].
int chi_zero(int d, int chi);

/// All representatives of chi mod d in the wider window [-2d-1, -d+1].
/// More than one entry means the wider window is ambiguous for this pair.
std::vector<int> chi_zero_candidates(int d, int chi);

/// Number of points d(d-3)/2 - chi_0 of the comparison Hilbert scheme.
int hilbert_points(int d, int chi);

/// b_i(M_{d,chi}) for even 0 <= i <= 2d-4 via the Hilbert scheme of
/// hilbert_points(d, chi) points on P^2. Throws RangeError outside that
/// range and std::invalid_argument unless gcd(d, chi) = 1.
BigInt moduli_betti(int d, int chi, int i);

}  // namespace tautring
