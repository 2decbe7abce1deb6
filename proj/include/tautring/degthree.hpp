#pragma once

// The case d = 3: M_{3,-1} is the universal plane cubic, a P^8-bundle over
// P^2. Chern characters of the universal family on P^2 x M, the
// normalization class, the tautological classes and the presentation of
// the Chow ring by c_0(2) and c_2(0).

#include <map>
#include <utility>
#include <vector>

#include "tautring/exactalg.hpp"
#include "tautring/gradedring.hpp"

namespace tautring::degthree {

using El = AlgebraElement<BigRational>;

/// A*(P^2) tensor Q[H1, H2]/(H1^3, H2^9 - 3 H1 H2^8 + 9 H1^2 H2^7), where H
/// is the line class on the first factor and H2 = xi is the relative
/// hyperplane class.
class TripleProductRing {
 public:
  TripleProductRing();

  const ContextPtr& context() const { return ctx_; }
  const El& H() const { return h_; }
  const El& H1() const { return h1_; }
  const El& H2() const { return h2_; }
  El constant(const BigRational& c) const { return El::constant(ctx_, c); }

  /// Presentation of the whole product ring (variables H, H1, H2).
  const QuotientPresentation<BigRational>& presentation() const { return full_; }
  /// Presentation of A*(M) alone (variables H1, H2).
  const QuotientPresentation<BigRational>& moduli_presentation() const { return moduli_; }

  El reduce(const El& x) const { return normal_form(x, full_); }

  /// pi_M*(H^j . x): the coefficient of H^{2-j}, as a class in H1, H2.
  El integrate(const El& x, int j) const;

  /// Top degree of A*(M).
  static constexpr int moduli_dimension = 10;

 private:
  ContextPtr ctx_;
  El h_, h1_, h2_;
  QuotientPresentation<BigRational> full_;
  QuotientPresentation<BigRational> moduli_;
};

struct GrrClasses {
  El ch_OV;
  El ch_OW;
  El ch_F;
};

/// Chern characters through total degree 4. ch(O_V) = 1 - exp(-(3H + H2));
/// ch(O_W) = [W] td(T_P2)^{-1} with [W] = H^2 + H H1 + H1^2 the class of
/// the graph of M -> P^2.
GrrClasses grr_classes(const TripleProductRing& ring);

/// Degree-k part.
El ch_part(const El& ch, int k);

/// alpha = lambda1 H + lambda2 H1 + lambda3 H2.
struct NormalizationClass {
  BigRational lambda1, lambda2, lambda3;
  El as_element(const TripleProductRing& ring) const;
};

/// Solves the_H ch_2^alpha = 0 (two equations, coefficients of H1, H2) and
/// the_1 ch_2^alpha = 0 (one equation). Throws SingularSystem.
NormalizationClass solve_alpha(const TripleProductRing& ring, const GrrClasses& grr);

/// ch(F) exp(alpha) through degree 4.
El twisted_character(const TripleProductRing& ring, const GrrClasses& grr, const NormalizationClass& alpha);

/// c_k(j) = integral over H^j of ch^alpha_{k+1}(F), for 0 <= k <= k_max
/// (k_max <= 3) and j = 0, 1, 2, in normal form.
std::map<std::pair<int, int>, El> taut_classes(const TripleProductRing& ring, int k_max);

struct PresentationReport {
  std::vector<long> hilbert;  // degrees 0..10
  long total = 0;
  bool palindromic = false;
  bool basis_change = false;      // H1 = 49/24 c_0(2) - 3 c_2(0) and H2 = c_0(2)
  BigRational generator_det;      // det of (c_0(2), c_2(0)) in the basis (H1, H2)
  std::vector<long> free_dims;    // k + 1: monomials in two degree-1 variables
  std::vector<long> kernel_dims;  // free_dims - hilbert
  std::vector<int> relation_degrees;  // degrees of minimal ideal generators, with multiplicity
};

/// Presentation of A*(M) as Q[c_0(2), c_2(0)]/I, located by dimension
/// counting: in each degree, the kernel of the map from monomials in the
/// two classes to A*(M) minus the part generated by lower-degree kernel
/// elements.
PresentationReport presentation_check(const TripleProductRing& ring);

}  // namespace tautring::degthree
