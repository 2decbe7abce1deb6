#pragma once

// Exact arithmetic: big rationals, polynomials in the two moduli parameters
// d and chi, and the fraction field of those polynomials.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tautring {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when a rational function is evaluated at a zero of its denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reduced rational num/den. Throws std::domain_error for a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

std::string to_string(const BigInt& z);
/// "0", "-5", "3/2".
std::string to_string(const BigRational& q);

inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }
inline bool is_constant(const BigRational&) { return true; }
inline BigRational constant_value(const BigRational& q) { return q; }
inline std::string canonical_string(const BigRational& q) { return to_string(q); }

BigInt factorial(unsigned n);

/// Exponent pair (a, b) of the monomial d^a * chi^b.
struct ParamExponent {
  int d = 0;
  int chi = 0;

  int total() const { return d + chi; }
  friend bool operator==(const ParamExponent&, const ParamExponent&) = default;
};

/// Graded lexicographic, descending: higher total degree first, then higher
/// d-exponent first.
struct GrlexDescending {
  bool operator()(const ParamExponent& a, const ParamExponent& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.d > b.d;
  }
};

/// Sparse polynomial in d and chi with rational coefficients. Zero
/// coefficients are never stored.
class ParamPoly {
 public:
  using Terms = std::map<ParamExponent, BigRational, GrlexDescending>;

  ParamPoly() = default;
  ParamPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c);                // NOLINT(google-explicit-constructor)

  static ParamPoly d();
  static ParamPoly chi();
  static ParamPoly monomial(ParamExponent e, const BigRational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of d^0 chi^0.
  BigRational constant_term() const;
  BigRational coefficient(ParamExponent e) const;
  int total_degree() const;
  int degree_in_d() const;
  int degree_in_chi() const;
  /// Leading term in the graded-lex order. Requires a nonzero polynomial.
  const std::pair<const ParamExponent, BigRational>& leading_term() const;

  BigRational evaluate(const BigRational& d_val, const BigRational& chi_val) const;
  /// Substitute a value for d only.
  ParamPoly substitute_d(const BigRational& d_val) const;
  /// Substitute a value for chi only.
  ParamPoly substitute_chi(const BigRational& chi_val) const;

  ParamPoly pow(unsigned e) const;
  ParamPoly scaled(const BigRational& c) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  ParamPoly& operator*=(const ParamPoly& rhs);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text: graded-lex order, explicit '*' and '^', variables
  /// named d and chi, e.g. "d^2 - 3*d*chi + 2*chi^2".
  std::string to_string() const;

 private:
  void add_term(const ParamExponent& e, const BigRational& c);
  Terms terms_;
};

enum class PolyOp { add, sub, mul };
ParamPoly poly_arith(const ParamPoly& lhs, const ParamPoly& rhs, PolyOp op);

/// Element of Q(d, chi) stored as num/den. Normalization clears rational
/// coefficients, removes the joint integer content, makes the leading
/// coefficient of den positive, and cancels common factors whenever den is
/// univariate. Equality is by cross-multiplication.
class ParamFraction {
 public:
  ParamFraction();
  ParamFraction(ParamPoly num);  // NOLINT(google-explicit-constructor)
  ParamFraction(ParamPoly num, ParamPoly den);
  ParamFraction(const BigRational& c);  // NOLINT(google-explicit-constructor)
  ParamFraction(long c);                // NOLINT(google-explicit-constructor)

  static ParamFraction d();
  static ParamFraction chi();

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant fraction. Throws std::logic_error otherwise.
  BigRational constant_value() const;

  /// Exact evaluation; throws PoleError when den vanishes at the point.
  BigRational specialize(const BigRational& d_val, const BigRational& chi_val) const;
  ParamFraction substitute_d(const BigRational& d_val) const;
  ParamFraction substitute_chi(const BigRational& chi_val) const;

  ParamFraction operator-() const;
  ParamFraction& operator+=(const ParamFraction& rhs);
  ParamFraction& operator-=(const ParamFraction& rhs);
  ParamFraction& operator*=(const ParamFraction& rhs);
  ParamFraction& operator/=(const ParamFraction& rhs);
  friend ParamFraction operator+(ParamFraction a, const ParamFraction& b) { return a += b; }
  friend ParamFraction operator-(ParamFraction a, const ParamFraction& b) { return a -= b; }
  friend ParamFraction operator*(ParamFraction a, const ParamFraction& b) { return a *= b; }
  friend ParamFraction operator/(ParamFraction a, const ParamFraction& b) { return a /= b; }

  friend bool operator==(const ParamFraction& a, const ParamFraction& b);

  /// Polynomial text when den is constant (e.g. "chi - 3/2*d"), otherwise
  /// "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();
  ParamPoly num_;
  ParamPoly den_;
};

/// lhs == rhs as rational functions (num_l * den_r == num_r * den_l).
bool frac_eq(const ParamFraction& lhs, const ParamFraction& rhs);

ParamFraction pow(const ParamFraction& base, unsigned e);

inline bool is_zero(const ParamFraction& f) { return f.is_zero(); }
inline bool is_constant(const ParamFraction& f) { return f.is_constant(); }
inline BigRational constant_value(const ParamFraction& f) { return f.constant_value(); }
inline std::string canonical_string(const ParamFraction& f) { return f.to_string(); }

/// Parses expressions over integers, d and chi with + - * / ^ and
/// parentheses. Accepts every string produced by to_string().
ParamFraction parse_param_fraction(std::string_view text);

}  // namespace tautring
