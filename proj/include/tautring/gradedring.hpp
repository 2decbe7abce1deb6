#pragma once

// Free graded commutative algebra on tautological generator symbols,
// tensored with ambient variables (optionally nilpotent), with degree
// truncation, truncated exponentials and coefficient extraction.

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tautring/exactalg.hpp"

namespace tautring {

class NonNilpotentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Family : std::uint8_t { e = 0, c = 1, ambient = 2 };

/// Generator symbol packed into 32 bits: family, degree, k and j (or the
/// ambient index). Comparison follows family, then degree, then k.
class GenSymbol {
 public:
  /// e_k(j) of degree k+j-1. Throws std::invalid_argument when the degree
  /// would be negative or j is outside {0,1,2}.
  static GenSymbol e(int k, int j);
  static GenSymbol c(int k, int j);
  static GenSymbol ambient(int index, int degree);
  static GenSymbol from_key(std::uint32_t key) { return GenSymbol(key); }

  Family family() const { return static_cast<Family>(key_ >> 30); }
  int degree() const { return static_cast<int>((key_ >> 20) & 0x3FFU); }
  int k() const { return static_cast<int>((key_ >> 8) & 0xFFFU); }
  int j() const { return static_cast<int>(key_ & 0xFFU); }
  int ambient_index() const { return j(); }
  bool is_generator() const { return family() != Family::ambient; }
  std::uint32_t key() const { return key_; }

  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;

 private:
  explicit GenSymbol(std::uint32_t key) : key_(key) {}
  static GenSymbol indexed(Family f, int k, int j);
  std::uint32_t key_;
};

struct AmbientDecl {
  std::string name;
  int degree = 1;
  int nilpotency = 0;  // 0: no nilpotency relation
};

struct Factor {
  GenSymbol sym;
  int exp;
};

/// Symbol table and truncation data shared by all elements of one algebra.
/// Read-only after construction.
class AlgebraContext {
 public:
  /// length_cap >= 0 additionally drops monomials containing more than
  /// length_cap generator (non-ambient) factors, counted with multiplicity.
  AlgebraContext(std::vector<AmbientDecl> ambients, int max_degree, int length_cap = -1);

  int max_degree() const { return max_degree_; }
  int length_cap() const { return length_cap_; }
  const std::vector<AmbientDecl>& ambients() const { return ambients_; }
  GenSymbol ambient(std::string_view name) const;
  const AmbientDecl& decl(GenSymbol ambient) const;
  std::string symbol_name(GenSymbol s) const;

 private:
  std::vector<AmbientDecl> ambients_;
  int max_degree_;
  int length_cap_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

ContextPtr make_context(std::vector<AmbientDecl> ambients, int max_degree, int length_cap = -1);

/// Product of symbol powers, factors sorted by symbol.
class Monomial {
 public:
  using Packed = std::uint64_t;  // symbol key << 16 | exponent

  Monomial() = default;
  static Monomial of(GenSymbol s, int exp = 1);
  static Monomial from_factors(const std::vector<Factor>& factors);

  int degree() const { return degree_; }
  bool is_one() const { return packed_.empty(); }
  std::vector<Factor> factors() const;
  int exponent_of(GenSymbol s) const;
  /// Number of generator factors counted with multiplicity.
  int generator_length() const;
  /// Single generator to the first power.
  bool is_linear_generator() const;
  Monomial without(GenSymbol s) const;
  /// Splits into (ambient part, generator part).
  std::pair<Monomial, Monomial> split_ambient() const;

  /// Product with nilpotency and truncation applied. Returns false when the
  /// product vanishes in the algebra.
  static bool multiply(const AlgebraContext& ctx, const Monomial& a, const Monomial& b, Monomial& out);

  std::string to_string(const AlgebraContext& ctx) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.packed_ == b.packed_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.packed_ < b.packed_;
  }

 private:
  boost::container::small_vector<Packed, 4> packed_;
  int degree_ = 0;
};

template <class K>
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, K>;

  explicit AlgebraElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static AlgebraElement constant(ContextPtr ctx, const K& c) { return monomial(std::move(ctx), Monomial(), c); }
  /// Throws std::invalid_argument for degree-0 symbols, which are never stored.
  static AlgebraElement generator(ContextPtr ctx, GenSymbol s, const K& c = K(1)) {
    if (s.degree() == 0) throw std::invalid_argument("degree-0 symbol " + ctx->symbol_name(s) + " cannot be stored");
    return monomial(std::move(ctx), Monomial::of(s), c);
  }
  static AlgebraElement ambient(ContextPtr ctx, std::string_view name, int exp = 1) {
    GenSymbol s = ctx->ambient(name);
    AlgebraElement r(ctx);
    Monomial one;
    Monomial m = Monomial::of(s, exp);
    Monomial out;
    if (Monomial::multiply(*ctx, one, m, out)) r.add_term(out, K(1));
    return r;
  }
  static AlgebraElement monomial(ContextPtr ctx, const Monomial& m, const K& c) {
    AlgebraElement r(std::move(ctx));
    if (m.degree() <= r.ctx_->max_degree()) r.add_term(m, c);
    return r;
  }

  const ContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }
  /// Coefficient of the constant monomial.
  K constant_term() const { return coefficient(Monomial()); }
  bool is_homogeneous(int deg) const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != deg) return false;
    return true;
  }

  void add_term(const Monomial& m, const K& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  AlgebraElement operator-() const { return scaled(K(-1)); }
  AlgebraElement scaled(const K& c) const {
    AlgebraElement r(ctx_);
    if (is_zero_coeff(c)) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, v * c);
    return r;
  }
  AlgebraElement& operator+=(const AlgebraElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  AlgebraElement& operator*=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const K& c) { return a.scaled(c); }
  friend AlgebraElement operator*(const K& c, const AlgebraElement& a) { return a.scaled(c); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  /// Monomials by (degree, symbol order), coefficients in canonical form.
  std::string to_string() const;

 private:
  static bool is_zero_coeff(const K& c) { return tautring::is_zero(c); }
  ContextPtr ctx_;
  Terms terms_;
};

template <class K>
AlgebraElement<K> alg_mul(const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
  AlgebraElement<K> r(a.context());
  const AlgebraContext& ctx = *a.context();
  Monomial prod;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (Monomial::multiply(ctx, ma, mb, prod)) r.add_term(prod, ca * cb);
  return r;
}

template <class K>
AlgebraElement<K> operator*(const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
  return alg_mul(a, b);
}

template <class K>
AlgebraElement<K>& AlgebraElement<K>::operator*=(const AlgebraElement<K>& rhs) {
  return *this = alg_mul(*this, rhs);
}

template <class K>
AlgebraElement<K> power(const AlgebraElement<K>& x, unsigned e) {
  AlgebraElement<K> r = AlgebraElement<K>::constant(x.context(), K(1));
  for (unsigned i = 0; i < e && !r.is_zero(); ++i) r = alg_mul(r, x);
  return r;
}

/// sum_{m>=0} x^m/m!, dropping everything above max_degree. Throws
/// NonNilpotentError when x has a nonzero degree-0 part.
template <class K>
AlgebraElement<K> exp_trunc(const AlgebraElement<K>& x, int max_degree) {
  for (const auto& [m, c] : x.terms())
    if (m.degree() == 0) throw NonNilpotentError("exp_trunc of an element with a degree-0 term");
  AlgebraElement<K> result = AlgebraElement<K>::constant(x.context(), K(1));
  AlgebraElement<K> term = result;
  for (long m = 1;; ++m) {
    term = alg_mul(term, x);
    AlgebraElement<K> kept(x.context());
    for (const auto& [mono, c] : term.terms())
      if (mono.degree() <= max_degree) kept.add_term(mono, c);
    term = std::move(kept);
    if (term.is_zero()) break;
    term = term.scaled(K(1) / K(m));
    result += term;
  }
  return result;
}

/// Coefficient of exactly the given ambient monomial: the terms whose
/// ambient part equals `ambient`, with that part removed.
template <class K>
AlgebraElement<K> extract(const AlgebraElement<K>& x, const Monomial& ambient) {
  AlgebraElement<K> r(x.context());
  for (const auto& [m, c] : x.terms()) {
    auto [amb, gen] = m.split_ambient();
    if (amb == ambient) r.add_term(gen, c);
  }
  return r;
}

/// Convenience: the ambient monomial name^exp in the context of x.
Monomial ambient_monomial(const AlgebraContext& ctx, std::string_view name, int exp);
Monomial ambient_monomial(const AlgebraContext& ctx,
                          const std::vector<std::pair<std::string, int>>& powers);

template <class K>
AlgebraElement<K> homogeneous_part(const AlgebraElement<K>& x, int deg) {
  AlgebraElement<K> r(x.context());
  for (const auto& [m, c] : x.terms())
    if (m.degree() == deg) r.add_term(m, c);
  return r;
}

/// Replaces every occurrence of `s` by `value`.
template <class K>
AlgebraElement<K> substitute(const AlgebraElement<K>& x, GenSymbol s, const AlgebraElement<K>& value) {
  AlgebraElement<K> r(x.context());
  std::map<int, AlgebraElement<K>> powers;
  for (const auto& [m, c] : x.terms()) {
    const int e = m.exponent_of(s);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, power(value, static_cast<unsigned>(e))).first;
    r += alg_mul(AlgebraElement<K>::monomial(x.context(), m.without(s), c), it->second);
  }
  return r;
}

/// Applies f to every coefficient, producing an element over K2 in ctx.
template <class K2, class K, class F>
AlgebraElement<K2> map_coefficients(const AlgebraElement<K>& x, ContextPtr ctx, F f) {
  AlgebraElement<K2> r(std::move(ctx));
  for (const auto& [m, c] : x.terms()) r.add_term(m, f(c));
  return r;
}

/// Quotient of the ambient-variable algebra by rules var^exponent -> replacement.
template <class K>
struct RewriteRule {
  GenSymbol var;
  int exponent;
  AlgebraElement<K> replacement;
};

template <class K>
class QuotientPresentation {
 public:
  /// Throws std::invalid_argument when a replacement does not lower the
  /// exponent of its rule variable.
  QuotientPresentation(ContextPtr ctx, std::vector<GenSymbol> variables, std::vector<RewriteRule<K>> rules);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<GenSymbol>& variables() const { return variables_; }
  const std::vector<RewriteRule<K>>& rules() const { return rules_; }

 private:
  ContextPtr ctx_;
  std::vector<GenSymbol> variables_;
  std::vector<RewriteRule<K>> rules_;
};

template <class K>
AlgebraElement<K> normal_form(const AlgebraElement<K>& x, const QuotientPresentation<K>& pres);

/// Graded dimensions of the quotient in degrees 0..max_degree, counted from
/// the monomials that no rule (and no nilpotency) can rewrite.
template <class K>
std::vector<long> hilbert_series(const QuotientPresentation<K>& pres, int max_degree);

extern template class AlgebraElement<BigRational>;
extern template class AlgebraElement<ParamFraction>;
extern template class QuotientPresentation<BigRational>;
extern template class QuotientPresentation<ParamFraction>;

}  // namespace tautring

#include "tautring/gradedring_impl.hpp"
