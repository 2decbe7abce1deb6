#include "tautring/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace tautring {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& q) { return q.get_str(); }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace {

BigRational qpow(const BigRational& base, int e) {
  BigRational r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(const BigRational& c) {
  if (sgn(c) != 0) terms_.emplace(ParamExponent{0, 0}, c);
}

ParamPoly::ParamPoly(long c) : ParamPoly(BigRational(c)) {}

ParamPoly ParamPoly::d() { return monomial({1, 0}, 1); }
ParamPoly ParamPoly::chi() { return monomial({0, 1}, 1); }

ParamPoly ParamPoly::monomial(ParamExponent e, const BigRational& c) {
  if (e.d < 0 || e.chi < 0) throw std::invalid_argument("negative exponent in ParamPoly");
  ParamPoly p;
  p.add_term(e, c);
  return p;
}

void ParamPoly::add_term(const ParamExponent& e, const BigRational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

BigRational ParamPoly::constant_term() const { return coefficient({0, 0}); }

BigRational ParamPoly::coefficient(ParamExponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

int ParamPoly::total_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.total();
}

int ParamPoly::degree_in_d() const {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, e.d);
  return m;
}

int ParamPoly::degree_in_chi() const {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, e.chi);
  return m;
}

const std::pair<const ParamExponent, BigRational>& ParamPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return *terms_.begin();
}

BigRational ParamPoly::evaluate(const BigRational& d_val, const BigRational& chi_val) const {
  BigRational sum(0);
  for (const auto& [e, c] : terms_) sum += c * qpow(d_val, e.d) * qpow(chi_val, e.chi);
  return sum;
}

ParamPoly ParamPoly::substitute_d(const BigRational& d_val) const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.add_term({0, e.chi}, c * qpow(d_val, e.d));
  return r;
}

ParamPoly ParamPoly::substitute_chi(const BigRational& chi_val) const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.add_term({e.d, 0}, c * qpow(chi_val, e.chi));
  return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

ParamPoly ParamPoly::scaled(const BigRational& c) const {
  ParamPoly r;
  if (sgn(c) == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
  return r;
}

ParamPoly ParamPoly::operator-() const { return scaled(-1); }

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.d + eb.d, ea.chi + eb.chi}, ca * cb);
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) { return *this = *this * rhs; }

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    BigRational mag = abs(c);
    std::string mono;
    auto append = [&mono](const char* var, int exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (exp > 1) mono += "^" + std::to_string(exp);
    };
    append("d", e.d);
    append("chi", e.chi);
    if (mono.empty()) {
      out += tautring::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += tautring::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

ParamPoly poly_arith(const ParamPoly& lhs, const ParamPoly& rhs, PolyOp op) {
  switch (op) {
    case PolyOp::add: return lhs + rhs;
    case PolyOp::sub: return lhs - rhs;
    case PolyOp::mul: return lhs * rhs;
  }
  throw std::invalid_argument("unknown PolyOp");
}

// ------------------------------------------------------- univariate helpers

namespace {

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
using UPoly = std::vector<BigRational>;

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Remainder and quotient of a by b (b nonzero).
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  trim(a);
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, BigRational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    BigRational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    BigRational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// Views p as a polynomial in `other` with coefficients in Q[main].
// Returns other-exponent -> dense coefficient in the main variable.
std::map<int, UPoly> split(const ParamPoly& p, bool main_is_d) {
  std::map<int, UPoly> out;
  for (const auto& [e, c] : p.terms()) {
    const int main_exp = main_is_d ? e.d : e.chi;
    const int other_exp = main_is_d ? e.chi : e.d;
    UPoly& u = out[other_exp];
    if (u.size() <= static_cast<std::size_t>(main_exp)) u.resize(main_exp + 1, BigRational(0));
    u[main_exp] = c;
  }
  return out;
}

ParamPoly join(const std::map<int, UPoly>& parts, bool main_is_d) {
  ParamPoly r;
  for (const auto& [other, u] : parts) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (sgn(u[i]) == 0) continue;
      const int m = static_cast<int>(i);
      r += ParamPoly::monomial(main_is_d ? ParamExponent{m, other} : ParamExponent{other, m}, u[i]);
    }
  }
  return r;
}

// Cancels the gcd of den (univariate in the main variable) with num.
void cancel_univariate(ParamPoly& num, ParamPoly& den, bool main_is_d) {
  UPoly g = split(den, main_is_d).begin()->second;
  trim(g);
  auto num_parts = split(num, main_is_d);
  for (const auto& [other, u] : num_parts) {
    g = ugcd(g, u);
    if (g.size() <= 1) return;
  }
  if (g.size() <= 1) return;
  for (auto& [other, u] : num_parts) u = udivmod(u, g).first;
  auto den_parts = split(den, main_is_d);
  for (auto& [other, u] : den_parts) u = udivmod(u, g).first;
  num = join(num_parts, main_is_d);
  den = join(den_parts, main_is_d);
}

}  // namespace

// ------------------------------------------------------------ ParamFraction

ParamFraction::ParamFraction() : num_(), den_(1) {}

ParamFraction::ParamFraction(ParamPoly num) : num_(std::move(num)), den_(1) { normalize(); }

ParamFraction::ParamFraction(ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("ParamFraction with zero denominator");
  normalize();
}

ParamFraction::ParamFraction(const BigRational& c) : num_(c), den_(1) { normalize(); }

ParamFraction::ParamFraction(long c) : num_(c), den_(1) {}

ParamFraction ParamFraction::d() { return ParamFraction(ParamPoly::d()); }
ParamFraction ParamFraction::chi() { return ParamFraction(ParamPoly::chi()); }

void ParamFraction::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    if (den_.degree_in_chi() == 0) {
      cancel_univariate(num_, den_, true);
    } else if (den_.degree_in_d() == 0) {
      cancel_univariate(num_, den_, false);
    }
  }
  BigInt lcm_den(1);
  for (const auto* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  BigInt g(0);
  for (const auto* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms()) {
      BigInt scaled_num = c.get_num() * (lcm_den / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled_num.get_mpz_t());
    }
  BigRational factor = make_rational(lcm_den, g);
  if (sgn(den_.leading_term().second) < 0) factor = -factor;
  if (factor != 1) {
    num_ = num_.scaled(factor);
    den_ = den_.scaled(factor);
  }
}

BigRational ParamFraction::constant_value() const {
  if (!is_constant()) throw std::logic_error("ParamFraction is not constant: " + to_string());
  return num_.constant_term() / den_.constant_term();
}

BigRational ParamFraction::specialize(const BigRational& d_val, const BigRational& chi_val) const {
  BigRational den = den_.evaluate(d_val, chi_val);
  if (sgn(den) == 0) {
    throw PoleError("denominator " + den_.to_string() + " vanishes at d=" + tautring::to_string(d_val) +
                    ", chi=" + tautring::to_string(chi_val));
  }
  return num_.evaluate(d_val, chi_val) / den;
}

ParamFraction ParamFraction::substitute_d(const BigRational& d_val) const {
  ParamPoly den = den_.substitute_d(d_val);
  if (den.is_zero()) throw PoleError("denominator " + den_.to_string() + " vanishes at d=" + tautring::to_string(d_val));
  return ParamFraction(num_.substitute_d(d_val), den);
}

ParamFraction ParamFraction::substitute_chi(const BigRational& chi_val) const {
  ParamPoly den = den_.substitute_chi(chi_val);
  if (den.is_zero()) throw PoleError("denominator " + den_.to_string() + " vanishes at chi=" + tautring::to_string(chi_val));
  return ParamFraction(num_.substitute_chi(chi_val), den);
}

ParamFraction ParamFraction::operator-() const {
  ParamFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamFraction& ParamFraction::operator+=(const ParamFraction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

ParamFraction& ParamFraction::operator-=(const ParamFraction& rhs) { return *this += -rhs; }

ParamFraction& ParamFraction::operator*=(const ParamFraction& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = ParamFraction();
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ParamFraction& ParamFraction::operator/=(const ParamFraction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero ParamFraction");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

bool operator==(const ParamFraction& a, const ParamFraction& b) { return frac_eq(a, b); }

bool frac_eq(const ParamFraction& lhs, const ParamFraction& rhs) {
  if (lhs.den() == rhs.den()) return lhs.num() == rhs.num();
  return lhs.num() * rhs.den() == rhs.num() * lhs.den();
}

ParamFraction pow(const ParamFraction& base, unsigned e) {
  return ParamFraction(base.num().pow(e), base.den().pow(e));
}

std::string ParamFraction::to_string() const {
  if (den_.is_constant()) return num_.scaled(1 / den_.constant_term()).to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ------------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParamFraction parse() {
    ParamFraction v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamFraction expr() {
    ParamFraction v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  ParamFraction term() {
    ParamFraction v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        ParamFraction rhs = unary();
        if (rhs.is_zero()) fail("division by zero");
        v /= rhs;
      } else {
        return v;
      }
    }
  }

  ParamFraction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ParamFraction power() {
    ParamFraction base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 4) fail("exponent too large");
      return tautring::pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  ParamFraction atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParamFraction v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ParamFraction(BigRational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    if (text_.substr(pos_, 3) == "chi") {
      pos_ += 3;
      return ParamFraction::chi();
    }
    if (c == 'd') {
      ++pos_;
      return ParamFraction::d();
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamFraction parse_param_fraction(std::string_view text) { return Parser(text).parse(); }

}  // namespace tautring
