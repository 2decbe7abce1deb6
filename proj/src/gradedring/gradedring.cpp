#include "tautring/gradedring.hpp"

#include <algorithm>

namespace tautring {

GenSymbol GenSymbol::indexed(Family f, int k, int j) {
  if (j < 0 || j > 2) throw std::invalid_argument("symbol index j must be 0, 1 or 2");
  if (k < 0 || k > 0xFFF) throw std::invalid_argument("symbol index k out of range");
  const int deg = k + j - 1;
  if (deg < 0) throw std::invalid_argument("symbol of negative degree is not constructible");
  return GenSymbol((static_cast<std::uint32_t>(f) << 30) | (static_cast<std::uint32_t>(deg) << 20) |
                   (static_cast<std::uint32_t>(k) << 8) | static_cast<std::uint32_t>(j));
}

GenSymbol GenSymbol::e(int k, int j) { return indexed(Family::e, k, j); }
GenSymbol GenSymbol::c(int k, int j) { return indexed(Family::c, k, j); }

GenSymbol GenSymbol::ambient(int index, int degree) {
  if (index < 0 || index > 0xFF) throw std::invalid_argument("ambient index out of range");
  if (degree < 0 || degree > 0x3FF) throw std::invalid_argument("ambient degree out of range");
  return GenSymbol((static_cast<std::uint32_t>(Family::ambient) << 30) |
                   (static_cast<std::uint32_t>(degree) << 20) | static_cast<std::uint32_t>(index));
}

// ------------------------------------------------------------ AlgebraContext

AlgebraContext::AlgebraContext(std::vector<AmbientDecl> ambients, int max_degree, int length_cap)
    : ambients_(std::move(ambients)), max_degree_(max_degree), length_cap_(length_cap) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  for (std::size_t i = 0; i < ambients_.size(); ++i) {
    if (ambients_[i].degree <= 0) throw std::invalid_argument("ambient variables must have positive degree");
    for (std::size_t j = 0; j < i; ++j)
      if (ambients_[i].name == ambients_[j].name) throw std::invalid_argument("duplicate ambient " + ambients_[i].name);
  }
}

GenSymbol AlgebraContext::ambient(std::string_view name) const {
  for (std::size_t i = 0; i < ambients_.size(); ++i)
    if (ambients_[i].name == name) return GenSymbol::ambient(static_cast<int>(i), ambients_[i].degree);
  throw std::invalid_argument("unknown ambient variable " + std::string(name));
}

const AmbientDecl& AlgebraContext::decl(GenSymbol s) const {
  if (s.family() != Family::ambient || static_cast<std::size_t>(s.ambient_index()) >= ambients_.size())
    throw std::invalid_argument("not an ambient symbol of this context");
  return ambients_[s.ambient_index()];
}

std::string AlgebraContext::symbol_name(GenSymbol s) const {
  switch (s.family()) {
    case Family::e: return "e_" + std::to_string(s.k()) + "(" + std::to_string(s.j()) + ")";
    case Family::c: return "c_" + std::to_string(s.k()) + "(" + std::to_string(s.j()) + ")";
    case Family::ambient: return decl(s).name;
  }
  return "?";
}

ContextPtr make_context(std::vector<AmbientDecl> ambients, int max_degree, int length_cap) {
  return std::make_shared<const AlgebraContext>(std::move(ambients), max_degree, length_cap);
}

// ------------------------------------------------------------------ Monomial

namespace {

GenSymbol sym_of(Monomial::Packed p) { return GenSymbol::from_key(static_cast<std::uint32_t>(p >> 16)); }
int exp_of(Monomial::Packed p) { return static_cast<int>(p & 0xFFFFU); }
Monomial::Packed pack(GenSymbol s, int e) { return (static_cast<Monomial::Packed>(s.key()) << 16) | static_cast<unsigned>(e); }

}  // namespace

Monomial Monomial::of(GenSymbol s, int exp) {
  if (exp < 0 || exp > 0xFFFF) throw std::invalid_argument("monomial exponent out of range");
  Monomial m;
  if (exp == 0) return m;
  m.packed_.push_back(pack(s, exp));
  m.degree_ = s.degree() * exp;
  return m;
}

Monomial Monomial::from_factors(const std::vector<Factor>& factors) {
  std::map<GenSymbol, int> acc;
  for (const auto& f : factors) {
    if (f.exp < 0) throw std::invalid_argument("negative exponent");
    if (f.exp > 0) acc[f.sym] += f.exp;
  }
  Monomial m;
  for (const auto& [s, e] : acc) {
    m.packed_.push_back(pack(s, e));
    m.degree_ += s.degree() * e;
  }
  return m;
}

std::vector<Factor> Monomial::factors() const {
  std::vector<Factor> out;
  out.reserve(packed_.size());
  for (auto p : packed_) out.push_back({sym_of(p), exp_of(p)});
  return out;
}

int Monomial::exponent_of(GenSymbol s) const {
  for (auto p : packed_)
    if (sym_of(p) == s) return exp_of(p);
  return 0;
}

int Monomial::generator_length() const {
  int n = 0;
  for (auto p : packed_)
    if (sym_of(p).is_generator()) n += exp_of(p);
  return n;
}

bool Monomial::is_linear_generator() const {
  return packed_.size() == 1 && exp_of(packed_[0]) == 1 && sym_of(packed_[0]).is_generator();
}

Monomial Monomial::without(GenSymbol s) const {
  Monomial m;
  for (auto p : packed_) {
    if (sym_of(p) == s) continue;
    m.packed_.push_back(p);
    m.degree_ += sym_of(p).degree() * exp_of(p);
  }
  return m;
}

std::pair<Monomial, Monomial> Monomial::split_ambient() const {
  Monomial amb;
  Monomial gen;
  for (auto p : packed_) {
    Monomial& dst = sym_of(p).is_generator() ? gen : amb;
    dst.packed_.push_back(p);
    dst.degree_ += sym_of(p).degree() * exp_of(p);
  }
  return {amb, gen};
}

bool Monomial::multiply(const AlgebraContext& ctx, const Monomial& a, const Monomial& b, Monomial& out) {
  const int deg = a.degree_ + b.degree_;
  if (deg > ctx.max_degree()) return false;
  out.packed_.clear();
  out.degree_ = deg;
  int length = 0;
  auto push = [&](Packed p) {
    GenSymbol s = sym_of(p);
    const int e = exp_of(p);
    if (s.is_generator()) {
      length += e;
    } else {
      const int nil = ctx.decl(s).nilpotency;
      if (nil > 0 && e >= nil) return false;
    }
    out.packed_.push_back(p);
    return true;
  };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.packed_.size() || j < b.packed_.size()) {
    Packed p;
    if (j == b.packed_.size() || (i < a.packed_.size() && (a.packed_[i] >> 16) < (b.packed_[j] >> 16))) {
      p = a.packed_[i++];
    } else if (i == a.packed_.size() || (b.packed_[j] >> 16) < (a.packed_[i] >> 16)) {
      p = b.packed_[j++];
    } else {
      const int e = exp_of(a.packed_[i]) + exp_of(b.packed_[j]);
      if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
      p = pack(sym_of(a.packed_[i]), e);
      ++i;
      ++j;
    }
    if (!push(p)) return false;
  }
  if (ctx.length_cap() >= 0 && length > ctx.length_cap()) return false;
  return true;
}

std::string Monomial::to_string(const AlgebraContext& ctx) const {
  if (packed_.empty()) return "1";
  std::string out;
  for (auto p : packed_) {
    if (!out.empty()) out += "*";
    out += ctx.symbol_name(sym_of(p));
    if (exp_of(p) > 1) out += "^" + std::to_string(exp_of(p));
  }
  return out;
}

Monomial ambient_monomial(const AlgebraContext& ctx, std::string_view name, int exp) {
  return Monomial::of(ctx.ambient(name), exp);
}

Monomial ambient_monomial(const AlgebraContext& ctx, const std::vector<std::pair<std::string, int>>& powers) {
  std::vector<Factor> f;
  for (const auto& [name, e] : powers) f.push_back({ctx.ambient(name), e});
  return Monomial::from_factors(f);
}

template class AlgebraElement<BigRational>;
template class AlgebraElement<ParamFraction>;
template class QuotientPresentation<BigRational>;
template class QuotientPresentation<ParamFraction>;

}  // namespace tautring
