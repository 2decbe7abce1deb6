#include <random>

#include "doctest.h"
#include "tautring/gradedring.hpp"

using namespace tautring;

namespace {

using El = AlgebraElement<BigRational>;

ContextPtr ambient_ctx() {
  static ContextPtr ctx = make_context({{"H", 1, 3}, {"beta", 1, 3}}, 12);
  return ctx;
}

El H(int e = 1) { return El::ambient(ambient_ctx(), "H", e); }
El B(int e = 1) { return El::ambient(ambient_ctx(), "beta", e); }
El one() { return El::constant(ambient_ctx(), 1); }
El q(long n, long d = 1) { return El::constant(ambient_ctx(), make_rational(n, d)); }
El gen(int k, int j) { return El::generator(ambient_ctx(), GenSymbol::e(k, j)); }

El random_element(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> co(-5, 5);
  El x(ambient_ctx());
  // linear combination of a few degree-`degree` monomials
  std::vector<El> basis;
  basis.push_back(power(H(), degree));
  basis.push_back(gen(degree + 1, 0));
  basis.push_back(gen(degree, 1));
  if (degree >= 2) basis.push_back(gen(2, 0) * gen(degree, 0));
  basis.push_back(B() * power(gen(2, 0), degree - 1));
  for (auto& b : basis) x += b.scaled(co(rng));
  return x;
}

// Quotient Q[H1, xi]/(H1^3, xi^9 - 3 H1 xi^8 + 9 H1^2 xi^7)
struct DegThreeQuotient {
  ContextPtr ctx = make_context({{"H1", 1, 0}, {"xi", 1, 0}}, 40);
  El h1 = El::ambient(ctx, "H1");
  El xi = El::ambient(ctx, "xi");
  QuotientPresentation<BigRational> pres{
      ctx,
      {ctx->ambient("H1"), ctx->ambient("xi")},
      {{ctx->ambient("H1"), 3, El(ctx)},
       {ctx->ambient("xi"), 9, power(xi, 8) * h1.scaled(3) - power(xi, 7) * power(h1, 2).scaled(9)}}};
};

}  // namespace

TEST_CASE("symbols") {
  CHECK(GenSymbol::e(2, 0).degree() == 1);
  CHECK(GenSymbol::e(0, 1).degree() == 0);
  CHECK_THROWS_AS(GenSymbol::e(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(El::generator(ambient_ctx(), GenSymbol::e(1, 0)), std::invalid_argument);
  CHECK(ambient_ctx()->symbol_name(GenSymbol::c(0, 2)) == "c_0(2)");
}

TEST_CASE("alg_mul examples") {
  CHECK((H() * H(2)).is_zero());
  CHECK((one() + B()) * (one() - B() + B(2)) == one());
  CHECK((gen(2, 0) + H()) * (gen(2, 0) - H()) == gen(2, 0) * gen(2, 0) - H(2));
}

TEST_CASE("exp_trunc examples") {
  CHECK(exp_trunc(-H(), 12) == one() - H() + q(1, 2) * H(2));
  // direct oracle: sum of (-(H+beta))^m / m! for m <= 4
  El x = -(H() + B());
  El oracle = one();
  long fact = 1;
  for (int m = 1; m <= 4; ++m) {
    fact *= m;
    oracle += power(x, m).scaled(make_rational(1, fact));
  }
  CHECK(exp_trunc(x, 12) == oracle);
  CHECK(exp_trunc(H(), 12) * exp_trunc(B(), 12) == exp_trunc(H() + B(), 12));
  CHECK_THROWS_AS(exp_trunc(one() + H(), 12), NonNilpotentError);
  // generators are not nilpotent; the degree bound stops the series
  CHECK(exp_trunc(gen(2, 0), 2) == one() + gen(2, 0) + q(1, 2) * gen(2, 0) * gen(2, 0));
}

TEST_CASE("extract examples") {
  const auto& ctx = *ambient_ctx();
  El x = q(5) + q(7) * B() + q(11) * B(2);
  CHECK(extract(x, ambient_monomial(ctx, "beta", 2)) == q(11));
  El y = gen(2, 0) * H(2) + gen(3, 0) * H();
  CHECK(extract(y, ambient_monomial(ctx, "H", 2)) == gen(2, 0));
  CHECK(extract(x, Monomial()) == q(5));
}

TEST_CASE("homogeneous_part examples") {
  CHECK(homogeneous_part(one() + H() + H(2), 1) == H());
  El td = one() + q(3, 2) * H() + H(2);
  CHECK(homogeneous_part(exp_trunc(-H(), 12) * td, 2).is_zero());
  CHECK(homogeneous_part(El(ambient_ctx()), 3).is_zero());
}

TEST_CASE("rendering is deterministic") {
  El x = q(-3, 2) * gen(3, 0) + H() + gen(2, 0) * gen(2, 0) + q(2);
  // degree first, then symbol order
  CHECK(x.to_string() == "2 + H + e_2(0)^2 - 3/2*e_3(0)");
  CHECK(El(ambient_ctx()).to_string() == "0");
}

TEST_CASE("normal_form examples") {
  DegThreeQuotient Q;
  CHECK(normal_form(power(Q.h1, 3), Q.pres).is_zero());
  El xi9 = normal_form(power(Q.xi, 9), Q.pres);
  CHECK(xi9 == power(Q.xi, 8) * Q.h1.scaled(3) - power(Q.xi, 7) * power(Q.h1, 2).scaled(9));

  // oracle: multiplication by xi as a 27x27 matrix on the basis H1^a xi^b
  auto idx = [](int a, int b) { return a * 9 + b; };
  auto times_xi = [&](const std::vector<BigRational>& v) {
    std::vector<BigRational> w(27, BigRational(0));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 9; ++b) {
        const BigRational& c = v[idx(a, b)];
        if (c == 0) continue;
        if (b < 8) {
          w[idx(a, b + 1)] += c;
        } else {
          if (a + 1 < 3) w[idx(a + 1, 8)] += 3 * c;
          if (a + 2 < 3) w[idx(a + 2, 7)] -= 9 * c;
        }
      }
    return w;
  };
  std::vector<BigRational> v(27, BigRational(0));
  v[idx(0, 0)] = 1;
  for (int p = 1; p <= 12; ++p) {
    v = times_xi(v);
    El nf = normal_form(power(Q.xi, p), Q.pres);
    El expect(Q.ctx);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 9; ++b) expect += (power(Q.h1, a) * power(Q.xi, b)).scaled(v[idx(a, b)]);
    CHECK(nf == expect);
  }
  CHECK(normal_form(power(Q.xi, 10), Q.pres).is_zero());
}

TEST_CASE("hilbert_series examples") {
  DegThreeQuotient Q;
  CHECK(hilbert_series(Q.pres, 12) == std::vector<long>{1, 2, 3, 3, 3, 3, 3, 3, 3, 2, 1, 0, 0});
  ContextPtr free1 = make_context({{"t", 1, 0}}, 10);
  QuotientPresentation<BigRational> p(free1, {free1->ambient("t")}, {});
  CHECK(hilbert_series(p, 3) == std::vector<long>{1, 1, 1, 1});
}

TEST_CASE("rewrite rules must lower the exponent") {
  DegThreeQuotient Q;
  using Rule = RewriteRule<BigRational>;
  CHECK_THROWS_AS(QuotientPresentation<BigRational>(Q.ctx, {}, {Rule{Q.ctx->ambient("xi"), 2, power(Q.xi, 3)}}),
                  std::invalid_argument);
}

TEST_CASE("property: commutativity, exp law, extract shift, idempotence") {
  std::mt19937 rng(2024);
  const auto& ctx = *ambient_ctx();
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<int> dg(1, 3);
    El a = random_element(rng, dg(rng));
    El b = random_element(rng, dg(rng));
    El c = random_element(rng, dg(rng));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    std::uniform_int_distribution<int> co(-4, 4);
    El ha = H().scaled(co(rng)) + B().scaled(co(rng));
    El hb = H().scaled(co(rng)) + B().scaled(co(rng)) + H(2).scaled(co(rng));
    CHECK(exp_trunc(ha, 12) * exp_trunc(hb, 12) == exp_trunc(ha + hb, 12));
    for (int j = 0; j <= 2; ++j)
      for (int s = 0; s + j <= 2; ++s) {
        Monomial bj = ambient_monomial(ctx, "beta", j + s);
        Monomial bs = ambient_monomial(ctx, "beta", s);
        CHECK(extract(a * B(j), bj) == extract(a, bs));
      }
  }
  DegThreeQuotient Q;
  for (int i = 0; i < 20; ++i) {
    std::uniform_int_distribution<int> ex(0, 14), co(-5, 5);
    El x(Q.ctx);
    for (int t = 0; t < 4; ++t) x += (power(Q.h1, ex(rng) % 5) * power(Q.xi, ex(rng))).scaled(co(rng));
    El nf = normal_form(x, Q.pres);
    CHECK(normal_form(nf, Q.pres) == nf);
  }
}

TEST_CASE("hilbert series of the degree-three quotient is palindromic") {
  DegThreeQuotient Q;
  auto h = hilbert_series(Q.pres, 10);
  long total = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    CHECK(h[i] == h[10 - i]);
    total += h[i];
  }
  CHECK(total == 27);
}
