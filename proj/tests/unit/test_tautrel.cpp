#include <numeric>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "tautring/tautrel.hpp"

using namespace tautring;

namespace {

using SymEngine = RelationEngine<ParamFraction>;
using QEngine = RelationEngine<BigRational>;

const ParamFraction Dsym = ParamFraction::d();
const ParamFraction Xsym = ParamFraction::chi();

SymEngine symbolic_engine(int max_degree, int length_cap = -1) { return SymEngine({Dsym, Xsym}, max_degree, length_cap); }

ParamFraction P(const char* s) { return parse_param_fraction(s); }

AlgebraElement<ParamFraction> sym_e(const SymEngine& eng, int k, int j) { return eng.e(k, j); }

}  // namespace

TEST_CASE("order_cmp") {
  const int d = 5;
  CHECK(order_cmp({d - 1, 2}, {d, 1}) == std::strong_ordering::less);
  CHECK(order_cmp({2, 0}, {2, 0}) == std::strong_ordering::equal);
  CHECK(order_cmp({3, 0}, {1, 2}) == std::strong_ordering::greater);
  CHECK(order_cmp({1, 2}, {4, 0}) == std::strong_ordering::less);
  auto t = degree_targets(4);
  CHECK(order_cmp(t[0], t[1]) == std::strong_ordering::greater);
  CHECK(order_cmp(t[1], t[2]) == std::strong_ordering::greater);
}

TEST_CASE("degree-0 classes are substituted") {
  auto eng = symbolic_engine(6);
  CHECK(eng.e(0, 1) == eng.constant(-Dsym));
  CHECK(eng.e(1, 0) == eng.constant(P("chi - 3/2*d")));
  CHECK(eng.e(0, 0).is_zero());
  CHECK(eng.e(-1, 2).is_zero());
}

TEST_CASE("ab_class examples") {
  auto eng = symbolic_engine(6);
  for (int n = 1; n <= 3; ++n) {
    CHECK(eng.ab_class(0, n, ABKind::B) == eng.constant(Xsym + ParamFraction(n - 2) * Dsym));
    CHECK((eng.ab_class(0, n, ABKind::A) - eng.ab_class(0, n, ABKind::B)) == eng.constant(-Dsym));
    for (int s = 1; s <= 5; ++s) {
      auto diff = eng.ab_class(s, n, ABKind::A) - eng.ab_class(s, n, ABKind::B);
      CHECK(is_zero(linear_coefficient(diff, {s + 1, 0})));
      CHECK(linear_coefficient(diff, {s, 1}) == ParamFraction(1));
      CHECK(linear_coefficient(diff, {s - 1, 2}) == ParamFraction(1 - n));
    }
  }
  // (chi - 3d/2) + (3/2 - 3)(-d) = chi
  CHECK(eng.ab_class(0, 3, ABKind::A) == eng.constant(Xsym));
}

TEST_CASE("ch_pushforward: rank and the two derivations") {
  auto eng = symbolic_engine(12);
  for (int n = 1; n <= 3; ++n) {
    CHECK(eng.ch_pushforward(n, 0) == eng.constant(-Dsym));
    auto grr = eng.ch_series(n, 10, ChMode::derive_grr);
    for (int s = 0; s <= 10; ++s) CHECK(grr[s] == eng.ch_pushforward(n, s, ChMode::closed_form));
  }
  // s = 1, n = 1: beta coefficient is B_0 = chi - d
  auto ch1 = eng.ch_pushforward(1, 1);
  CHECK(extract(ch1, ambient_monomial(*eng.context(), "beta", 1)) == eng.constant(Xsym - Dsym));
  CHECK(extract(ch1, Monomial()) == eng.ab_class(1, 1, ABKind::A) - eng.ab_class(1, 1, ABKind::B));
}

TEST_CASE("Newton identities: small cases") {
  auto ctx = make_context({{"p1", 1, 0}, {"p2", 2, 0}, {"p3", 3, 0}}, 6);
  using El = AlgebraElement<BigRational>;
  std::vector<El> p = {El(ctx), El::ambient(ctx, "p1"), El::ambient(ctx, "p2"), El::ambient(ctx, "p3")};
  // ch_s = -p_s / s!
  std::vector<El> ch = {El(ctx)};
  for (int s = 1; s <= 3; ++s) ch.push_back(p[s].scaled(-BigRational(1) / BigRational(factorial(s))));
  CHECK(newton_chern(1, ch) == p[1]);
  CHECK(newton_chern(2, ch) == (p[1] * p[1] - p[2]).scaled(make_rational(1, 2)));
  CHECK(elementary_from_power_sums(2, p) == (p[1] * p[1] - p[2]).scaled(make_rational(1, 2)));
  CHECK(newton_chern(3, ch) == elementary_from_power_sums(3, p));
}

TEST_CASE("Newton identities against brute-force roots") {
  using El = AlgebraElement<BigRational>;
  auto ctx = make_context({{"x1", 1, 0}, {"x2", 1, 0}, {"x3", 1, 0}, {"x4", 1, 0}}, 6);
  std::vector<El> roots;
  for (const char* name : {"x1", "x2", "x3", "x4"}) roots.push_back(El::ambient(ctx, name));
  std::vector<El> p = {El::constant(ctx, 4)};
  std::vector<El> ch = {El::constant(ctx, -4)};
  for (int s = 1; s <= 5; ++s) {
    El ps(ctx);
    for (const auto& x : roots) ps += power(x, s);
    p.push_back(ps);
    ch.push_back(ps.scaled(-BigRational(1) / BigRational(factorial(s))));
  }
  auto girard = newton_girard(5, p);
  for (int ell = 1; ell <= 5; ++ell) {
    El brute = oracle::elementary_by_expansion(roots, ell);
    CHECK(newton_chern(ell, ch) == brute);
    CHECK(elementary_from_power_sums(ell, p) == brute);
    CHECK(girard[ell] == brute);
  }
  CHECK(newton_chern(5, ch).is_zero());
}

TEST_CASE("partitions") {
  const std::size_t expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto& parts = partitions(n);
    CHECK(parts.size() == expect[n]);
    for (const auto& m : parts) {
      int total = 0;
      for (int s = 1; s <= n; ++s) total += s * m[s];
      CHECK(total == n);
    }
  }
}

TEST_CASE("relation expression equals (-1)^ell times newton_chern") {
  QEngine eng({BigRational(5), BigRational(2)}, 8);
  for (int ell = 1; ell <= 7; ++ell) {
    auto ch = eng.ch_series(2, ell);
    auto expr = eng.relation_expression(ell, 2);
    auto e = newton_chern(ell, ch);
    CHECK(expr == (ell % 2 == 0 ? e : -e));
  }
}

TEST_CASE("relations are homogeneous of degree ell - (2 - j)") {
  QEngine eng({BigRational(6), BigRational(1)}, 9);
  for (int ell = 3; ell <= 9; ++ell)
    for (int n = 1; n <= 3; ++n)
      for (const auto& rel : eng.make_relations(ell, n)) {
        CHECK(rel.lhs.is_homogeneous(ell - (2 - rel.provenance.beta_power)));
        CHECK(rel.degree() == ell - (2 - rel.provenance.beta_power));
      }
}

TEST_CASE("make_relation examples, symbolic in d and chi") {
  // Step 1 pattern at several concrete ell, d and chi left symbolic
  for (int ell = 5; ell <= 8; ++ell) {
    auto eng = symbolic_engine(ell);
    auto table = leading_table(eng, ell, 2);
    const ParamFraction l1(ell - 1);
    CHECK(table.entries[0] == std::vector<ParamFraction>{0, 0, 0});
    CHECK(table.entries[1] == std::vector<ParamFraction>{l1, l1, l1});
    CHECK(table.entries[2] == std::vector<ParamFraction>{0, -l1, ParamFraction(-2) * l1});
  }
  // Step 2 at ell = d + 1 with d concrete, chi symbolic
  for (int d = 4; d <= 6; ++d) {
    SymEngine eng({ParamFraction(d), Xsym}, d + 1);
    auto table = leading_table(eng, d + 1, 1);
    auto ref = reference_table(2);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) CHECK(frac_eq(table.entries[r][c], ref.entries[r][c].substitute_d(d)));
  }
}

TEST_CASE("symbolic tables match the printed tables") {
  for (int step = 1; step <= 4; ++step) {
    const int offsets = step == 1 ? 4 : 1;
    for (int off = 1; off <= offsets; ++off) {
      auto spec = step_spec(step, off);
      auto table = leading_table_symbolic(spec.ell_offset, spec.beta_power);
      auto ref = reference_table(step, off);
      CHECK(table.row_labels.size() == 3);
      for (std::size_t r = 0; r < ref.entries.size(); ++r) {
        CHECK(table.row_labels[r] == ref.row_labels[r]);
        for (int c = 0; c < 3; ++c) CHECK_MESSAGE(frac_eq(table.entries[r][c], ref.entries[r][c]), "step ", step, " row ", r, " col ", c);
      }
    }
  }
}

TEST_CASE("symbolic tables agree with the full engine after specialization") {
  for (int d = 4; d <= 8; ++d)
    for (int chi = 1; chi < d; ++chi) {
      QEngine eng({BigRational(d), BigRational(chi)}, d + 5);
      for (int step = 1; step <= 4; ++step) {
        const int offsets = step == 1 ? 3 : 1;
        for (int off = 1; off <= offsets; ++off) {
          auto spec = step_spec(step, off);
          auto sym = leading_table_symbolic(spec.ell_offset, spec.beta_power);
          auto concrete = leading_table(eng, d + spec.ell_offset, spec.beta_power);
          for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) CHECK(sym.entries[r][c].specialize(d, chi) == concrete.entries[r][c]);
        }
      }
    }
}

TEST_CASE("Step 2 rows one and two are proportional") {
  auto t = leading_table_symbolic(1, 1);
  const ParamFraction ratio = P("chi - 3/2*d") / Dsym;
  for (int c = 0; c < 3; ++c) CHECK(frac_eq(t.entries[1][c], ratio * t.entries[0][c]));
}

TEST_CASE("det of the Step 3 table") {
  ParamFraction det = det_step3();
  CHECK(frac_eq(det, det_step3_closed_form()));
  CHECK(det.specialize(4, 1) == make_rational(1, 3));
  for (int k = 3; k <= 9; ++k) CHECK(det.specialize(k, k) == 0);
  for (int d = 4; d <= 9; ++d)
    for (int chi = 1; chi < d; ++chi)
      if (std::gcd(d, chi) == 1) CHECK(det.specialize(d, chi) != 0);
  CHECK(det.den().degree_in_chi() == 0);
}

TEST_CASE("Step 4 combination") {
  auto r = step4_combination();
  CHECK(frac_eq(r.ed1_coefficient, r.expected));
  CHECK(r.ed1_0_coefficient.is_zero());
  CHECK(r.ed1_coefficient.specialize(5, 1) == 10);
}

TEST_CASE("kills examples on full relations") {
  for (int d = 4; d <= 6; ++d) {
    SymEngine eng({ParamFraction(d), Xsym}, d + 2);
    using C = std::vector<std::pair<ParamFraction, Relation<ParamFraction>>>;
    // Step 1, ell = d + 1, beta power 2: R_1 kills e_ell(1)
    const int ell = d + 1;
    auto r1 = eng.make_relation(ell, 1, 2);
    auto r2 = eng.make_relation(ell, 2, 2);
    CHECK(kills(C{{1, r1}}, {ell, 1}));
    CHECK(kills(C{{1, r1}, {-1, r2}}, {ell - 1, 2}));
    // Step 2: R_1 - R_2 kills e_{d-1}(2); no single R_i kills e_d(1)
    auto s1 = eng.make_relation(d + 1, 1, 1);
    auto s2 = eng.make_relation(d + 1, 2, 1);
    auto s3 = eng.make_relation(d + 1, 3, 1);
    CHECK(kills(C{{1, s1}, {-1, s2}}, {d - 1, 2}));
    CHECK(kills(C{{1, s1}}, {d + 1, 0}));
    for (const auto* rel : {&s1, &s2, &s3}) CHECK_FALSE(kills(C{{1, *rel}}, {d, 1}));
    // wrong degree
    CHECK_THROWS_AS(kills(C{{1, r1}}, {d, 1}), DegreeMismatch);
  }
}

TEST_CASE("kills on the symbolic linear parts") {
  // Step 2 with d symbolic: only the linear part is available; product
  // monomials have factors of lower degree and cannot affect the check.
  auto t = leading_table_symbolic(1, 1);
  const ParamFraction r1_minus_r2[3] = {t.entries[0][0] - t.entries[0][1], t.entries[1][0] - t.entries[1][1],
                                        t.entries[2][0] - t.entries[2][1]};
  CHECK(r1_minus_r2[0].is_zero());
  CHECK(r1_minus_r2[1].is_zero());
  CHECK_FALSE(r1_minus_r2[2].is_zero());
}

TEST_CASE("verify_generation examples") {
  auto r = verify_generation(4, 1, 6);
  CHECK(r.witnesses.size() == 3u * (6 - 4 + 2));
  CHECK(verify_generation(5, 2, 7).witnesses.size() == 12u);
  CHECK(verify_generation(5, 4, 7).witnesses.size() == 12u);
  CHECK(verify_generation(4, 3, 5).witnesses.size() == 9u);
  // witnesses agree between the full and the linear-part computation
  auto lin = verify_generation(5, 2, 7, {false, 1});
  auto full = verify_generation(5, 2, 7, {true, 1});
  REQUIRE(lin.witnesses.size() == full.witnesses.size());
  for (std::size_t i = 0; i < lin.witnesses.size(); ++i) {
    CHECK(lin.witnesses[i].target == full.witnesses[i].target);
    CHECK(lin.witnesses[i].combination.size() == full.witnesses[i].combination.size());
    for (std::size_t k = 0; k < lin.witnesses[i].combination.size(); ++k)
      CHECK(lin.witnesses[i].combination[k].first == full.witnesses[i].combination[k].first);
  }
}

TEST_CASE("verify_generation is independent of the worker count") {
  auto a = verify_generation(6, 1, 8, {true, 1});
  auto b = verify_generation(6, 1, 8, {true, 3});
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    CHECK(a.witnesses[i].target == b.witnesses[i].target);
    REQUIRE(a.witnesses[i].combination.size() == b.witnesses[i].combination.size());
    for (std::size_t k = 0; k < a.witnesses[i].combination.size(); ++k)
      CHECK(a.witnesses[i].combination[k].first == b.witnesses[i].combination[k].first);
  }
}

TEST_CASE("verify_generation reports a degenerate pair") {
  // gcd(4, 2) = 2: the Step 3 determinant vanishes since d = 2 chi
  try {
    verify_generation(4, 2, 6);
    FAIL("expected GenerationFailure");
  } catch (const GenerationFailure& e) {
    CHECK(e.k() + e.j() - 1 == 3);
  }
  CHECK_THROWS_AS(verify_generation(3, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_generation(5, 5, 7), std::invalid_argument);
}
