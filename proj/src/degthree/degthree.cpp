#include "tautring/degthree.hpp"

#include "tautring/linear.hpp"

namespace tautring::degthree {

namespace {

constexpr int kChDegree = 4;

El truncate(const El& x, int max_degree) {
  El r(x.context());
  for (const auto& [m, c] : x.terms())
    if (m.degree() <= max_degree) r.add_term(m, c);
  return r;
}

Monomial mono(const TripleProductRing& ring, std::vector<std::pair<std::string, int>> powers) {
  return ambient_monomial(*ring.context(), powers);
}

}  // namespace

TripleProductRing::TripleProductRing()
    : ctx_(make_context({{"H", 1, 3}, {"H1", 1, 3}, {"H2", 1, 0}}, 2 + moduli_dimension)),
      h_(El::ambient(ctx_, "H")),
      h1_(El::ambient(ctx_, "H1")),
      h2_(El::ambient(ctx_, "H2")),
      full_(ctx_, {ctx_->ambient("H"), ctx_->ambient("H1"), ctx_->ambient("H2")},
            {{ctx_->ambient("H2"), 9,
              power(h2_, 8) * h1_.scaled(3) - power(h2_, 7) * power(h1_, 2).scaled(9)}}),
      moduli_(ctx_, {ctx_->ambient("H1"), ctx_->ambient("H2")}, full_.rules()) {}

El TripleProductRing::integrate(const El& x, int j) const {
  const GenSymbol hs = ctx_->ambient("H");
  El r(ctx_);
  for (const auto& [m, c] : x.terms())
    if (m.exponent_of(hs) == 2 - j) r.add_term(m.without(hs), c);
  return normal_form(r, moduli_);
}

El ch_part(const El& ch, int k) { return homogeneous_part(ch, k); }

GrrClasses grr_classes(const TripleProductRing& ring) {
  const El one = ring.constant(1);
  const El support = ring.H().scaled(3) + ring.H2();
  El ov = one - exp_trunc(-support, kChDegree);
  // td(P^2)^{-1} = 1 - 3/2 h + 5/4 h^2, h = H1 restricted to W
  El w = power(ring.H(), 2) + ring.H() * ring.H1() + power(ring.H1(), 2);
  El td_inv = one - ring.H1().scaled(make_rational(3, 2)) + power(ring.H1(), 2).scaled(make_rational(5, 4));
  El ow = truncate(w * td_inv, kChDegree);
  return {ring.reduce(ov), ring.reduce(ow), ring.reduce(ov - ow)};
}

El NormalizationClass::as_element(const TripleProductRing& ring) const {
  return ring.H().scaled(lambda1) + ring.H1().scaled(lambda2) + ring.H2().scaled(lambda3);
}

NormalizationClass solve_alpha(const TripleProductRing& ring, const GrrClasses& grr) {
  const El ch1 = ch_part(grr.ch_F, 1);
  const El ch2 = ch_part(grr.ch_F, 2);
  const std::vector<El> unknowns = {ring.H() * ch1, ring.H1() * ch1, ring.H2() * ch1};
  // the_H picks the H^1 terms (basis H1, H2 of A^1(M)); the_1 picks H^2
  const std::vector<Monomial> rows = {mono(ring, {{"H", 1}, {"H1", 1}}), mono(ring, {{"H", 1}, {"H2", 1}}),
                                      mono(ring, {{"H", 2}})};
  Matrix<BigRational> a;
  std::vector<BigRational> b;
  for (const auto& m : rows) {
    std::vector<BigRational> row;
    for (const auto& u : unknowns) row.push_back(u.coefficient(m));
    a.push_back(std::move(row));
    b.push_back(-ch2.coefficient(m));
  }
  auto x = solve(a, b);
  return {x[0], x[1], x[2]};
}

El twisted_character(const TripleProductRing& ring, const GrrClasses& grr, const NormalizationClass& alpha) {
  return ring.reduce(truncate(grr.ch_F * exp_trunc(alpha.as_element(ring), kChDegree), kChDegree));
}

std::map<std::pair<int, int>, El> taut_classes(const TripleProductRing& ring, int k_max) {
  if (k_max < 0 || k_max + 1 > kChDegree)
    throw std::invalid_argument("taut_classes: k_max must lie in 0.." + std::to_string(kChDegree - 1));
  auto grr = grr_classes(ring);
  auto alpha = solve_alpha(ring, grr);
  El ch = twisted_character(ring, grr, alpha);
  std::map<std::pair<int, int>, El> out;
  for (int k = 0; k <= k_max; ++k)
    for (int j = 0; j <= 2; ++j) out.emplace(std::pair{k, j}, ring.integrate(ch_part(ch, k + 1), j));
  return out;
}

namespace {

// Coordinates of a degree-k class in the standard monomials H1^a H2^b.
struct StandardBasis {
  std::vector<Monomial> monos;

  StandardBasis(const TripleProductRing& ring, int k) {
    for (int a = 0; a <= 2 && a <= k; ++a)
      if (k - a <= 8) monos.push_back(mono(ring, {{"H1", a}, {"H2", k - a}}));
  }
  std::vector<BigRational> coords(const El& x) const {
    std::vector<BigRational> v;
    for (const auto& m : monos) v.push_back(x.coefficient(m));
    return v;
  }
};

}  // namespace

PresentationReport presentation_check(const TripleProductRing& ring) {
  PresentationReport r;
  const int top = TripleProductRing::moduli_dimension;
  r.hilbert = hilbert_series(ring.moduli_presentation(), top);
  for (long v : r.hilbert) r.total += v;
  r.palindromic = true;
  for (int k = 0; k <= top; ++k) r.palindromic = r.palindromic && r.hilbert[k] == r.hilbert[top - k];

  auto taut = taut_classes(ring, 2);
  const El x = taut.at({0, 2});
  const El y = taut.at({2, 0});
  r.basis_change = x == ring.H2() &&
                   x.scaled(make_rational(49, 24)) - y.scaled(3) == ring.H1();
  const Monomial mh1 = mono(ring, {{"H1", 1}}), mh2 = mono(ring, {{"H2", 1}});
  r.generator_det = x.coefficient(mh1) * y.coefficient(mh2) - x.coefficient(mh2) * y.coefficient(mh1);

  // Kernel of Q[x, y]_k -> A^k(M) in the monomial basis x^{k-i} y^i, and the
  // part of it generated from degree k-1.
  Matrix<BigRational> prev_kernel;
  for (int k = 0;; ++k) {
    const long free_dim = k + 1;
    StandardBasis basis(ring, k);
    Matrix<BigRational> images;  // images[i] = coords of x^{k-i} y^i
    for (int i = 0; i <= k; ++i)
      images.push_back(basis.coords(normal_form(power(x, k - i) * power(y, i), ring.moduli_presentation())));
    // columns of the map are the monomials: transpose to rows = coordinates
    Matrix<BigRational> map(basis.monos.size(), std::vector<BigRational>(free_dim, 0));
    for (std::size_t c = 0; c < basis.monos.size(); ++c)
      for (int i = 0; i <= k; ++i) map[c][i] = images[i][c];
    Matrix<BigRational> kernel = nullspace(map, free_dim);
    const long image_dim = free_dim - static_cast<long>(kernel.size());
    if (k <= top) {
      r.free_dims.push_back(free_dim);
      r.kernel_dims.push_back(static_cast<long>(kernel.size()));
    }
    // x * v and y * v for v in the previous kernel, as vectors in degree k
    Matrix<BigRational> generated;
    for (const auto& v : prev_kernel) {
      std::vector<BigRational> by_x(free_dim, 0), by_y(free_dim, 0);
      for (int i = 0; i < k; ++i) {
        by_x[i] += v[i];
        by_y[i + 1] += v[i];
      }
      generated.push_back(std::move(by_x));
      generated.push_back(std::move(by_y));
    }
    const long new_generators = static_cast<long>(kernel.size()) - static_cast<long>(rank(generated));
    for (long g = 0; g < new_generators; ++g) r.relation_degrees.push_back(k);
    prev_kernel = std::move(kernel);
    // past the top degree the kernel is everything; once it is generated
    // from below, every higher degree is as well
    if (k > top && image_dim == 0 && new_generators == 0) break;
  }
  return r;
}

}  // namespace tautring::degthree
