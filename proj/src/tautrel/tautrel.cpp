#include "tautring/tautrel.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <thread>

namespace tautring {

std::strong_ordering order_cmp(const Index& a, const Index& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.k <=> b.k;
}

std::vector<Index> degree_targets(int D) { return {{D + 1, 0}, {D, 1}, {D - 1, 2}}; }

std::string index_name(const Index& i) {
  return "e_" + std::to_string(i.k) + "(" + std::to_string(i.j) + ")";
}

template <class K>
std::vector<K> ab_coefficients(int n, ABKind kind) {
  const BigRational nn(n);
  if (kind == ABKind::A) {
    return {K(BigRational(1)), K(BigRational(make_rational(3, 2) - nn)),
            K(BigRational(nn * nn / 2 - make_rational(3, 2) * nn + 1))};
  }
  return {K(BigRational(1)), K(BigRational(make_rational(1, 2) - nn)), K(BigRational(nn * nn / 2 - nn / 2))};
}

template std::vector<BigRational> ab_coefficients<BigRational>(int, ABKind);
template std::vector<ParamFraction> ab_coefficients<ParamFraction>(int, ABKind);

namespace {

// Terms whose exponent of `var` is exactly `exp`, with that factor removed;
// other ambient factors are kept.
template <class K>
AlgebraElement<K> coefficient_of_power(const AlgebraElement<K>& x, GenSymbol var, int exp) {
  AlgebraElement<K> r(x.context());
  for (const auto& [m, c] : x.terms())
    if (m.exponent_of(var) == exp) r.add_term(m.without(var), c);
  return r;
}

template <class K>
AlgebraElement<K> generator_free_part(const AlgebraElement<K>& x) {
  AlgebraElement<K> r(x.context());
  for (const auto& [m, c] : x.terms())
    if (m.generator_length() == 0) r.add_term(m, c);
  return r;
}

BigRational factorial_q(int n) { return BigRational(factorial(static_cast<unsigned>(n))); }

// sum over partitions m of ell of prod_s (w_s)^{m_s} / m_s!, where
// w_s = weight(s) * x_s. Depth-first over s = ell..1 so that partial
// products with a common prefix are shared.
template <class K>
AlgebraElement<K> partition_sum(int ell, const std::vector<AlgebraElement<K>>& x,
                                const std::function<BigRational(int)>& weight) {
  const ContextPtr& ctx = x.at(1).context();
  AlgebraElement<K> result(ctx);
  std::vector<std::vector<AlgebraElement<K>>> powers(ell + 1);
  auto term = [&](int s, int m) -> const AlgebraElement<K>& {
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(AlgebraElement<K>::constant(ctx, K(1)));
    while (static_cast<int>(cache.size()) <= m) {
      const int k = static_cast<int>(cache.size());
      // cache[k] = (weight * x_s)^k / k!
      cache.push_back(alg_mul(cache.back(), x.at(s)).scaled(K(weight(s) / k)));
    }
    return cache[m];
  };
  std::function<void(int, int, const AlgebraElement<K>&)> rec = [&](int s, int remaining,
                                                                     const AlgebraElement<K>& partial) {
    if (partial.is_zero()) return;
    if (remaining == 0) {
      result += partial;
      return;
    }
    if (s == 1) {
      result += alg_mul(partial, term(1, remaining));
      return;
    }
    rec(s - 1, remaining, partial);
    for (int m = 1; m * s <= remaining; ++m) rec(s - 1, remaining - m * s, alg_mul(partial, term(s, m)));
  };
  rec(ell, ell, AlgebraElement<K>::constant(ctx, K(1)));
  return result;
}

}  // namespace

// ------------------------------------------------------------ partitions

const std::vector<std::vector<int>>& partitions(int ell) {
  static std::shared_mutex mutex;
  static std::map<int, std::vector<std::vector<int>>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> m(ell + 1, 0);
  std::function<void(int, int)> rec = [&](int s, int remaining) {
    if (remaining == 0) {
      out.push_back(m);
      return;
    }
    if (s == 0) return;
    for (int k = remaining / s; k >= 0; --k) {
      m[s] = k;
      rec(s - 1, remaining - k * s);
    }
    m[s] = 0;
  };
  if (ell >= 0) rec(ell, ell);
  std::unique_lock lock(mutex);
  return cache.try_emplace(ell, std::move(out)).first->second;
}

template <class K>
AlgebraElement<K> newton_chern(int ell, const std::vector<AlgebraElement<K>>& ch) {
  if (ell < 1 || static_cast<int>(ch.size()) <= ell) throw std::invalid_argument("newton_chern needs ch_1..ch_ell");
  // (-p_s)^{m}/(m! s^m) with -p_s = s! ch_s gives ((s-1)! ch_s)^m / m!
  AlgebraElement<K> sum = partition_sum<K>(ell, ch, [](int s) { return factorial_q(s - 1); });
  return ell % 2 == 0 ? sum : -sum;
}

template <class K>
AlgebraElement<K> elementary_from_power_sums(int ell, const std::vector<AlgebraElement<K>>& p) {
  if (ell < 0 || static_cast<int>(p.size()) <= ell) throw std::invalid_argument("need power sums p_1..p_ell");
  const ContextPtr& ctx = p.at(ell == 0 ? 0 : 1).context();
  AlgebraElement<K> sum(ctx);
  std::map<std::pair<int, int>, AlgebraElement<K>> pow_cache;
  for (const auto& m : partitions(ell)) {
    AlgebraElement<K> prod = AlgebraElement<K>::constant(ctx, K(1));
    BigRational scale(1);
    for (int s = 1; s <= ell; ++s) {
      if (m[s] == 0) continue;
      auto key = std::make_pair(s, m[s]);
      auto it = pow_cache.find(key);
      if (it == pow_cache.end()) it = pow_cache.emplace(key, power(-p[s], static_cast<unsigned>(m[s]))).first;
      prod = alg_mul(prod, it->second);
      BigRational sm(1);
      for (int i = 0; i < m[s]; ++i) sm *= s;
      scale /= factorial_q(m[s]) * sm;
    }
    sum += prod.scaled(K(scale));
  }
  return ell % 2 == 0 ? sum : -sum;
}

template <class K>
std::vector<AlgebraElement<K>> newton_girard(int ell, const std::vector<AlgebraElement<K>>& p) {
  if (ell < 0 || static_cast<int>(p.size()) <= ell) throw std::invalid_argument("need power sums p_1..p_ell");
  const ContextPtr& ctx = p.at(0).context();
  std::vector<AlgebraElement<K>> e;
  e.push_back(AlgebraElement<K>::constant(ctx, K(1)));
  for (int k = 1; k <= ell; ++k) {
    AlgebraElement<K> acc(ctx);
    for (int i = 1; i <= k; ++i) {
      AlgebraElement<K> t = alg_mul(e[k - i], p[i]);
      if (i % 2 == 1) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    e.push_back(acc.scaled(K(make_rational(1, k))));
  }
  return e;
}

template <class K>
K linear_coefficient(const AlgebraElement<K>& x, const Index& i) {
  return x.coefficient(Monomial::of(GenSymbol::e(i.k, i.j)));
}

template <class K>
bool kills(const std::vector<std::pair<K, Relation<K>>>& combo, const Index& target) {
  const int D = target.degree();
  if (combo.empty()) return false;
  AlgebraElement<K> sum(combo.front().second.lhs.context());
  for (const auto& [c, rel] : combo) {
    if (rel.degree() != D || !rel.lhs.is_homogeneous(D)) {
      throw DegreeMismatch("relation (ell=" + std::to_string(rel.provenance.ell) +
                           ", n=" + std::to_string(rel.provenance.n) +
                           ", beta_power=" + std::to_string(rel.provenance.beta_power) + ") has degree " +
                           std::to_string(rel.degree()) + ", target " + index_name(target) + " has degree " +
                           std::to_string(D));
    }
    sum += rel.lhs.scaled(c);
  }
  const Monomial lead = Monomial::of(GenSymbol::e(target.k, target.j));
  if (is_zero(sum.coefficient(lead))) return false;
  for (const auto& [m, c] : sum.terms()) {
    if (m == lead) continue;
    for (const auto& f : m.factors()) {
      if (!f.sym.is_generator()) return false;
      if (order_cmp(Index{f.sym.k(), f.sym.j()}, target) != std::strong_ordering::less) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ RelationEngine

template <class K>
RelationEngine<K>::RelationEngine(ModuliParams<K> params, int max_degree, int length_cap)
    : params_(std::move(params)), ctx_(make_context({{"H", 1, 3}, {"beta", 1, 3}}, max_degree, length_cap)) {}

template <class K>
AlgebraElement<K> RelationEngine<K>::e(int k, int j) const {
  if (k < 0 || j < 0 || j > 2 || k + j - 1 < 0) return El(ctx_);
  if (k == 0 && j == 1) return constant(-params_.d);
  if (k == 1 && j == 0) return constant(params_.chi - K(make_rational(3, 2)) * params_.d);
  return El::generator(ctx_, GenSymbol::e(k, j));
}

template <class K>
AlgebraElement<K> RelationEngine<K>::beta(int exp) const {
  return El::ambient(ctx_, "beta", exp);
}

template <class K>
AlgebraElement<K> RelationEngine<K>::constant(const K& c) const {
  return El::constant(ctx_, c);
}

template <class K>
AlgebraElement<K> RelationEngine<K>::ab_class(int s, int n, ABKind kind) const {
  if (s < 0) return El(ctx_);
  auto c = ab_coefficients<K>(n, kind);
  return e(s + 1, 0).scaled(c[0]) + e(s, 1).scaled(c[1]) + e(s - 1, 2).scaled(c[2]);
}

template <class K>
AlgebraElement<K> RelationEngine<K>::ch_pushforward(int n, int s, ChMode mode) const {
  if (mode == ChMode::closed_form) {
    El r = ab_class(s, n, ABKind::A) - ab_class(s, n, ABKind::B);
    r += beta() * ab_class(s - 1, n, ABKind::B);
    r -= (beta(2) * ab_class(s - 2, n, ABKind::B)).scaled(K(make_rational(1, 2)));
    return r;
  }
  return ch_series(n, s, mode).at(s);
}

template <class K>
std::vector<AlgebraElement<K>> RelationEngine<K>::ch_series(int n, int s_max, ChMode mode) const {
  std::vector<El> out;
  if (mode == ChMode::closed_form) {
    for (int s = 0; s <= s_max; ++s) out.push_back(ch_pushforward(n, s, mode));
    return out;
  }
  if (s_max + 2 > ctx_->max_degree()) throw std::invalid_argument("derive_grr needs max_degree >= s + 2");
  const int top = ctx_->max_degree();
  // ch(F^dual) = L + M H + N H^2
  El L(ctx_), M(ctx_), N(ctx_);
  for (int k = 0; k + 1 <= top; ++k) L += e(k, 2);
  for (int k = 0; k <= top; ++k) M += e(k, 1);
  for (int k = 1; k - 1 <= top; ++k) N += e(k, 0);
  El H = El::ambient(ctx_, "H");
  El H2 = El::ambient(ctx_, "H", 2);
  El ch_dual = L + M * H + N * H2;
  El one = constant(K(1));
  El td = one + H.scaled(K(make_rational(3, 2))) + H2;
  El oz = one - exp_trunc(-(H + beta()), top);
  El twist = exp_trunc(H.scaled(K(-n)), top);
  El integrand = ch_dual * oz * twist * td;
  El pushed = coefficient_of_power(integrand, ctx_->ambient("H"), 2);
  for (int s = 0; s <= s_max; ++s) out.push_back(homogeneous_part(pushed, s));
  return out;
}

template <class K>
AlgebraElement<K> RelationEngine<K>::relation_expression(int ell, int n) const {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  return partition_sum<K>(ell, ch_series(n, ell), [](int s) { return factorial_q(s - 1); });
}

template <class K>
Relation<K> RelationEngine<K>::make_relation(int ell, int n, int beta_power) const {
  if (beta_power < 0 || beta_power > 2) throw std::invalid_argument("beta power must be 0, 1 or 2");
  El expr = relation_expression(ell, n);
  Monomial b = beta_power == 2 ? Monomial() : ambient_monomial(*ctx_, "beta", 2 - beta_power);
  return Relation<K>{extract(expr, b), Provenance{ell, n, beta_power}};
}

template <class K>
std::vector<Relation<K>> RelationEngine<K>::make_relations(int ell, int n) const {
  El expr = relation_expression(ell, n);
  std::vector<Relation<K>> out;
  for (int bp = 0; bp <= 2; ++bp) {
    Monomial b = bp == 2 ? Monomial() : ambient_monomial(*ctx_, "beta", 2 - bp);
    out.push_back(Relation<K>{extract(expr, b), Provenance{ell, n, bp}});
  }
  return out;
}

template class RelationEngine<BigRational>;
template class RelationEngine<ParamFraction>;

#define TAUTRING_INSTANTIATE(K)                                                                            \
  template AlgebraElement<K> newton_chern<K>(int, const std::vector<AlgebraElement<K>>&);                   \
  template AlgebraElement<K> elementary_from_power_sums<K>(int, const std::vector<AlgebraElement<K>>&);     \
  template std::vector<AlgebraElement<K>> newton_girard<K>(int, const std::vector<AlgebraElement<K>>&);     \
  template K linear_coefficient<K>(const AlgebraElement<K>&, const Index&);                                 \
  template bool kills<K>(const std::vector<std::pair<K, Relation<K>>>&, const Index&);

TAUTRING_INSTANTIATE(BigRational)
TAUTRING_INSTANTIATE(ParamFraction)
#undef TAUTRING_INSTANTIATE

// ------------------------------------------------------------------ tables

StepSpec step_spec(int step, int step1_offset) {
  switch (step) {
    case 1: return {step1_offset, 2};
    case 2: return {1, 1};
    case 3: return {1, 0};
    case 4: return {2, 0};
  }
  throw std::invalid_argument("step must be 1, 2, 3 or 4");
}

namespace {

std::string symbolic_label(int shift, int j) {
  std::string sub = shift == 0 ? "d" : shift > 0 ? "{d+" + std::to_string(shift) + "}" : "{d-" + std::to_string(-shift) + "}";
  return "e_" + sub + "(" + std::to_string(j) + ")";
}

std::vector<std::string> symbolic_row_labels(int ell_offset, int beta_power) {
  const int shift = ell_offset - 2 + beta_power;  // D = d + shift
  return {symbolic_label(shift + 1, 0), symbolic_label(shift, 1), symbolic_label(shift - 1, 2)};
}

}  // namespace

CoeffTable<ParamFraction> leading_table_symbolic(int ell_offset, int beta_power) {
  if (beta_power < 0 || beta_power > 2) throw std::invalid_argument("beta power must be 0, 1 or 2");
  using El = AlgebraElement<ParamFraction>;
  const ParamFraction d = ParamFraction::d();
  const ParamFraction ell = d + ParamFraction(ell_offset);
  // Only generator-free pieces are needed, so a degree-2 engine suffices.
  RelationEngine<ParamFraction> engine({d, ParamFraction::chi()}, 2);
  const ContextPtr& ctx = engine.context();
  const ParamFraction factors[3] = {ell - ParamFraction(1), ParamFraction(1), ParamFraction(1) / (ell - ParamFraction(2))};
  const Monomial extract_at = beta_power == 2 ? Monomial() : ambient_monomial(*ctx, "beta", 2 - beta_power);

  CoeffTable<ParamFraction> table;
  table.row_labels = symbolic_row_labels(ell_offset, beta_power);
  table.entries.assign(3, std::vector<ParamFraction>(3));
  for (int n = 1; n <= 3; ++n) {
    // [t^r] exp(kappa_1 t + kappa_2 t^2), kappa_s the generator-free part of ch_s
    El kappa1 = generator_free_part(engine.ch_pushforward(n, 1));
    El kappa2 = generator_free_part(engine.ch_pushforward(n, 2));
    const El S[3] = {El::constant(ctx, 1), kappa1, (kappa1 * kappa1).scaled(ParamFraction(make_rational(1, 2))) + kappa2};
    const auto a = ab_coefficients<ParamFraction>(n, ABKind::A);
    const auto b = ab_coefficients<ParamFraction>(n, ABKind::B);
    for (int row = 0; row < 3; ++row) {
      ParamFraction entry;
      for (int r = 0; r <= 2; ++r) {
        // degree-D part of ch_{ell-r}, with D = ell - 2 + beta_power
        const int shift = r - 2 + beta_power;  // = (ell - r) - D, negated
        El C(ctx);
        if (shift == 0) C += El::constant(ctx, a[row] - b[row]);
        if (shift == -1) C += engine.beta().scaled(b[row]);
        if (shift == -2) C -= engine.beta(2).scaled(b[row] / ParamFraction(2));
        if (C.is_zero()) continue;
        El prod = extract(S[r] * C, extract_at);
        entry += factors[r] * prod.constant_term();
      }
      table.entries[row][n - 1] = entry;
    }
  }
  return table;
}

template <class K>
CoeffTable<K> leading_table(const RelationEngine<K>& engine, int ell, int beta_power) {
  const int D = ell - (2 - beta_power);
  CoeffTable<K> table;
  table.rows = degree_targets(D);
  for (const auto& i : table.rows) table.row_labels.push_back(index_name(i));
  table.entries.assign(3, std::vector<K>(3));
  const K scale = K(BigRational(1) / factorial_q(ell - 2));
  for (int n = 1; n <= 3; ++n) {
    Relation<K> rel = engine.make_relation(ell, n, beta_power);
    for (int row = 0; row < 3; ++row) table.entries[row][n - 1] = linear_coefficient(rel.lhs, table.rows[row]) * scale;
  }
  return table;
}

template CoeffTable<BigRational> leading_table<BigRational>(const RelationEngine<BigRational>&, int, int);
template CoeffTable<ParamFraction> leading_table<ParamFraction>(const RelationEngine<ParamFraction>&, int, int);

CoeffTable<ParamFraction> reference_table(int step, int step1_offset) {
  const StepSpec spec = step_spec(step, step1_offset);
  CoeffTable<ParamFraction> t;
  t.row_labels = symbolic_row_labels(spec.ell_offset, spec.beta_power);
  auto row = [](const char* a, const char* b, const char* c) {
    return std::vector<ParamFraction>{parse_param_fraction(a), parse_param_fraction(b), parse_param_fraction(c)};
  };
  switch (step) {
    case 1: {
      const ParamFraction l1 = ParamFraction::d() + ParamFraction(step1_offset - 1);
      t.entries = {{0, 0, 0}, {l1, l1, l1}, {0, -l1, ParamFraction(-2) * l1}};
      break;
    }
    case 2:
      t.entries = {row("d", "d", "d"), row("chi - 3/2*d", "chi - 3/2*d", "chi - 3/2*d"),
                   row("0", "d - chi", "d - 2*chi")};
      break;
    case 3:
      t.entries = {row("chi - 3/2*d", "chi - 1/2*d", "chi + 1/2*d"),
                   row("(-2*chi^2 + 6*chi*d - 5*d^2 + d)/(4*(1 - d))",
                       "(-2*chi^2 + 6*chi*d - 4*chi - 3*d^2 + 3*d)/(4*(1 - d))",
                       "(-2*chi^2 + 6*chi*d - 8*chi + 3*d^2 - 3*d)/(4*(1 - d))"),
                   row("0", "(chi^2 - 2*chi*d + chi + d^2 - d)/(2*(1 - d))",
                       "(2*chi^2 - 2*chi*d + 4*chi - d^2 + d)/(2*(1 - d))")};
      break;
    case 4:
      t.entries = {row("chi - 3/2*d - 1/2", "chi - d/2 - 1/2", "chi + d/2 - 1/2"),
                   row("(5*d^2 - 6*chi*d + 3*d + 2*chi^2 - 2*chi)/(4*d)",
                       "(3*d^2 - 6*chi*d + 3*d + 2*chi^2 - 2*chi)/(4*d)",
                       "(-3*d^2 - 6*chi*d + 3*d + 2*chi^2 - 2*chi)/(4*d)")};
      t.row_labels.resize(2);
      break;
  }
  return t;
}

ParamFraction det_step3() { return determinant(leading_table_symbolic(1, 0).entries); }

ParamFraction det_step3_closed_form() {
  return parse_param_fraction("chi*(d - 2)*(d - chi)*(d - 2*chi)/(4*(1 - d)^2)");
}

Step4Result step4_combination() {
  const auto t = leading_table_symbolic(2, 0);
  const ParamFraction c1 = parse_param_fraction("chi - d/2 - 1/2");
  const ParamFraction c2 = parse_param_fraction("chi - 3/2*d - 1/2");
  Step4Result r;
  r.ed1_0_coefficient = c1 * t.entries[0][0] - c2 * t.entries[0][1];
  r.ed1_coefficient = c1 * t.entries[1][0] - c2 * t.entries[1][1];
  r.expected = parse_param_fraction("(d - chi)*(d - chi + 1)/2");
  return r;
}

// -------------------------------------------------------- verify_generation

unsigned worker_count() {
  if (const char* env = std::getenv("TAUTRING_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

GenerationReport verify_generation(int d, int chi, int max_degree, const GenerationOptions& opts) {
  if (d < 4) throw std::invalid_argument("verify_generation needs d >= 4");
  if (chi <= 0 || chi >= d) throw std::invalid_argument("verify_generation needs 0 < chi < d");
  if (max_degree < d - 1) throw std::invalid_argument("max degree must be at least d - 1");

  const int ell_min = d + 1;
  const int ell_max = max_degree + 2;
  RelationEngine<BigRational> engine({BigRational(d), BigRational(chi)}, ell_max, opts.full_relations ? -1 : 1);

  struct Task {
    int ell;
    int n;
  };
  std::vector<Task> tasks;
  for (int ell = ell_min; ell <= ell_max; ++ell)
    for (int n = 1; n <= 3; ++n) tasks.push_back({ell, n});
  std::vector<std::vector<Relation<BigRational>>> produced(tasks.size());
  parallel_for(tasks.size(), opts.workers ? opts.workers : worker_count(),
               [&](std::size_t i) { produced[i] = engine.make_relations(tasks[i].ell, tasks[i].n); });

  GenerationReport report;
  report.d = d;
  report.chi = chi;
  report.max_degree = max_degree;
  report.full_relations = opts.full_relations;

  for (int D = d - 1; D <= max_degree; ++D) {
    std::vector<const Relation<BigRational>*> candidates;
    for (const auto& group : produced)
      for (const auto& rel : group)
        if (rel.degree() == D) candidates.push_back(&rel);
    const auto targets = degree_targets(D);
    Matrix<BigRational> rows;
    for (const auto* rel : candidates) {
      std::vector<BigRational> row;
      for (const auto& t : targets) row.push_back(linear_coefficient(rel->lhs, t));
      rows.push_back(std::move(row));
    }
    const auto ech = tracked_echelon(rows);
    for (std::size_t col = 0; col < targets.size(); ++col) {
      const Index& target = targets[col];
      auto it = std::find(ech.pivot_cols.begin(), ech.pivot_cols.end(), col);
      if (it == ech.pivot_cols.end()) {
        throw GenerationFailure("no relation kills " + index_name(target) + " for (d, chi) = (" +
                                    std::to_string(d) + ", " + std::to_string(chi) + ")",
                                target.k, target.j);
      }
      const std::size_t pivot = static_cast<std::size_t>(it - ech.pivot_cols.begin());
      Witness w;
      w.target = target;
      std::vector<std::pair<BigRational, Relation<BigRational>>> combo;
      for (std::size_t r = 0; r < candidates.size(); ++r) {
        const BigRational& c = ech.combos[pivot][r];
        if (c == 0) continue;
        w.combination.emplace_back(c, candidates[r]->provenance);
        combo.emplace_back(c, *candidates[r]);
      }
      if (!kills(combo, target)) {
        throw GenerationFailure("witness for " + index_name(target) + " does not kill it", target.k, target.j);
      }
      report.witnesses.push_back(std::move(w));
    }
  }
  return report;
}

}  // namespace tautring
