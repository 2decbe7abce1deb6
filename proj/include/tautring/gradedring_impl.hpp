#pragma once

// Out-of-line template definitions for gradedring.hpp.

#include <functional>

namespace tautring {

template <class K>
std::string AlgebraElement<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coef = canonical_string(c);
    std::string piece;
    if (m.is_one()) {
      piece = coef.find(' ') == std::string::npos ? coef : "(" + coef + ")";
    } else if (coef == "1") {
      piece = m.to_string(*ctx_);
    } else if (coef == "-1") {
      piece = "-" + m.to_string(*ctx_);
    } else if (coef.find(' ') != std::string::npos) {
      piece = "(" + coef + ")*" + m.to_string(*ctx_);
    } else {
      piece = coef + "*" + m.to_string(*ctx_);
    }
    if (first) {
      out += piece;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
    first = false;
  }
  return out;
}

template <class K>
QuotientPresentation<K>::QuotientPresentation(ContextPtr ctx, std::vector<GenSymbol> variables,
                                              std::vector<RewriteRule<K>> rules)
    : ctx_(std::move(ctx)), variables_(std::move(variables)), rules_(std::move(rules)) {
  for (const auto& rule : rules_) {
    if (rule.exponent <= 0) throw std::invalid_argument("rewrite rule with non-positive exponent");
    for (const auto& [m, c] : rule.replacement.terms()) {
      if (m.exponent_of(rule.var) >= rule.exponent) {
        throw std::invalid_argument("rewrite rule for " + ctx_->symbol_name(rule.var) +
                                    " does not lower its exponent");
      }
    }
  }
}

template <class K>
AlgebraElement<K> normal_form(const AlgebraElement<K>& x, const QuotientPresentation<K>& pres) {
  const ContextPtr& ctx = x.context();
  AlgebraElement<K> cur = x;
  for (;;) {
    bool changed = false;
    AlgebraElement<K> next(ctx);
    for (const auto& [m, c] : cur.terms()) {
      const RewriteRule<K>* hit = nullptr;
      for (const auto& rule : pres.rules()) {
        if (m.exponent_of(rule.var) >= rule.exponent) {
          hit = &rule;
          break;
        }
      }
      if (hit == nullptr) {
        next.add_term(m, c);
        continue;
      }
      changed = true;
      const int left = m.exponent_of(hit->var) - hit->exponent;
      Monomial rest = m.without(hit->var);
      if (left > 0) {
        Monomial tmp;
        if (!Monomial::multiply(*ctx, rest, Monomial::of(hit->var, left), tmp)) continue;
        rest = tmp;
      }
      next += alg_mul(AlgebraElement<K>::monomial(ctx, rest, c), hit->replacement);
    }
    if (!changed) return next;
    cur = std::move(next);
  }
}

template <class K>
std::vector<long> hilbert_series(const QuotientPresentation<K>& pres, int max_degree) {
  std::vector<long> dims(max_degree + 1, 0);
  const auto& vars = pres.variables();
  std::vector<int> bound(vars.size(), -1);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].family() == Family::ambient) {
      const int nil = pres.context()->decl(vars[i]).nilpotency;
      if (nil > 0) bound[i] = nil - 1;
    }
    for (const auto& rule : pres.rules()) {
      if (rule.var == vars[i] && (bound[i] < 0 || rule.exponent - 1 < bound[i])) bound[i] = rule.exponent - 1;
    }
  }
  std::function<void(std::size_t, int)> walk = [&](std::size_t idx, int deg) {
    if (idx == vars.size()) {
      ++dims[deg];
      return;
    }
    const int step = vars[idx].degree();
    for (int e = 0;; ++e) {
      if (bound[idx] >= 0 && e > bound[idx]) break;
      const int nd = deg + e * step;
      if (nd > max_degree) break;
      walk(idx + 1, nd);
      if (step == 0) break;
    }
  };
  walk(0, 0);
  return dims;
}

}  // namespace tautring
