#pragma once

// Tautological relations on M_{d,chi}: Chern characters of the pushforward
// Rr_*H(n), Newton's identities, the relations obtained by integrating
// against powers of beta, the leading coefficient tables and the
// generation check for all e_k(j) in degrees >= d-1.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautring/exactalg.hpp"
#include "tautring/gradedring.hpp"
#include "tautring/linear.hpp"

namespace tautring {

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GenerationFailure : public std::runtime_error {
 public:
  GenerationFailure(const std::string& what, int k, int j) : std::runtime_error(what), k_(k), j_(j) {}
  int k() const { return k_; }
  int j() const { return j_; }

 private:
  int k_;
  int j_;
};

/// Double index (k, j) of e_k(j); degree k+j-1.
struct Index {
  int k = 0;
  int j = 0;
  int degree() const { return k + j - 1; }
  friend bool operator==(const Index&, const Index&) = default;
};

/// Total order: by degree, then by k.
std::strong_ordering order_cmp(const Index& a, const Index& b);

/// The three generators of degree D in descending order:
/// e_{D+1}(0), e_D(1), e_{D-1}(2).
std::vector<Index> degree_targets(int D);

std::string index_name(const Index& i);

enum class ABKind { A, B };
enum class ChMode { closed_form, derive_grr };

/// Coefficients of e_{s+1}(0), e_s(1), e_{s-1}(2) in A_s or B_s.
template <class K>
std::vector<K> ab_coefficients(int n, ABKind kind);

template <class K>
struct ModuliParams {
  K d;
  K chi;
};

struct Provenance {
  int ell = 0;
  int n = 0;
  int beta_power = 0;
};

template <class K>
struct Relation {
  AlgebraElement<K> lhs;
  Provenance provenance;
  int degree() const { return provenance.ell - (2 - provenance.beta_power); }
};

/// Builds classes and relations in the algebra generated by the e_k(j)
/// tensored with H and beta (both with cube zero). Immutable after
/// construction; concurrent use is safe.
template <class K>
class RelationEngine {
 public:
  using El = AlgebraElement<K>;

  /// max_degree bounds every element; derive_grr needs max_degree >= s+2.
  /// length_cap >= 0 keeps only monomials with at most that many generator
  /// factors (length_cap = 1 keeps exactly the linear part).
  RelationEngine(ModuliParams<K> params, int max_degree, int length_cap = -1);

  const ContextPtr& context() const { return ctx_; }
  const ModuliParams<K>& params() const { return params_; }

  /// e_k(j) with the degree-0 values e_0(1) = -d, e_1(0) = chi - 3d/2
  /// substituted; negative-degree symbols are 0.
  El e(int k, int j) const;
  El beta(int exp = 1) const;
  El constant(const K& c) const;

  El ab_class(int s, int n, ABKind kind) const;

  /// ch_s(Rr_*H(n)) as an element in the e-symbols and beta.
  El ch_pushforward(int n, int s, ChMode mode = ChMode::closed_form) const;
  /// ch_0 .. ch_{s_max}.
  std::vector<El> ch_series(int n, int s_max, ChMode mode = ChMode::closed_form) const;

  /// sum over partitions m of ell of prod ((s-1)!)^{m_s}/m_s! ch_s^{m_s},
  /// the expression whose vanishing is the relation.
  El relation_expression(int ell, int n) const;

  /// Relation with lhs = coefficient of beta^{2-j} in relation_expression.
  Relation<K> make_relation(int ell, int n, int beta_power) const;

  /// All three beta-coefficients of relation_expression(ell, n).
  std::vector<Relation<K>> make_relations(int ell, int n) const;

 private:
  ModuliParams<K> params_;
  ContextPtr ctx_;
};

/// Partitions of ell as multiplicity vectors m[1..ell] (m[0] unused).
/// Cached; safe for concurrent use.
const std::vector<std::vector<int>>& partitions(int ell);

/// e_ell of the virtual Chern roots x_i of a bundle with
/// ch_s = -(1/s!) sum x_i^s, i.e. power sums p_s = -s! ch_s, by
/// enumeration of partitions of ell:
///   e_ell = (-1)^ell sum_m prod (-p_s)^{m_s} / (m_s! s^{m_s}).
template <class K>
AlgebraElement<K> newton_chern(int ell, const std::vector<AlgebraElement<K>>& ch);

/// Same quantity from power sums p[1..ell] directly.
template <class K>
AlgebraElement<K> elementary_from_power_sums(int ell, const std::vector<AlgebraElement<K>>& p);

/// Newton-Girard recursion k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i.
template <class K>
std::vector<AlgebraElement<K>> newton_girard(int ell, const std::vector<AlgebraElement<K>>& p);

/// Coefficient of the linear monomial e_k(j).
template <class K>
K linear_coefficient(const AlgebraElement<K>& x, const Index& i);

/// True iff in sum c_i R_i the linear coefficient of e_k(j) is nonzero and
/// every other generator symbol occurring is strictly below (k, j). Throws
/// DegreeMismatch when a relation is not homogeneous of degree k+j-1.
template <class K>
bool kills(const std::vector<std::pair<K, Relation<K>>>& combo, const Index& target);

/// Rows are the generators of one degree in descending order, columns
/// are n = 1, 2, 3.
template <class K>
struct CoeffTable {
  std::vector<std::string> row_labels;
  std::vector<Index> rows;  // empty for symbolic-in-d tables
  Matrix<K> entries;        // entries[row][n-1]
};

/// Step parameters of the four tables: ell = d + ell_offset, beta power.
struct StepSpec {
  int ell_offset;
  int beta_power;
};
StepSpec step_spec(int step, int step1_offset = 1);

/// Linear coefficients of the relations with ell = d + ell_offset and the
/// given beta power, fully symbolic in d and chi, scaled by 1/(ell-2)!.
CoeffTable<ParamFraction> leading_table_symbolic(int ell_offset, int beta_power);

/// The same table read off relations computed by an engine (concrete ell),
/// scaled by 1/(ell-2)!.
template <class K>
CoeffTable<K> leading_table(const RelationEngine<K>& engine, int ell, int beta_power);

/// Entries printed in the paper for each step (Step 4 has two rows).
CoeffTable<ParamFraction> reference_table(int step, int step1_offset = 1);

/// det of the Step-3 table and its closed form.
ParamFraction det_step3();
ParamFraction det_step3_closed_form();

struct Step4Result {
  ParamFraction ed1_coefficient;     // coefficient of e_d(1) in S
  ParamFraction ed1_0_coefficient;   // coefficient of e_{d+1}(0) in S
  ParamFraction expected;            // (d-chi)(d-chi+1)/2
};
Step4Result step4_combination();

struct Witness {
  Index target;
  std::vector<std::pair<BigRational, Provenance>> combination;
};

struct GenerationReport {
  int d = 0;
  int chi = 0;
  int max_degree = 0;
  bool full_relations = false;
  std::vector<Witness> witnesses;
};

struct GenerationOptions {
  /// When false the witnesses are found and checked on the linear parts of
  /// the relations only (monomials with two or more generator factors have
  /// all factors of lower degree and never affect the check).
  bool full_relations = true;
  /// 0: from TAUTRING_WORKERS, defaulting to hardware concurrency.
  unsigned workers = 0;
};

/// Exhibits, for every e_k(j) with d-1 <= k+j-1 <= max_degree, a
/// combination of relations (ell <= max_degree+2, n in {1,2,3}, beta
/// powers 0..2) that kills it. Throws GenerationFailure naming the first
/// target left unkilled.
GenerationReport verify_generation(int d, int chi, int max_degree, const GenerationOptions& opts = {});

unsigned worker_count();

extern template class RelationEngine<BigRational>;
extern template class RelationEngine<ParamFraction>;

}  // namespace tautring
