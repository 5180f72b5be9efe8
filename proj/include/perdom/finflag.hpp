#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "perdom/classify.hpp"
#include "perdom/rational.hpp"
#include "perdom/rootdata.hpp"
#include "perdom/weyl.hpp"

namespace perdom {

/*
  The field F_{q^m}, q = p^e, with the subfield k = F_q singled out.

  Elements are integers 0 .. Q-1 read as base-p coefficient vectors of a
  polynomial in a primitive root g. Multiplication goes through log/antilog
  tables and addition through Zech logarithms (1 + g^n = g^{Z(n)}), so every
  operation is a table lookup.
*/
class FiniteField {
 public:
  using Elem = std::uint32_t;

  // Throws ValidationError if p is not prime or e, m < 1; BudgetExceeded
  // if q^m exceeds max_size.
  FiniteField(int p, int e, int m, std::uint32_t max_size = 1u << 16);

  int characteristic() const { return p_; }
  int base_degree() const { return e_; }
  int extension_degree() const { return m_; }
  std::uint32_t size() const { return size_; }       // q^m
  std::uint32_t base_size() const { return q_; }     // q

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % order_];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const;
  // x -> x^q, generating Gal(F_{q^m} / F_q).
  Elem frobenius(Elem a) const { return pow(a, q_); }
  bool in_base(Elem a) const { return frobenius(a) == a; }
  // Elements fixed by x -> x^{q^d}: the subfield F_{q^d}, d | m.
  std::vector<Elem> subfield(int d) const;

  const std::vector<Elem>& base_elements() const { return base_elems_; }
  const std::vector<Elem>& elements() const { return all_elems_; }

 private:
  int p_, e_, m_;
  std::uint32_t q_, size_, order_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int64_t> zech_;  // -1 when 1 + g^n = 0
  std::uint32_t half_ = 0;          // log of -1
  std::vector<Elem> base_elems_, all_elems_;
};

using FVec = std::vector<FiniteField::Elem>;

// A subspace of F^n held as its reduced row echelon basis (unique).
struct Subspace {
  int ambient = 0;
  std::vector<FVec> rows;
  std::vector<int> pivots;

  int dim() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.rows == b.rows;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    return a.rows < b.rows;
  }
};

Subspace span(const FiniteField& ff, int ambient, std::vector<FVec> rows);
int rank(const FiniteField& ff, int ambient, std::vector<FVec> rows);
int intersection_dim(const FiniteField& ff, const Subspace& a, const Subspace& b);
// Entrywise x -> x^{q^k}.
Subspace frobenius(const FiniteField& ff, const Subspace& s, int k = 1);

// Gaussian binomial [n choose k]_Q.
std::uint64_t gaussian_binomial(int n, int k, std::uint64_t Q);

// All k-dimensional subspaces of F^n whose echelon entries come from
// `scalars` (the full field, or a subfield). Echelon order: pivot sets
// lexicographically, then free entries as an odometer.
void enumerate_subspaces(const FiniteField& ff, int n, int k, const std::vector<FiniteField::Elem>& scalars,
                         const std::function<void(const Subspace&)>& visit);

// A point of the type A partial flag variety: 0 < F^{y_1} < ... < F^{y_{r-1}}
// with the given strictly increasing dims; F^{y_r} = V is implicit.
struct FlagPoint {
  std::vector<int> dims;
  std::vector<Subspace> steps;

  friend bool operator==(const FlagPoint&, const FlagPoint&) = default;
};

FlagPoint frobenius(const FiniteField& ff, const FlagPoint& x, int k = 1);

struct FlagType {
  std::vector<Rational> jumps;  // y_1 > ... > y_r
  std::vector<int> dims;        // n_1, n_1 + n_2, ..., excluding l + 1
};
FlagType flag_type_of(const QVector& type_a_nu);

// Number of points of the flag variety over a field with Q elements.
std::uint64_t flag_count(int ell, const std::vector<int>& dims, std::uint64_t Q);

struct FinflagBudget {
  std::uint64_t max_points = 5'000'000;
  std::uint64_t max_subspaces = 200'000;
  std::uint64_t max_group = 2'000'000;
};

// Every F_{q^m}-point exactly once. Throws BudgetExceeded.
void enumerate_flags(const FiniteField& ff, int ell, const std::vector<int>& dims,
                     const std::function<void(const FlagPoint&)>& visit,
                     const FinflagBudget& budget = {});

// Weighted average of the jumps on a subspace U: cumulative_dims[b] is
// dim(U cap F^{y_b}), the last entry equal to u_dim. Throws ZeroDimensional.
Rational slope(int u_dim, const std::vector<int>& cumulative_dims,
               const std::vector<Rational>& jumps);

/*
  Position of a flag relative to the reference flag g.E_1 < g.E_2 < ...,
  E_a the span of the first a standard vectors (g.E_a = span of the first a
  columns of g). blocks[a] is the first step gaining dimension at a; image
  is the vector w.nu for the minimal coset representative w, whose
  permutation (c -> w(c)) is also recorded.
*/
struct RelativePosition {
  std::vector<int> blocks;
  QVector image;
  std::vector<int> permutation;

  WeylElement to_weyl(const RootSystemData& type_a) const;
};

// g is given by columns; every entry must lie in the base field. Throws
// SingularTransform.
RelativePosition relative_position(const FiniteField& ff, const FlagPoint& x,
                                   const std::vector<FVec>& g_columns, const QVector& nu);

struct GSample {
  enum class Mode { All, Sample } mode = Mode::All;
  std::size_t count = 0;
  std::uint64_t seed = 1;

  static GSample all() { return {}; }
  static GSample sample(std::size_t n, std::uint64_t seed = 1) {
    return {Mode::Sample, n, seed};
  }
};

/*
  Both semistability tests for one (field, l, nu), with the F_q-rational
  subspaces of V precomputed.

  subspace_test: slope(U) <= slope(V) for every rational U, 0 < U < V.
  strata_test:   for every rational g and vertex i, the relative position w
                 of x against g satisfies (omega_i, w nu) <= 0. With
                 GSample::All, g runs over representatives of G(k)/P_i(k),
                 one per rational i-dimensional subspace.
*/
class SemistabilityOracle {
 public:
  SemistabilityOracle(const FiniteField& ff, int ell, QVector nu, const FinflagBudget& budget = {});

  const FlagType& type() const { return type_; }
  const std::vector<Subspace>& rational_subspaces(int dim) const { return rational_.at(dim); }

  bool subspace_test(const FlagPoint& x) const;
  bool strata_test(const FlagPoint& x, const GSample& sample = GSample::all()) const;
  // Reference flag columns for a rational subspace: its basis followed by the
  // standard vectors off its pivots.
  std::vector<FVec> coset_representative(const Subspace& u) const;

 private:
  const FiniteField& ff_;
  int ell_;
  QVector nu_;
  FlagType type_;
  Rational ambient_slope_;
  std::vector<std::vector<Subspace>> rational_;  // by dimension
  RootSystemData type_a_;
};

bool is_semistable_subspace_test(const FlagPoint& x, const QVector& nu, const FiniteField& ff);
bool is_semistable_strata_test(const FlagPoint& x, const QVector& nu, const FiniteField& ff,
                               const GSample& sample = GSample::all());

struct SemistableCount {
  std::uint64_t total = 0;
  std::uint64_t semistable = 0;
};

// Counts with the subspace test.
SemistableCount count_semistable(const FiniteField& ff, int ell, const QVector& nu,
                                 const FinflagBudget& budget = {});

// |Omega^(l+1)(F_{q^m})|: points of P^l not on any F_q-rational hyperplane,
// prod_{k=0}^{l} (q^m - q^k) / (q^m - 1).
std::uint64_t drinfeld_point_count(std::uint64_t q, int m, int ell);

// Comparison of the two tests over every point of one flag variety.
struct AgreementReport {
  std::uint64_t total = 0;
  std::uint64_t semistable_subspace = 0;
  std::uint64_t semistable_strata = 0;
  std::uint64_t disagreements = 0;
  std::vector<FlagPoint> unstable_examples;  // first few
  std::vector<FlagPoint> disagreement_examples;
};
AgreementReport compare_tests(const FiniteField& ff, int ell, const QVector& nu,
                              const FinflagBudget& budget = {}, std::size_t keep_examples = 3);

/*
  Restriction of scalars of PGL_{l+1} from k' = F_{q^t} to k = F_q, points
  over the working field ff (which must contain k'). A point is a t-tuple of
  flags; factor j is the j-th Galois conjugate, so the k-points of the flag
  variety are the tuples (x, sigma x, ..., sigma^{t-1} x) for x defined over
  k'. Unstable iff some k'-rational subspace U of dim i satisfies
  sum_j (omega_i, w_j nu_j) > 0, where w_j is the position of the j-th
  factor against a reference flag through sigma^j(U).

  Both routes are run: slope sums over sigma^j(U), and relative positions.
*/
struct ResPoint {
  std::vector<FlagPoint> factors;
};
struct ResCensus {
  std::uint64_t total = 0;
  std::uint64_t semistable_subspace = 0;
  std::uint64_t semistable_strata = 0;
  std::uint64_t disagreements = 0;
  std::vector<ResPoint> unstable;  // by the subspace route
};
ResCensus res_census(const FiniteField& ff, int t, int ell, const NuTuple& nu,
                     const FinflagBudget& budget = {});

}  // namespace perdom
