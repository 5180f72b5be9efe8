#pragma once

#include <string>
#include <vector>

#include "perdom/rational.hpp"
#include "perdom/rootdata.hpp"

namespace perdom {

/*
  The conjugacy-class datum nu = (nu_1, ..., nu_t), one dominant vector per
  factor of Res_{k'/k}. For type A each entry is in normal form: entries
  weakly decreasing with coordinate sum zero.
*/
class NuTuple {
 public:
  NuTuple() = default;
  explicit NuTuple(std::vector<QVector> entries) : entries_(std::move(entries)) {}

  const std::vector<QVector>& entries() const { return entries_; }
  const QVector& operator[](std::size_t j) const { return entries_.at(j); }
  std::size_t size() const { return entries_.size(); }

  // Throws MalformedNu (type A normal form violated, wrong count or length)
  // or NotDominant.
  void validate(const GroupDatum& g) const;

  // Every entry negated and reversed: x -> (-x_{l+1}, ..., -x_1).
  NuTuple dual() const;
  NuTuple scaled(const Rational& c) const;

  friend bool operator==(const NuTuple&, const NuTuple&) = default;

 private:
  std::vector<QVector> entries_;
};

enum class Verdict { Trivial, DrinfeldType };
// Which jump of nu_j is responsible: x_2 < 0 (the first step is a line) or
// x_l > 0 (the last step is a hyperplane).
enum class Side { None, FirstStep, LastStep };

std::string to_string(Side s);

// Inequality values for one factor j of a type A datum.
struct FactorCheck {
  int factor = 0;        // 0-based
  Rational x2;           // x_2^{[j]}
  Rational xl;           // x_l^{[j]}
  Rational first_sum;    // sum_{i != j} x_1^{[i]}
  Rational last_sum;     // sum_{i != j} x_{l+1}^{[i]}
  bool first_candidate = false;  // x_2 < 0
  bool last_candidate = false;   // x_l > 0
  bool first_holds = false;      // first_sum < -x_2
  bool last_holds = false;       // last_sum > -x_l
};

struct Classification {
  Verdict verdict = Verdict::Trivial;
  int ell = 0;              // absolute rank of G'
  int factor = -1;          // 0-based j when DrinfeldType
  bool codim_one = false;
  Side side = Side::None;
  bool over_extension = false;  // t > 1: the answer is pi1(Omega over k')
  std::vector<FactorCheck> details;  // empty unless G' is split of type A
  std::vector<int> near_misses;      // candidate factors whose sum condition fails
  std::string reason;
};

// Closed-form decision; no Weyl group enumeration. Throws MalformedNu,
// NotDominant.
Classification classify(const GroupDatum& g, const NuTuple& nu);

// nu_j in run-length form (y_1^{(n_1)}, ..., y_r^{(n_r)}), y_1 > ... > y_r.
struct JumpProfile {
  std::vector<Rational> jumps;
  std::vector<int> multiplicities;
};
JumpProfile jump_profile(const QVector& type_a_nu);

struct SsLocusDescription {
  Side side = Side::None;
  int factor = 0;          // 0-based
  int ell = 0;
  int step = 0;            // 1 or r (1-based index of the jump of multiplicity one)
  Rational jump;           // y_1 or y_r
  int subspace_dim = 0;    // dim of F^{y_1} (a line) or F^{y_{r-1}} (a hyperplane)
  std::string target;      // "Omega^(l+1)" or "dual Omega^(l+1)"
  int fiber_dim = 0;       // dim of the fibres of the projection to the target
  std::vector<int> other_factor_dims;  // flag variety dims of the untouched factors
  bool over_extension = false;

  std::string text() const;
};

// Throws NotCodimOne when c is Trivial.
SsLocusDescription describe_ss_locus(const GroupDatum& g, const NuTuple& nu,
                                     const Classification& c);

// dim of the type A partial flag variety of nu: sum_{a<b} n_a n_b.
int flag_dimension(const JumpProfile& p);

}  // namespace perdom
