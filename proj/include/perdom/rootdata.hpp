#pragma once

#include <string>
#include <vector>

#include "perdom/rational.hpp"

namespace perdom {

enum class Kind { A, B, C, D, E6, E7, E8, F4, G2 };

std::string to_string(Kind k);
Kind parse_kind(const std::string& s);  // throws IllegalType

/*
  An exact-rational realization of a reduced root system in Bourbaki
  coordinates: A_l sits in the sum-zero hyperplane of Q^{l+1}, E6/E7 inside
  Q^8, G2 inside the sum-zero plane of Q^3.

  A RootSystemData may also be a power of a simple system (t disjoint copies
  in block coordinates); this is the absolute root system of a restriction of
  scalars. Indices are 0-based throughout; simple root (copy j, node i) has
  index j * base_rank + i.

  Immutable after construction.
*/
class RootSystemData {
 public:
  // Throws IllegalType for an out-of-range (kind, rank) pair. D3 is accepted
  // as an alias of A3 and recorded in notes().
  static RootSystemData build(Kind kind, int rank);

  // t block-diagonal copies of a simple system.
  static RootSystemData power(const RootSystemData& base, int copies);

  Kind kind() const { return kind_; }
  int base_rank() const { return base_rank_; }
  int base_ambient_dim() const { return base_dim_; }
  int copies() const { return copies_; }
  int rank() const { return base_rank_ * copies_; }
  int ambient_dim() const { return base_dim_ * copies_; }

  const QVector& simple_root(int i) const { return simple_roots_.at(i); }
  const QVector& simple_coroot(int i) const { return simple_coroots_.at(i); }
  // Fundamental coweight: (omega_i, alpha_j^vee) = delta_ij, lying in the
  // span of the roots.
  const QVector& coweight(int i) const { return coweights_.at(i); }
  const std::vector<QVector>& simple_roots() const { return simple_roots_; }
  const std::vector<QVector>& coweights() const { return coweights_; }

  // (alpha_i, alpha_j)
  const Rational& cartan_pairing(int i, int j) const { return pairings_.at(i).at(j); }
  // (omega_i, omega_j)
  const Rational& coweight_gram(int i, int j) const { return coweight_gram_.at(i).at(j); }

  // Opposition involution: -w0 omega_i = omega_{tau(i)}.
  int opposition(int i) const { return opposition_.at(i); }
  const std::vector<int>& opposition() const { return opposition_; }

  // Positive roots sorted by height, then lexicographically.
  const std::vector<QVector>& positive_roots() const { return positive_roots_; }
  // Coefficients of a positive root in the simple-root basis.
  const std::vector<std::vector<Rational>>& positive_root_coefficients() const {
    return positive_coeffs_;
  }
  int height(int positive_root_index) const { return heights_.at(positive_root_index); }

  // Sign of a root (+1 / -1), decided by pairing with the sum of coweights.
  int root_sign(const QVector& root) const;
  // Which copy a simple root index belongs to.
  int copy_of(int simple_index) const { return simple_index / base_rank_; }

  const std::vector<std::string>& notes() const { return notes_; }
  std::string name() const;

 private:
  RootSystemData() = default;
  void finish();  // coroots, coweights, Gram matrices, positive roots

  Kind kind_ = Kind::A;
  int base_rank_ = 0;
  int base_dim_ = 0;
  int copies_ = 1;
  std::vector<QVector> simple_roots_;
  std::vector<QVector> simple_coroots_;
  std::vector<QVector> coweights_;
  std::vector<std::vector<Rational>> pairings_;
  std::vector<std::vector<Rational>> coweight_gram_;
  std::vector<int> opposition_;
  std::vector<QVector> positive_roots_;
  std::vector<std::vector<Rational>> positive_coeffs_;
  std::vector<int> heights_;
  QVector rho_coweight_;
  std::vector<std::string> notes_;
};

// Standard Euclidean pairing of the realization. Throws DimensionMismatch.
Rational inner_product(const QVector& u, const QVector& v);

// alpha^vee = 2 alpha / (alpha, alpha)
QVector coroot_of(const QVector& root);

// n_i = (nu, alpha_i^vee). nu is dominant iff every n_i >= 0.
std::vector<Rational> decompose_in_coweights(const QVector& nu, const RootSystemData& rs);
bool is_dominant(const QVector& nu, const RootSystemData& rs);

enum class Form { Split, UnitaryOuter };
std::string to_string(Form f);

/*
  A k-simple adjoint group Res_{k'/k} G' described combinatorially: the
  absolutely simple G' (its root system and whether it is split or the
  outer form of type A), and the degree t = [k':k].

  The absolute root system is t copies of the base; relative simple roots are
  indexed 0..d-1 and orbit(i) lists the absolute simple roots restricting to
  the i-th one.
*/
class GroupDatum {
 public:
  // Throws ValidationError for UnitaryOuter outside type A_l, l >= 2, or
  // for t < 1.
  GroupDatum(RootSystemData base, Form form, int res_degree);

  const RootSystemData& base() const { return base_; }
  const RootSystemData& absolute() const { return absolute_; }
  Form form() const { return form_; }
  int res_degree() const { return t_; }
  int relative_rank() const { return static_cast<int>(orbits_.size()); }
  const std::vector<int>& orbit(int i) const { return orbits_.at(i); }
  bool is_split_type_a() const { return form_ == Form::Split && base_.kind() == Kind::A; }

  // Concatenates a t-tuple of base vectors into one absolute vector.
  QVector absolute_vector(const std::vector<QVector>& tuple) const;
  std::string name() const;

 private:
  RootSystemData base_;
  Form form_;
  int t_;
  RootSystemData absolute_;
  std::vector<std::vector<int>> orbits_;
};

struct RelativeCoweight {
  int index;      // 0-based relative simple root
  QVector vector; // in the absolute ambient space
};

// omega_i = sum over the Galois orbit Psi(alpha_i) of absolute coweights.
std::vector<RelativeCoweight> relative_coweights(const GroupDatum& g);

}  // namespace perdom
