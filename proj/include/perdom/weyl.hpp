#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "perdom/rational.hpp"
#include "perdom/rootdata.hpp"

namespace perdom {

// Dense square matrix over Q acting on column vectors.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}
  static QMatrix identity(int n);

  int size() const { return n_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  const Rational& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * n_ + c];
  }
  QVector apply(const QVector& v) const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> data_;
};

/*
  An element of the Weyl group of a RootSystemData, stored as its exact
  matrix on the ambient space with the length cached. The word, when
  present, is a reduced expression: word {i1, ..., ik} means s_i1 ... s_ik.
*/
class WeylElement {
 public:
  static WeylElement identity(const RootSystemData& rs);
  // Length is recomputed by counting inversions.
  static WeylElement from_matrix(const RootSystemData& rs, QMatrix m);
  // Assumes nothing about reducedness; the stored word is kept only if its
  // length equals the inversion count.
  static WeylElement from_word(const RootSystemData& rs, const std::vector<int>& word);

  const QMatrix& matrix() const { return matrix_; }
  const std::optional<std::vector<int>>& word() const { return word_; }
  int length() const { return length_; }
  QVector apply(const QVector& v) const { return matrix_.apply(v); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  QMatrix matrix_;
  std::optional<std::vector<int>> word_;
  int length_ = 0;
};

// Number of positive roots sent to negative roots by m.
int inversion_count(const RootSystemData& rs, const QMatrix& m);
// m permutes the root system setwise.
bool preserves_roots(const RootSystemData& rs, const QMatrix& m);

WeylElement multiply(const RootSystemData& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystemData& rs, const WeylElement& w);

// s_i(v) = v - (v, alpha_i^vee) alpha_i. Throws IndexOutOfRange.
WeylElement simple_reflection(const RootSystemData& rs, int i);
QVector reflect(const RootSystemData& rs, int i, const QVector& v);

// Longest element of W (subset = all) or of the parabolic W_J for a subset J.
WeylElement longest_element(const RootSystemData& rs);
WeylElement longest_element(const RootSystemData& rs, const std::vector<int>& subset);

std::uint64_t weyl_group_order(const RootSystemData& rs);

struct ParabolicData {
  std::vector<int> fixed;       // Delta_P: simple roots with (nu, alpha^vee) = 0
  std::uint64_t w_order = 0;    // |W|
  std::uint64_t wp_order = 0;   // |W_P|
  int w0_length = 0;            // l(w0) = |Phi^+|
  int w0p_length = 0;           // l(w0^P) = dim of the flag variety
  int wp_length = 0;            // l(w_P)

  std::uint64_t coset_count() const { return w_order / wp_order; }
};

// Throws NotDominant.
ParabolicData parabolic_of(const QVector& nu, const RootSystemData& rs);
// Parabolic data for an explicit subset of simple roots.
ParabolicData parabolic_of_subset(const std::vector<int>& fixed, const RootSystemData& rs);

// w0^P = w0 * w_P
WeylElement longest_min_coset_rep(const ParabolicData& pd, const RootSystemData& rs);

/*
  One point of the orbit W.v of a dominant vector v whose stabilizer is
  exactly W_P: image = w v for the minimal coset representative w, whose
  length and reduced word are recorded.
*/
struct OrbitPoint {
  int length;
  QVector image;
  std::vector<int> word;
};

/*
  Breadth-first walk over W^P via the orbit of `dominant`. A point v at
  length L has the successors s_i v for every i with (alpha_i, v) > 0, all of
  length L + 1. Each level is sorted by image before being visited, so the
  order is deterministic. Throws BudgetExceeded once more than max_count
  points would be produced.
*/
void walk_orbit(const RootSystemData& rs, const QVector& dominant,
                std::optional<std::uint64_t> max_count,
                const std::function<void(const OrbitPoint&)>& visit);

// Every w in W^P exactly once, ordered by length then by the image of
// sum_{j not in Delta_P} omega_j.
void for_each_min_coset_rep(const ParabolicData& pd, const RootSystemData& rs,
                            std::optional<std::uint64_t> max_count,
                            const std::function<void(const WeylElement&)>& visit);
std::vector<WeylElement> enumerate_min_coset_reps(const ParabolicData& pd,
                                                  const RootSystemData& rs,
                                                  std::optional<std::uint64_t> max_count = {});

}  // namespace perdom
