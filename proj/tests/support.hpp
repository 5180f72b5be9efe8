#pragma once

#include <random>
#include <vector>

#include "perdom/rational.hpp"
#include "perdom/rootdata.hpp"

namespace perdom::testing {

// A random dominant vector per factor, sum of n_i omega_i with n_i drawn
// from a small pool that includes zero, so proper parabolics show up often.
inline std::vector<QVector> random_dominant(const GroupDatum& g, std::mt19937_64& rng) {
  static const Rational pool[] = {0, 0, 0, 1, 1, 2, 3, Rational(1, 2), Rational(3, 2), Rational(5, 3)};
  std::uniform_int_distribution<int> pick(0, std::size(pool) - 1);
  const auto& base = g.base();
  std::vector<QVector> tuple;
  for (int j = 0; j < g.res_degree(); ++j) {
    QVector v = zero_vector(base.ambient_dim());
    for (int i = 0; i < base.rank(); ++i) v = v + pool[pick(rng)] * base.coweight(i);
    tuple.push_back(std::move(v));
  }
  return tuple;
}

}  // namespace perdom::testing
