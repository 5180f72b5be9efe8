#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "perdom/rational.hpp"
#include "perdom/rootdata.hpp"
#include "perdom/weyl.hpp"

namespace perdom {

// GIT slope of the Schubert cell B w P/P against omega_i: -(omega_i, w nu).
// The cell lies in Y_i iff the slope is negative.
Rational slope_on_cell(const WeylElement& w, const RelativeCoweight& omega, const QVector& nu);

struct VertexStratum {
  int vertex = 0;                     // 0-based relative simple root
  std::optional<int> dim;             // empty when Y_i is empty
  std::optional<WeylElement> witness; // first maximizing cell in walk order
  QVector witness_image;              // witness applied to nu
  std::uint64_t cell_count = 0;       // cells of W^P lying in Y_i
};

// Maximum of l(w) over w in W^P with (omega_i, w nu) > 0. nu is the
// absolute (concatenated) vector. Throws NotDominant, BudgetExceeded.
VertexStratum dim_Y_i(const GroupDatum& g, const QVector& nu, int vertex,
                      std::optional<std::uint64_t> max_cells = {});

struct StrataReport {
  QVector nu;  // absolute
  ParabolicData parabolic;
  int dim_F = 0;
  std::vector<VertexStratum> per_vertex;
  std::optional<int> dim_Y;    // empty when Y is empty
  std::optional<int> codim_Y;  // empty means infinite (Y empty)

  bool codim_one() const { return codim_Y && *codim_Y == 1; }
};

// Walks W^P once and evaluates every vertex on each cell.
StrataReport strata_report(const GroupDatum& g, const std::vector<QVector>& nu_tuple,
                           std::optional<std::uint64_t> max_cells = {});

// Factors (0-based copies of the base system) in which the block of w has
// length strictly below that of w0^P, read off from image = w nu.
std::vector<int> deficient_factors(const GroupDatum& g, const QVector& nu, const QVector& image);

// Pairs (vertex, simple root beta) with (omega_i, s_beta w0 nu) > 0: the
// reflection-side criterion for a codimension-one stratum.
struct CodimOnePair {
  int vertex;
  int simple_root;
};
std::vector<CodimOnePair> codim_one_pairs(const GroupDatum& g, const QVector& nu);

}  // namespace perdom
