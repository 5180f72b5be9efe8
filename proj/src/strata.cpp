#include "perdom/strata.hpp"

#include <algorithm>

#include "perdom/errors.hpp"

namespace perdom {

Rational slope_on_cell(const WeylElement& w, const RelativeCoweight& omega, const QVector& nu) {
  return -dot(omega.vector, w.apply(nu));
}

namespace {

struct Walker {
  const GroupDatum& g;
  const QVector& nu;
  std::vector<RelativeCoweight> omegas;
  std::vector<VertexStratum> strata;
  std::vector<std::vector<int>> witness_words;

  Walker(const GroupDatum& g_, const QVector& nu_, const std::vector<int>& vertices)
      : g(g_), nu(nu_) {
    auto all = relative_coweights(g);
    for (int v : vertices) {
      if (v < 0 || v >= g.relative_rank())
        throw IndexOutOfRange("vertex " + std::to_string(v + 1) + " outside 1.." +
                              std::to_string(g.relative_rank()));
      omegas.push_back(all[v]);
      VertexStratum s;
      s.vertex = v;
      strata.push_back(std::move(s));
    }
    witness_words.resize(omegas.size());
  }

  void run(std::optional<std::uint64_t> max_cells) {
    walk_orbit(g.absolute(), nu, max_cells, [&](const OrbitPoint& p) {
      for (std::size_t k = 0; k < omegas.size(); ++k) {
        if (dot(omegas[k].vector, p.image).sign() <= 0) continue;
        auto& s = strata[k];
        ++s.cell_count;
        if (!s.dim || p.length > *s.dim) {
          s.dim = p.length;
          s.witness_image = p.image;
          witness_words[k] = p.word;
        }
      }
    });
    for (std::size_t k = 0; k < strata.size(); ++k)
      if (strata[k].dim) strata[k].witness = WeylElement::from_word(g.absolute(), witness_words[k]);
  }
};

void check_nu(const GroupDatum& g, const QVector& nu) {
  if (static_cast<int>(nu.size()) != g.absolute().ambient_dim())
    throw DimensionMismatch("nu has length " + std::to_string(nu.size()) + ", expected " +
                            std::to_string(g.absolute().ambient_dim()));
}

}  // namespace

VertexStratum dim_Y_i(const GroupDatum& g, const QVector& nu, int vertex,
                      std::optional<std::uint64_t> max_cells) {
  check_nu(g, nu);
  Walker w(g, nu, {vertex});
  w.run(max_cells);
  return std::move(w.strata.front());
}

StrataReport strata_report(const GroupDatum& g, const std::vector<QVector>& nu_tuple,
                           std::optional<std::uint64_t> max_cells) {
  StrataReport r;
  r.nu = g.absolute_vector(nu_tuple);
  r.parabolic = parabolic_of(r.nu, g.absolute());
  r.dim_F = r.parabolic.w0p_length;
  std::vector<int> vertices(g.relative_rank());
  for (int i = 0; i < g.relative_rank(); ++i) vertices[i] = i;
  Walker w(g, r.nu, vertices);
  w.run(max_cells);
  r.per_vertex = std::move(w.strata);
  for (const auto& s : r.per_vertex)
    if (s.dim && (!r.dim_Y || *s.dim > *r.dim_Y)) r.dim_Y = s.dim;
  if (r.dim_Y) r.codim_Y = r.dim_F - *r.dim_Y;
  return r;
}

std::vector<int> deficient_factors(const GroupDatum& g, const QVector& nu, const QVector& image) {
  const auto& abs = g.absolute();
  const auto& coeffs = abs.positive_root_coefficients();
  const int l = abs.base_rank();
  std::vector<int> have(abs.copies(), 0), full(abs.copies(), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    int copy = -1;
    for (int i = 0; i < abs.rank(); ++i)
      if (!coeffs[k][i].is_zero()) {
        copy = i / l;
        break;
      }
    const QVector& a = abs.positive_roots()[k];
    if (dot(a, nu).sign() != 0) ++full[copy];
    if (dot(a, image).sign() < 0) ++have[copy];
  }
  std::vector<int> out;
  for (int j = 0; j < abs.copies(); ++j)
    if (have[j] < full[j]) out.push_back(j);
  return out;
}

std::vector<CodimOnePair> codim_one_pairs(const GroupDatum& g, const QVector& nu) {
  check_nu(g, nu);
  const auto& abs = g.absolute();
  QVector w0nu = longest_element(abs).apply(nu);
  std::vector<CodimOnePair> out;
  for (const auto& om : relative_coweights(g))
    for (int b = 0; b < abs.rank(); ++b)
      if (dot(om.vector, reflect(abs, b, w0nu)).sign() > 0) out.push_back({om.index, b});
  return out;
}

}  // namespace perdom
