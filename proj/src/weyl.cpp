#include "perdom/weyl.hpp"

#include <algorithm>
#include <unordered_set>

#include "perdom/errors.hpp"

namespace perdom {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVector QMatrix::apply(const QVector& v) const {
  if (static_cast<int>(v.size()) != n_) throw DimensionMismatch("matrix/vector size mismatch");
  QVector out(n_);
  for (int r = 0; r < n_; ++r) {
    Rational s;
    for (int c = 0; c < n_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix product size mismatch");
  const int n = a.n_;
  QMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const Rational& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < n; ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

int inversion_count(const RootSystemData& rs, const QMatrix& m) {
  int count = 0;
  for (const auto& a : rs.positive_roots())
    if (rs.root_sign(m.apply(a)) < 0) ++count;
  return count;
}

bool preserves_roots(const RootSystemData& rs, const QMatrix& m) {
  std::unordered_set<QVector, QVectorHash> roots;
  for (const auto& a : rs.positive_roots()) {
    roots.insert(a);
    roots.insert(Rational(-1) * a);
  }
  for (const auto& a : rs.positive_roots()) {
    if (!roots.count(m.apply(a))) return false;
    if (!roots.count(m.apply(Rational(-1) * a))) return false;
  }
  return true;
}

namespace {

QMatrix reflection_matrix(const RootSystemData& rs, int i) {
  const int n = rs.ambient_dim();
  QMatrix m = QMatrix::identity(n);
  const QVector& a = rs.simple_root(i);
  const QVector& av = rs.simple_coroot(i);
  // column c is s_i(e_c) = e_c - av[c] * a
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!a[r].is_zero() && !av[c].is_zero()) m(r, c) -= av[c] * a[r];
  return m;
}

void check_index(const RootSystemData& rs, int i) {
  if (i < 0 || i >= rs.rank())
    throw IndexOutOfRange("simple reflection index " + std::to_string(i + 1) +
                          " outside 1.." + std::to_string(rs.rank()));
}

// Positive roots of the parabolic subsystem spanned by `subset`.
int parabolic_positive_count(const RootSystemData& rs, const std::vector<int>& subset,
                             Rational* order) {
  std::vector<bool> in(rs.rank(), false);
  for (int i : subset) in[i] = true;
  int count = 0;
  Rational ord(1);
  const auto& coeffs = rs.positive_root_coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    bool inside = true;
    for (int i = 0; i < rs.rank() && inside; ++i)
      if (!in[i] && !coeffs[k][i].is_zero()) inside = false;
    if (!inside) continue;
    ++count;
    // |W| = prod over positive roots of (ht + 1) / ht.
    const int h = rs.height(static_cast<int>(k));
    ord *= Rational(h + 1, h);
  }
  if (order) *order = ord;
  return count;
}

}  // namespace

WeylElement WeylElement::identity(const RootSystemData& rs) {
  WeylElement w;
  w.matrix_ = QMatrix::identity(rs.ambient_dim());
  w.word_ = std::vector<int>{};
  w.length_ = 0;
  return w;
}

WeylElement WeylElement::from_matrix(const RootSystemData& rs, QMatrix m) {
  if (m.size() != rs.ambient_dim()) throw DimensionMismatch("matrix does not fit root system");
  WeylElement w;
  w.length_ = inversion_count(rs, m);
  w.matrix_ = std::move(m);
  return w;
}

WeylElement WeylElement::from_word(const RootSystemData& rs, const std::vector<int>& word) {
  QMatrix m = QMatrix::identity(rs.ambient_dim());
  for (int i : word) {
    check_index(rs, i);
    m = m * reflection_matrix(rs, i);
  }
  WeylElement w = from_matrix(rs, std::move(m));
  if (w.length_ == static_cast<int>(word.size())) w.word_ = word;
  return w;
}

WeylElement multiply(const RootSystemData& rs, const WeylElement& a, const WeylElement& b) {
  WeylElement w = WeylElement::from_matrix(rs, a.matrix() * b.matrix());
  if (a.word() && b.word() && w.length() == a.length() + b.length()) {
    std::vector<int> word = *a.word();
    word.insert(word.end(), b.word()->begin(), b.word()->end());
    return WeylElement::from_word(rs, word);
  }
  return w;
}

WeylElement inverse(const RootSystemData& rs, const WeylElement& w) {
  if (w.word()) {
    std::vector<int> rev(w.word()->rbegin(), w.word()->rend());
    return WeylElement::from_word(rs, rev);
  }
  // Orthogonal: the inverse is the transpose.
  const QMatrix& m = w.matrix();
  QMatrix t(m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) t(r, c) = m(c, r);
  return WeylElement::from_matrix(rs, std::move(t));
}

WeylElement simple_reflection(const RootSystemData& rs, int i) {
  check_index(rs, i);
  return WeylElement::from_word(rs, {i});
}

QVector reflect(const RootSystemData& rs, int i, const QVector& v) {
  check_index(rs, i);
  Rational c = dot(v, rs.simple_coroot(i));
  if (c.is_zero()) return v;
  return v - c * rs.simple_root(i);
}

WeylElement longest_element(const RootSystemData& rs) {
  std::vector<int> all(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) all[i] = i;
  return longest_element(rs, all);
}

WeylElement longest_element(const RootSystemData& rs, const std::vector<int>& subset) {
  // Push a vector regular for W_J to its antidominant position, recording
  // the reflections used; their product is the longest element of W_J.
  QVector v(rs.ambient_dim());
  for (int i : subset) {
    check_index(rs, i);
    v = v + rs.coweight(i);
  }
  std::vector<int> applied;
  for (;;) {
    int next = -1;
    for (int i : subset)
      if (dot(v, rs.simple_coroot(i)).sign() > 0) {
        next = i;
        break;
      }
    if (next < 0) break;
    v = reflect(rs, next, v);
    applied.push_back(next);
  }
  // v = s_{a_k} ... s_{a_1} rho, so w = s_{a_k} ... s_{a_1}.
  std::vector<int> word(applied.rbegin(), applied.rend());
  return WeylElement::from_word(rs, word);
}

std::uint64_t weyl_group_order(const RootSystemData& rs) {
  std::vector<int> all(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) all[i] = i;
  Rational ord;
  parabolic_positive_count(rs, all, &ord);
  return static_cast<std::uint64_t>(ord.num());
}

ParabolicData parabolic_of_subset(const std::vector<int>& fixed, const RootSystemData& rs) {
  ParabolicData pd;
  pd.fixed = fixed;
  std::sort(pd.fixed.begin(), pd.fixed.end());
  for (int i : pd.fixed) check_index(rs, i);
  pd.w_order = weyl_group_order(rs);
  Rational wp;
  pd.wp_length = parabolic_positive_count(rs, pd.fixed, &wp);
  if (!wp.is_integer()) throw std::logic_error("non-integral parabolic order");
  pd.wp_order = static_cast<std::uint64_t>(wp.num());
  pd.w0_length = static_cast<int>(rs.positive_roots().size());
  pd.w0p_length = pd.w0_length - pd.wp_length;
  return pd;
}

ParabolicData parabolic_of(const QVector& nu, const RootSystemData& rs) {
  auto n = decompose_in_coweights(nu, rs);
  std::vector<int> fixed;
  for (int i = 0; i < rs.rank(); ++i) {
    if (n[i].sign() < 0)
      throw NotDominant("coefficient n_" + std::to_string(i + 1) + " = " + n[i].str() +
                        " is negative");
    if (n[i].is_zero()) fixed.push_back(i);
  }
  return parabolic_of_subset(fixed, rs);
}

WeylElement longest_min_coset_rep(const ParabolicData& pd, const RootSystemData& rs) {
  return multiply(rs, longest_element(rs), longest_element(rs, pd.fixed));
}

void walk_orbit(const RootSystemData& rs, const QVector& dominant,
                std::optional<std::uint64_t> max_count,
                const std::function<void(const OrbitPoint&)>& visit) {
  if (!is_dominant(dominant, rs)) throw NotDominant("orbit walk needs a dominant vector");
  std::vector<OrbitPoint> level{{0, dominant, {}}};
  std::uint64_t produced = 1;
  if (max_count && produced > *max_count)
    throw BudgetExceeded("coset enumeration budget of " + std::to_string(*max_count) +
                         " exceeded");
  const int n = rs.rank();
  while (!level.empty()) {
    std::vector<OrbitPoint> next;
    std::unordered_set<QVector, QVectorHash> seen;
    for (const auto& p : level) {
      visit(p);
      for (int i = 0; i < n; ++i) {
        Rational c = dot(p.image, rs.simple_coroot(i));
        if (c.sign() <= 0) continue;
        QVector img = p.image - c * rs.simple_root(i);
        if (!seen.insert(img).second) continue;
        if (max_count && ++produced > *max_count)
          throw BudgetExceeded("coset enumeration budget of " + std::to_string(*max_count) +
                               " exceeded");
        std::vector<int> word;
        word.reserve(p.word.size() + 1);
        word.push_back(i);
        word.insert(word.end(), p.word.begin(), p.word.end());
        next.push_back({p.length + 1, std::move(img), std::move(word)});
      }
    }
    std::sort(next.begin(), next.end(),
              [](const OrbitPoint& a, const OrbitPoint& b) { return a.image < b.image; });
    level = std::move(next);
  }
}

void for_each_min_coset_rep(const ParabolicData& pd, const RootSystemData& rs,
                            std::optional<std::uint64_t> max_count,
                            const std::function<void(const WeylElement&)>& visit) {
  std::vector<bool> in(rs.rank(), false);
  for (int i : pd.fixed) in[i] = true;
  QVector key(rs.ambient_dim());
  for (int i = 0; i < rs.rank(); ++i)
    if (!in[i]) key = key + rs.coweight(i);
  walk_orbit(rs, key, max_count, [&](const OrbitPoint& p) {
    visit(WeylElement::from_word(rs, p.word));
  });
}

std::vector<WeylElement> enumerate_min_coset_reps(const ParabolicData& pd,
                                                  const RootSystemData& rs,
                                                  std::optional<std::uint64_t> max_count) {
  std::vector<WeylElement> out;
  for_each_min_coset_rep(pd, rs, max_count, [&](const WeylElement& w) { out.push_back(w); });
  return out;
}

}  // namespace perdom
