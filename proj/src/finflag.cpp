#include "perdom/finflag.hpp"

#include <algorithm>
#include <random>

#include "perdom/errors.hpp"

namespace perdom {

using Elem = FiniteField::Elem;

// ---------------------------------------------------------------------------
// Field

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Coefficient-wise sum of two base-p digit strings of length n.
std::uint32_t add_digits(std::uint32_t a, std::uint32_t b, int p, int n) {
  if (p == 2) return a ^ b;
  std::uint32_t out = 0, scale = 1;
  for (int i = 0; i < n; ++i) {
    std::uint32_t d = (a % p + b % p) % p;
    out += d * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

// Multiply by x modulo the monic polynomial x^n + sum c_i x^i, where
// `lower` encodes (c_0, ..., c_{n-1}) in base p.
std::uint32_t times_x(std::uint32_t a, std::uint32_t lower, int p, int n, std::uint32_t top_scale) {
  std::uint32_t top = a / top_scale;
  std::uint32_t shifted = (a % top_scale) * p;
  if (top == 0) return shifted;
  // subtract top * c
  std::uint32_t out = 0, scale = 1;
  for (int i = 0; i < n; ++i) {
    int d = static_cast<int>(shifted % p) - static_cast<int>((top * (lower % p)) % p);
    if (d < 0) d += p;
    out += static_cast<std::uint32_t>(d) * scale;
    shifted /= p;
    lower /= p;
    scale *= p;
  }
  return out;
}

}  // namespace

FiniteField::FiniteField(int p, int e, int m, std::uint32_t max_size) : p_(p), e_(e), m_(m) {
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1 || m < 1) throw ValidationError("field degrees must be positive");
  const int n = e * m;
  std::uint64_t size = 1, q = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::uint64_t>(p);
    if (i < e) q *= static_cast<std::uint64_t>(p);
    if (size > max_size)
      throw BudgetExceeded("field of size " + std::to_string(p) + "^" + std::to_string(n) +
                           " exceeds the bound " + std::to_string(max_size));
  }
  size_ = static_cast<std::uint32_t>(size);
  q_ = static_cast<std::uint32_t>(q);
  order_ = size_ - 1;
  const std::uint32_t top_scale = size_ / p;

  // Search for a primitive polynomial: x must have multiplicative order q^m - 1.
  std::uint32_t lower = 0;
  bool found = false;
  for (std::uint32_t c = 1; c < size_ && !found; ++c) {
    if (c % p == 0) continue;  // constant term must be nonzero
    std::uint32_t v = 1;
    std::uint32_t k = 0;
    do {
      v = times_x(v, c, p, n, top_scale);
      ++k;
    } while (v != 1 && k < order_);
    if (v == 1 && k == order_) {
      lower = c;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no primitive polynomial found");

  exp_.resize(order_);
  log_.assign(size_, 0);
  std::uint32_t v = 1;
  for (std::uint32_t k = 0; k < order_; ++k) {
    exp_[k] = v;
    log_[v] = k;
    v = times_x(v, lower, p, n, top_scale);
  }
  zech_.resize(order_);
  for (std::uint32_t k = 0; k < order_; ++k) {
    std::uint32_t s = add_digits(exp_[k], 1, p, n);
    zech_[k] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
  }
  half_ = p == 2 ? 0 : order_ / 2;

  all_elems_.resize(size_);
  for (std::uint32_t i = 0; i < size_; ++i) all_elems_[i] = i;
  base_elems_ = subfield(1);
}

Elem FiniteField::add(Elem a, Elem b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t la = log_[a], lb = log_[b];
  const std::uint32_t d = (lb + order_ - la) % order_;
  const std::int64_t z = zech_[d];
  if (z < 0) return 0;
  return exp_[(la + static_cast<std::uint32_t>(z)) % order_];
}

Elem FiniteField::neg(Elem a) const {
  if (a == 0 || p_ == 2) return a;
  return exp_[(log_[a] + half_) % order_];
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(order_ - log_[a]) % order_];
}

Elem FiniteField::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * k) % order_)];
}

std::vector<Elem> FiniteField::subfield(int d) const {
  if (d < 1 || m_ % d != 0)
    throw ValidationError("F_{q^" + std::to_string(d) + "} is not a subfield of F_{q^" +
                          std::to_string(m_) + "}");
  std::uint64_t sub = 1;
  for (int i = 0; i < d; ++i) sub *= q_;
  std::vector<Elem> out{0};
  const std::uint64_t step = order_ / (sub - 1);
  for (std::uint64_t k = 0; k + 1 < sub; ++k) out.push_back(exp_[k * step]);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Linear algebra

Subspace span(const FiniteField& ff, int ambient, std::vector<FVec> rows) {
  Subspace s;
  s.ambient = ambient;
  std::size_t r = 0;
  for (int col = 0; col < ambient && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Elem inv = ff.inv(rows[r][col]);
    for (auto& x : rows[r]) x = ff.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Elem f = ff.neg(rows[i][col]);
      for (int c = 0; c < ambient; ++c)
        if (rows[r][c] != 0) rows[i][c] = ff.add(rows[i][c], ff.mul(f, rows[r][c]));
    }
    s.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  s.rows = std::move(rows);
  return s;
}

int rank(const FiniteField& ff, int ambient, std::vector<FVec> rows) {
  return span(ff, ambient, std::move(rows)).dim();
}

int intersection_dim(const FiniteField& ff, const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw DimensionMismatch("subspaces of different spaces");
  if (a.dim() == 0 || b.dim() == 0) return 0;
  std::vector<FVec> rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return a.dim() + b.dim() - rank(ff, a.ambient, std::move(rows));
}

Subspace frobenius(const FiniteField& ff, const Subspace& s, int k) {
  std::vector<FVec> rows = s.rows;
  for (int i = 0; i < k; ++i)
    for (auto& r : rows)
      for (auto& x : r) x = ff.frobenius(x);
  return span(ff, s.ambient, std::move(rows));
}

FlagPoint frobenius(const FiniteField& ff, const FlagPoint& x, int k) {
  FlagPoint y;
  y.dims = x.dims;
  for (const auto& s : x.steps) y.steps.push_back(frobenius(ff, s, k));
  return y;
}

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t Q) {
  if (k < 0 || k > n) return 0;
  // Pascal rule [n,k] = [n-1,k-1] + Q^k [n-1,k], saturating at UINT64_MAX.
  const unsigned __int128 cap = UINT64_MAX;
  std::vector<unsigned __int128> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      unsigned __int128 qj = 1;
      for (int s = 0; s < j && qj <= cap; ++s) qj *= Q;
      qj = std::min(cap, qj);
      unsigned __int128 v = row[j] != 0 && qj > cap / row[j] ? cap : row[j - 1] + qj * row[j];
      row[j] = std::min(v, cap);
    }
  }
  return static_cast<std::uint64_t>(row[k]);
}

void enumerate_subspaces(const FiniteField& ff, int n, int k, const std::vector<Elem>& scalars,
                         const std::function<void(const Subspace&)>& visit) {
  (void)ff;
  if (k < 0 || k > n) return;
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::pair<int, int>> free;  // (row, col)
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) free.emplace_back(r, c);
    std::vector<std::size_t> odo(free.size(), 0);
    for (;;) {
      Subspace s;
      s.ambient = n;
      s.pivots = piv;
      s.rows.assign(k, FVec(n, 0));
      for (int r = 0; r < k; ++r) s.rows[r][piv[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f)
        s.rows[free[f].first][free[f].second] = scalars[odo[f]];
      visit(s);
      std::size_t f = 0;
      while (f < free.size() && ++odo[f] == scalars.size()) odo[f++] = 0;
      if (f == free.size()) break;
    }
    // next pivot combination
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------
// Flags

FlagType flag_type_of(const QVector& nu) {
  JumpProfile p = jump_profile(nu);
  FlagType t;
  t.jumps = p.jumps;
  int acc = 0;
  for (std::size_t b = 0; b + 1 < p.multiplicities.size(); ++b) {
    acc += p.multiplicities[b];
    t.dims.push_back(acc);
  }
  return t;
}

std::uint64_t flag_count(int ell, const std::vector<int>& dims, std::uint64_t Q) {
  const int n = ell + 1;
  unsigned __int128 total = 1;
  int prev = 0;
  for (int d : dims) {
    total *= gaussian_binomial(n - prev, d - prev, Q);
    if (total > UINT64_MAX) return UINT64_MAX;
    prev = d;
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

void check_dims(int ell, const std::vector<int>& dims) {
  int prev = 0;
  for (int d : dims) {
    if (d <= prev || d > ell)
      throw ValidationError("flag dimensions must increase strictly within 1.." +
                            std::to_string(ell));
    prev = d;
  }
}

void extend_flag(const FiniteField& ff, int n, const std::vector<int>& dims, FlagPoint& cur,
                 const std::function<void(const FlagPoint&)>& visit) {
  const std::size_t s = cur.steps.size();
  if (s == dims.size()) {
    visit(cur);
    return;
  }
  Subspace prev;
  prev.ambient = n;
  if (s > 0) prev = cur.steps.back();
  std::vector<bool> is_piv(n, false);
  for (int c : prev.pivots) is_piv[c] = true;
  std::vector<int> comp;
  for (int c = 0; c < n; ++c)
    if (!is_piv[c]) comp.push_back(c);
  const int k = dims[s] - prev.dim();
  enumerate_subspaces(ff, static_cast<int>(comp.size()), k, ff.elements(), [&](const Subspace& w) {
    std::vector<FVec> rows = prev.rows;
    for (const auto& wr : w.rows) {
      FVec v(n, 0);
      for (std::size_t c = 0; c < comp.size(); ++c) v[comp[c]] = wr[c];
      rows.push_back(std::move(v));
    }
    cur.steps.push_back(span(ff, n, std::move(rows)));
    extend_flag(ff, n, dims, cur, visit);
    cur.steps.pop_back();
  });
}

}  // namespace

void enumerate_flags(const FiniteField& ff, int ell, const std::vector<int>& dims,
                     const std::function<void(const FlagPoint&)>& visit,
                     const FinflagBudget& budget) {
  check_dims(ell, dims);
  const std::uint64_t count = flag_count(ell, dims, ff.size());
  if (count > budget.max_points)
    throw BudgetExceeded("flag variety has " + std::to_string(count) + " points, budget " +
                         std::to_string(budget.max_points));
  FlagPoint cur;
  cur.dims = dims;
  extend_flag(ff, ell + 1, dims, cur, visit);
}

Rational slope(int u_dim, const std::vector<int>& cumulative_dims,
               const std::vector<Rational>& jumps) {
  if (u_dim < 1) throw ZeroDimensional("slope of the zero subspace");
  if (cumulative_dims.size() != jumps.size())
    throw DimensionMismatch("one cumulative dimension per jump expected");
  Rational s;
  int prev = 0;
  for (std::size_t b = 0; b < jumps.size(); ++b) {
    s += jumps[b] * Rational(cumulative_dims[b] - prev);
    prev = cumulative_dims[b];
  }
  return s / Rational(u_dim);
}

// ---------------------------------------------------------------------------
// Relative position

WeylElement RelativePosition::to_weyl(const RootSystemData& type_a) const {
  const int n = static_cast<int>(permutation.size());
  if (type_a.kind() != Kind::A || type_a.copies() != 1 || type_a.ambient_dim() != n)
    throw DimensionMismatch("relative position needs the root system A_" + std::to_string(n - 1));
  QMatrix m(n);
  for (int c = 0; c < n; ++c) m(permutation[c], c) = 1;
  return WeylElement::from_matrix(type_a, std::move(m));
}

RelativePosition relative_position(const FiniteField& ff, const FlagPoint& x,
                                   const std::vector<FVec>& g_columns, const QVector& nu) {
  const int n = static_cast<int>(nu.size());
  if (static_cast<int>(g_columns.size()) != n)
    throw DimensionMismatch("reference frame needs " + std::to_string(n) + " columns");
  for (const auto& c : g_columns)
    if (static_cast<int>(c.size()) != n) throw DimensionMismatch("column of wrong length");
  if (rank(ff, n, g_columns) != n) throw SingularTransform("reference frame is not invertible");
  const FlagType type = flag_type_of(nu);
  if (x.dims != type.dims) throw DimensionMismatch("flag type does not match nu");
  const int r = static_cast<int>(type.jumps.size());

  std::vector<int> prev_row(r, 0);
  std::vector<int> cur_row(r, 0);
  RelativePosition pos;
  pos.blocks.resize(n);
  pos.image.resize(n);
  std::vector<FVec> first;
  for (int a = 1; a <= n; ++a) {
    first.push_back(g_columns[a - 1]);
    Subspace ea = span(ff, n, first);
    for (int b = 0; b + 1 < r; ++b) cur_row[b] = intersection_dim(ff, ea, x.steps[b]);
    cur_row[r - 1] = a;
    int blk = 0;
    while (cur_row[blk] == prev_row[blk]) ++blk;
    pos.blocks[a - 1] = blk;
    pos.image[a - 1] = type.jumps[blk];
    prev_row = cur_row;
  }
  std::vector<int> start(r, 0);
  for (int b = 1; b < r; ++b) start[b] = type.dims[b - 1];
  pos.permutation.assign(n, 0);
  for (int a = 0; a < n; ++a) pos.permutation[start[pos.blocks[a]]++] = a;
  return pos;
}

// ---------------------------------------------------------------------------
// Semistability

namespace {

void check_type_a_nu(int ell, const QVector& nu) {
  if (static_cast<int>(nu.size()) != ell + 1)
    throw MalformedNu("nu must have " + std::to_string(ell + 1) + " entries");
  Rational sum;
  for (std::size_t a = 0; a < nu.size(); ++a) {
    sum += nu[a];
    if (a > 0 && nu[a] > nu[a - 1]) throw MalformedNu("nu is not weakly decreasing");
  }
  if (!sum.is_zero()) throw MalformedNu("nu does not sum to zero");
}

std::vector<std::vector<Subspace>> rational_subspace_table(const FiniteField& ff, int n,
                                                      const std::vector<Elem>& scalars,
                                                      std::uint64_t budget) {
  std::uint64_t total = 0;
  for (int d = 1; d < n; ++d) total += gaussian_binomial(n, d, scalars.size());
  if (total > budget)
    throw BudgetExceeded(std::to_string(total) + " rational subspaces exceed the budget of " +
                         std::to_string(budget));
  std::vector<std::vector<Subspace>> out(n);
  for (int d = 1; d < n; ++d)
    enumerate_subspaces(ff, n, d, scalars, [&](const Subspace& s) { out[d].push_back(s); });
  return out;
}

std::vector<FVec> frame_through(const Subspace& u) {
  const int n = u.ambient;
  std::vector<FVec> cols = u.rows;
  std::vector<bool> is_piv(n, false);
  for (int c : u.pivots) is_piv[c] = true;
  for (int c = 0; c < n; ++c)
    if (!is_piv[c]) {
      FVec e(n, 0);
      e[c] = 1;
      cols.push_back(std::move(e));
    }
  return cols;
}

// dim U times the slope of U against the flag x.
Rational weighted_slope(const FiniteField& ff, const Subspace& u, const FlagPoint& x,
                        const FlagType& type) {
  const int r = static_cast<int>(type.jumps.size());
  Rational s;
  int prev = 0;
  for (int b = 0; b < r; ++b) {
    const int c = b + 1 < r ? intersection_dim(ff, u, x.steps[b]) : u.dim();
    s += type.jumps[b] * Rational(c - prev);
    prev = c;
  }
  return s;
}

}  // namespace

SemistabilityOracle::SemistabilityOracle(const FiniteField& ff, int ell, QVector nu,
                                         const FinflagBudget& budget)
    : ff_(ff), ell_(ell), nu_(std::move(nu)), type_a_(RootSystemData::build(Kind::A, ell)) {
  check_type_a_nu(ell, nu_);
  type_ = flag_type_of(nu_);
  Rational sum;
  for (const auto& x : nu_) sum += x;
  ambient_slope_ = sum / Rational(ell + 1);
  rational_ = rational_subspace_table(ff, ell + 1, ff.base_elements(), budget.max_subspaces);
}

bool SemistabilityOracle::subspace_test(const FlagPoint& x) const {
  if (x.dims != type_.dims) throw DimensionMismatch("flag type does not match nu");
  const int r = static_cast<int>(type_.jumps.size());
  std::vector<int> cum(r);
  for (int d = 1; d <= ell_; ++d)
    for (const auto& u : rational_[d]) {
      for (int b = 0; b + 1 < r; ++b) cum[b] = intersection_dim(ff_, u, x.steps[b]);
      cum[r - 1] = d;
      if (slope(d, cum, type_.jumps) > ambient_slope_) return false;
    }
  return true;
}

std::vector<FVec> SemistabilityOracle::coset_representative(const Subspace& u) const {
  return frame_through(u);
}

bool SemistabilityOracle::strata_test(const FlagPoint& x, const GSample& sample) const {
  if (sample.mode == GSample::Mode::All) {
    for (int i = 1; i <= ell_; ++i) {
      const QVector& omega = type_a_.coweight(i - 1);
      for (const auto& u : rational_[i]) {
        RelativePosition pos = relative_position(ff_, x, frame_through(u), nu_);
        if (dot(omega, pos.image).sign() > 0) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(sample.seed);
  const auto& scalars = ff_.base_elements();
  std::uniform_int_distribution<std::size_t> pick(0, scalars.size() - 1);
  const int n = ell_ + 1;
  for (std::size_t k = 0; k < sample.count; ++k) {
    std::vector<FVec> g;
    do {
      g.assign(n, FVec(n));
      for (auto& col : g)
        for (auto& v : col) v = scalars[pick(rng)];
    } while (rank(ff_, n, g) != n);
    RelativePosition pos = relative_position(ff_, x, g, nu_);
    for (int i = 1; i <= ell_; ++i)
      if (dot(type_a_.coweight(i - 1), pos.image).sign() > 0) return false;
  }
  return true;
}

bool is_semistable_subspace_test(const FlagPoint& x, const QVector& nu, const FiniteField& ff) {
  SemistabilityOracle o(ff, static_cast<int>(nu.size()) - 1, nu);
  return o.subspace_test(x);
}

bool is_semistable_strata_test(const FlagPoint& x, const QVector& nu, const FiniteField& ff,
                               const GSample& sample) {
  SemistabilityOracle o(ff, static_cast<int>(nu.size()) - 1, nu);
  return o.strata_test(x, sample);
}

SemistableCount count_semistable(const FiniteField& ff, int ell, const QVector& nu,
                                 const FinflagBudget& budget) {
  SemistabilityOracle o(ff, ell, nu, budget);
  SemistableCount c;
  enumerate_flags(
      ff, ell, o.type().dims,
      [&](const FlagPoint& x) {
        ++c.total;
        if (o.subspace_test(x)) ++c.semistable;
      },
      budget);
  return c;
}

std::uint64_t drinfeld_point_count(std::uint64_t q, int m, int ell) {
  unsigned __int128 Q = 1;
  for (int i = 0; i < m; ++i) Q *= q;
  unsigned __int128 num = 1, qk = 1;
  for (int k = 0; k <= ell; ++k) {
    if (Q < qk) return 0;
    num *= (Q - qk);
    qk *= q;
  }
  return static_cast<std::uint64_t>(num / (Q - 1));
}

AgreementReport compare_tests(const FiniteField& ff, int ell, const QVector& nu,
                              const FinflagBudget& budget, std::size_t keep_examples) {
  SemistabilityOracle o(ff, ell, nu, budget);
  AgreementReport rep;
  enumerate_flags(
      ff, ell, o.type().dims,
      [&](const FlagPoint& x) {
        ++rep.total;
        const bool a = o.subspace_test(x);
        const bool b = o.strata_test(x);
        rep.semistable_subspace += a;
        rep.semistable_strata += b;
        if (!a && rep.unstable_examples.size() < keep_examples) rep.unstable_examples.push_back(x);
        if (a != b) {
          ++rep.disagreements;
          if (rep.disagreement_examples.size() < keep_examples)
            rep.disagreement_examples.push_back(x);
        }
      },
      budget);
  return rep;
}

// ---------------------------------------------------------------------------
// Restriction of scalars

ResCensus res_census(const FiniteField& ff, int t, int ell, const NuTuple& nu,
                     const FinflagBudget& budget) {
  GroupDatum g(RootSystemData::build(Kind::A, ell), Form::Split, t);
  nu.validate(g);
  const auto kprime = ff.subfield(t);
  const int n = ell + 1;
  const auto rational = rational_subspace_table(ff, n, kprime, budget.max_subspaces);
  const RootSystemData type_a = RootSystemData::build(Kind::A, ell);

  std::vector<FlagType> types;
  std::vector<std::vector<FlagPoint>> factor_points(t);
  unsigned __int128 total = 1;
  for (int j = 0; j < t; ++j) {
    types.push_back(flag_type_of(nu[j]));
    total *= flag_count(ell, types[j].dims, ff.size());
    if (total > budget.max_points)
      throw BudgetExceeded("product flag variety exceeds the point budget");
  }
  for (int j = 0; j < t; ++j)
    enumerate_flags(ff, ell, types[j].dims,
                    [&](const FlagPoint& x) { factor_points[j].push_back(x); }, budget);

  // Galois conjugates of every k'-rational subspace and of its frame.
  struct Conjugates {
    int dim;
    std::vector<Subspace> spaces;             // sigma^j U
    std::vector<std::vector<FVec>> frames;    // sigma^j applied to a frame through U
  };
  std::vector<Conjugates> conj;
  for (int d = 1; d <= ell; ++d)
    for (const auto& u : rational[d]) {
      Conjugates c{d, {}, {}};
      std::vector<FVec> frame = frame_through(u);
      for (int j = 0; j < t; ++j) {
        c.spaces.push_back(frobenius(ff, u, j));
        c.frames.push_back(frame);
        for (auto& col : frame)
          for (auto& v : col) v = ff.frobenius(v);
      }
      conj.push_back(std::move(c));
    }

  ResCensus census;
  std::vector<std::size_t> idx(t, 0);
  for (;;) {
    ResPoint pt;
    for (int j = 0; j < t; ++j) pt.factors.push_back(factor_points[j][idx[j]]);
    ++census.total;

    bool ss_subspace = true, ss_strata = true;
    for (const auto& c : conj) {
      Rational by_slopes, by_positions;
      for (int j = 0; j < t; ++j) {
        by_slopes += weighted_slope(ff, c.spaces[j], pt.factors[j], types[j]);
        RelativePosition pos = relative_position(ff, pt.factors[j], c.frames[j], nu[j]);
        by_positions += dot(type_a.coweight(c.dim - 1), pos.image);
      }
      if (by_slopes.sign() > 0) ss_subspace = false;
      if (by_positions.sign() > 0) ss_strata = false;
    }
    census.semistable_subspace += ss_subspace;
    census.semistable_strata += ss_strata;
    if (ss_subspace != ss_strata) ++census.disagreements;
    if (!ss_subspace) census.unstable.push_back(std::move(pt));

    int j = t - 1;
    while (j >= 0 && ++idx[j] == factor_points[j].size()) idx[j--] = 0;
    if (j < 0) break;
  }
  return census;
}

}  // namespace perdom
