#include "perdom/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "perdom/errors.hpp"

namespace perdom {

namespace {

using QMat = std::vector<std::vector<Rational>>;

QMat inverse(QMat a) {
  const std::size_t n = a.size();
  QMat inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = Rational(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

QVector unit(int dim, int i, Rational c = 1) {
  QVector v(dim);
  v[i] = c;
  return v;
}

QVector eps_diff(int dim, int i, int j) {  // e_i - e_j
  QVector v(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

// Bourbaki E8 frame; E6/E7 take the first 6/7 simple roots.
std::vector<QVector> e_roots(int rank) {
  const Rational h(1, 2);
  std::vector<QVector> r;
  QVector a1(8, -h);
  a1[0] = h;
  a1[7] = h;
  r.push_back(a1);
  QVector a2(8);
  a2[0] = 1;
  a2[1] = 1;
  r.push_back(a2);
  for (int i = 3; i <= rank; ++i) r.push_back(eps_diff(8, i - 2, i - 3));
  return r;
}

struct Realization {
  int dim;
  std::vector<QVector> roots;
  std::vector<int> tau;
};

Realization realize(Kind kind, int l) {
  Realization re;
  std::vector<int> id(l);
  for (int i = 0; i < l; ++i) id[i] = i;
  re.tau = id;
  switch (kind) {
    case Kind::A:
      re.dim = l + 1;
      for (int i = 0; i < l; ++i) re.roots.push_back(eps_diff(l + 1, i, i + 1));
      for (int i = 0; i < l; ++i) re.tau[i] = l - 1 - i;
      break;
    case Kind::B:
    case Kind::C:
    case Kind::D:
      re.dim = l;
      for (int i = 0; i + 1 < l; ++i) re.roots.push_back(eps_diff(l, i, i + 1));
      if (kind == Kind::B) {
        re.roots.push_back(unit(l, l - 1));
      } else if (kind == Kind::C) {
        re.roots.push_back(unit(l, l - 1, 2));
      } else {
        QVector a(l);
        a[l - 2] = 1;
        a[l - 1] = 1;
        re.roots.push_back(a);
        if (l % 2 == 1) std::swap(re.tau[l - 2], re.tau[l - 1]);
      }
      break;
    case Kind::E6:
    case Kind::E7:
    case Kind::E8:
      re.dim = 8;
      re.roots = e_roots(l);
      if (kind == Kind::E6) {
        // Bourbaki labelling: 1-3-4-5-6 chain with 2 attached to 4.
        re.tau = {5, 1, 4, 3, 2, 0};
      }
      break;
    case Kind::F4: {
      const Rational h(1, 2);
      re.dim = 4;
      re.roots = {eps_diff(4, 1, 2), eps_diff(4, 2, 3), unit(4, 3), QVector{h, -h, -h, -h}};
      break;
    }
    case Kind::G2:
      re.dim = 3;
      re.roots = {QVector{1, -1, 0}, QVector{-2, 1, 1}};
      break;
  }
  return re;
}

void check_legal(Kind kind, int rank) {
  bool ok = false;
  switch (kind) {
    case Kind::A: ok = rank >= 1; break;
    case Kind::B:
    case Kind::C: ok = rank >= 2; break;
    case Kind::D: ok = rank >= 3; break;
    case Kind::E6: ok = rank == 6; break;
    case Kind::E7: ok = rank == 7; break;
    case Kind::E8: ok = rank == 8; break;
    case Kind::F4: ok = rank == 4; break;
    case Kind::G2: ok = rank == 2; break;
  }
  if (!ok) throw IllegalType("no root system " + to_string(kind) + " of rank " + std::to_string(rank));
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    case Kind::E6: return "E6";
    case Kind::E7: return "E7";
    case Kind::E8: return "E8";
    case Kind::F4: return "F4";
    case Kind::G2: return "G2";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  static const std::pair<const char*, Kind> table[] = {
      {"A", Kind::A},   {"B", Kind::B},   {"C", Kind::C},   {"D", Kind::D},  {"E6", Kind::E6},
      {"E7", Kind::E7}, {"E8", Kind::E8}, {"F4", Kind::F4}, {"G2", Kind::G2}};
  for (auto& [name, k] : table)
    if (s == name) return k;
  throw IllegalType("unknown root system kind '" + s + "'");
}

std::string to_string(Form f) { return f == Form::Split ? "split" : "unitary"; }

Rational inner_product(const QVector& u, const QVector& v) { return dot(u, v); }

QVector coroot_of(const QVector& root) { return Rational(2) / dot(root, root) * root; }

RootSystemData RootSystemData::build(Kind kind, int rank) {
  check_legal(kind, rank);
  RootSystemData rs;
  rs.kind_ = kind;
  rs.base_rank_ = rank;
  Realization re = realize(kind, rank);
  rs.base_dim_ = re.dim;
  rs.simple_roots_ = std::move(re.roots);
  rs.opposition_ = std::move(re.tau);
  if (kind == Kind::D && rank == 3) rs.notes_.push_back("D3 is realized as an alias of A3");
  rs.finish();
  return rs;
}

RootSystemData RootSystemData::power(const RootSystemData& base, int copies) {
  if (base.copies_ != 1) throw IllegalType("power() expects a simple root system");
  if (copies < 1) throw IllegalType("number of copies must be positive");
  RootSystemData rs;
  rs.kind_ = base.kind_;
  rs.base_rank_ = base.base_rank_;
  rs.base_dim_ = base.base_dim_;
  rs.copies_ = copies;
  rs.notes_ = base.notes_;
  const int dim = base.base_dim_ * copies;
  for (int j = 0; j < copies; ++j) {
    for (int i = 0; i < base.base_rank_; ++i) {
      QVector v(dim);
      std::copy(base.simple_roots_[i].begin(), base.simple_roots_[i].end(),
                v.begin() + j * base.base_dim_);
      rs.simple_roots_.push_back(std::move(v));
      rs.opposition_.push_back(j * base.base_rank_ + base.opposition_[i]);
    }
  }
  rs.finish();
  return rs;
}

void RootSystemData::finish() {
  const int n = rank();
  for (const auto& a : simple_roots_) simple_coroots_.push_back(coroot_of(a));

  pairings_.assign(n, std::vector<Rational>(n));
  QMat cartan(n, std::vector<Rational>(n));  // (alpha_k, alpha_j^vee)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      pairings_[i][j] = dot(simple_roots_[i], simple_roots_[j]);
      cartan[i][j] = dot(simple_roots_[i], simple_coroots_[j]);
    }
  QMat m = inverse(cartan);
  for (int i = 0; i < n; ++i) {
    QVector w(ambient_dim());
    for (int k = 0; k < n; ++k)
      if (!m[i][k].is_zero()) w = w + m[i][k] * simple_roots_[k];
    coweights_.push_back(std::move(w));
  }
  coweight_gram_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) coweight_gram_[i][j] = dot(coweights_[i], coweights_[j]);

  rho_coweight_ = QVector(ambient_dim());
  for (const auto& w : coweights_) rho_coweight_ = rho_coweight_ + w;

  // Roots = orbit of the simple roots under the simple reflections.
  std::unordered_set<QVector, QVectorHash> seen(simple_roots_.begin(), simple_roots_.end());
  std::deque<QVector> queue(simple_roots_.begin(), simple_roots_.end());
  while (!queue.empty()) {
    QVector r = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Rational c = dot(r, simple_coroots_[i]);
      if (c.is_zero()) continue;
      QVector s = r - c * simple_roots_[i];
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  struct Entry {
    int height;
    QVector root;
    std::vector<Rational> coeffs;
  };
  std::vector<Entry> pos;
  for (const auto& r : seen) {
    if (dot(r, rho_coweight_).sign() <= 0) continue;
    Entry e{0, r, std::vector<Rational>(n)};
    Rational h;
    for (int k = 0; k < n; ++k) {
      e.coeffs[k] = Rational(2) * dot(r, coweights_[k]) / pairings_[k][k];
      h += e.coeffs[k];
    }
    if (!h.is_integer()) throw std::logic_error("non-integral root height");
    e.height = static_cast<int>(h.num());
    pos.push_back(std::move(e));
  }
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.root < b.root;
  });
  for (auto& e : pos) {
    heights_.push_back(e.height);
    positive_roots_.push_back(std::move(e.root));
    positive_coeffs_.push_back(std::move(e.coeffs));
  }
}

int RootSystemData::root_sign(const QVector& root) const {
  return dot(root, rho_coweight_).sign();
}

std::string RootSystemData::name() const {
  std::string s = to_string(kind_);
  if (s.size() == 1) s += std::to_string(base_rank_);
  if (copies_ > 1) s += "^" + std::to_string(copies_);
  return s;
}

std::vector<Rational> decompose_in_coweights(const QVector& nu, const RootSystemData& rs) {
  if (static_cast<int>(nu.size()) != rs.ambient_dim())
    throw DimensionMismatch("vector of length " + std::to_string(nu.size()) +
                            " in ambient space of dimension " + std::to_string(rs.ambient_dim()));
  std::vector<Rational> n(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) n[i] = dot(nu, rs.simple_coroot(i));
  return n;
}

bool is_dominant(const QVector& nu, const RootSystemData& rs) {
  for (const auto& c : decompose_in_coweights(nu, rs))
    if (c.sign() < 0) return false;
  return true;
}

GroupDatum::GroupDatum(RootSystemData base, Form form, int res_degree)
    : base_(std::move(base)),
      form_(form),
      t_(res_degree),
      absolute_(RootSystemData::power(base_, res_degree < 1 ? 1 : res_degree)) {
  if (t_ < 1) throw ValidationError("restriction-of-scalars degree must be >= 1");
  const int l = base_.rank();
  std::vector<std::vector<int>> base_orbits;
  if (form_ == Form::UnitaryOuter) {
    if (base_.kind() != Kind::A || l < 2)
      throw ValidationError("the outer (unitary) form exists only for A_l with l >= 2");
    const int d = (l + 1) / 2;
    for (int i = 0; i < d; ++i) {
      std::vector<int> o{i};
      if (l - 1 - i != i) o.push_back(l - 1 - i);
      base_orbits.push_back(std::move(o));
    }
  } else {
    for (int i = 0; i < l; ++i) base_orbits.push_back({i});
  }
  for (const auto& o : base_orbits) {
    std::vector<int> full;
    for (int j = 0; j < t_; ++j)
      for (int b : o) full.push_back(j * l + b);
    orbits_.push_back(std::move(full));
  }
}

QVector GroupDatum::absolute_vector(const std::vector<QVector>& tuple) const {
  if (static_cast<int>(tuple.size()) != t_)
    throw DimensionMismatch("expected " + std::to_string(t_) + " components, got " +
                            std::to_string(tuple.size()));
  QVector v;
  for (const auto& c : tuple) {
    if (static_cast<int>(c.size()) != base_.ambient_dim())
      throw DimensionMismatch("component of length " + std::to_string(c.size()) +
                              ", expected " + std::to_string(base_.ambient_dim()));
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

std::string GroupDatum::name() const {
  std::string s = form_ == Form::Split ? base_.name() : "2" + base_.name();
  if (t_ > 1) s = "Res_" + std::to_string(t_) + "(" + s + ")";
  return s;
}

std::vector<RelativeCoweight> relative_coweights(const GroupDatum& g) {
  std::vector<RelativeCoweight> out;
  const auto& abs = g.absolute();
  for (int i = 0; i < g.relative_rank(); ++i) {
    QVector w(abs.ambient_dim());
    for (int b : g.orbit(i)) w = w + abs.coweight(b);
    out.push_back({i, std::move(w)});
  }
  return out;
}

}  // namespace perdom
