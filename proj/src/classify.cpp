#include "perdom/classify.hpp"

#include <algorithm>
#include <sstream>

#include "perdom/errors.hpp"

namespace perdom {

std::string to_string(Side s) {
  switch (s) {
    case Side::None: return "none";
    case Side::FirstStep: return "first";
    case Side::LastStep: return "last";
  }
  return "?";
}

void NuTuple::validate(const GroupDatum& g) const {
  const auto& base = g.base();
  if (static_cast<int>(entries_.size()) != g.res_degree())
    throw MalformedNu("expected " + std::to_string(g.res_degree()) + " components of nu, got " +
                      std::to_string(entries_.size()));
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    const QVector& x = entries_[j];
    const std::string which = "nu_" + std::to_string(j + 1);
    if (static_cast<int>(x.size()) != base.ambient_dim())
      throw MalformedNu(which + " has length " + std::to_string(x.size()) + ", expected " +
                        std::to_string(base.ambient_dim()));
    if (base.kind() == Kind::A) {
      Rational sum;
      for (std::size_t a = 0; a < x.size(); ++a) {
        sum += x[a];
        if (a > 0 && x[a] > x[a - 1])
          throw MalformedNu(which + " is not weakly decreasing at position " +
                            std::to_string(a + 1));
      }
      if (!sum.is_zero()) throw MalformedNu(which + " has coordinate sum " + sum.str());
    } else if (!is_dominant(x, base)) {
      throw NotDominant(which + " is not dominant");
    }
  }
}

NuTuple NuTuple::dual() const {
  std::vector<QVector> out;
  for (const auto& x : entries_) {
    QVector y(x.rbegin(), x.rend());
    for (auto& c : y) c = -c;
    out.push_back(std::move(y));
  }
  return NuTuple(std::move(out));
}

NuTuple NuTuple::scaled(const Rational& c) const {
  std::vector<QVector> out;
  for (const auto& x : entries_) out.push_back(c * x);
  return NuTuple(std::move(out));
}

Classification classify(const GroupDatum& g, const NuTuple& nu) {
  nu.validate(g);
  Classification c;
  c.ell = g.base().rank();
  c.over_extension = g.res_degree() > 1;
  if (g.base().kind() != Kind::A) {
    c.reason = "G' is not of type A";
    return c;
  }
  if (g.form() != Form::Split) {
    c.reason = "G' is the outer form of type A";
    return c;
  }
  const int l = c.ell;
  const int t = static_cast<int>(nu.size());
  std::vector<int> winners;
  for (int j = 0; j < t; ++j) {
    FactorCheck f;
    f.factor = j;
    f.x2 = nu[j][1];
    f.xl = nu[j][l - 1];
    for (int i = 0; i < t; ++i) {
      if (i == j) continue;
      f.first_sum += nu[i][0];
      f.last_sum += nu[i][l];
    }
    f.first_candidate = f.x2.sign() < 0;
    f.last_candidate = f.xl.sign() > 0;
    f.first_holds = f.first_candidate && f.first_sum < -f.x2;
    f.last_holds = f.last_candidate && f.last_sum > -f.xl;
    if (f.first_holds || f.last_holds)
      winners.push_back(j);
    else if (f.first_candidate || f.last_candidate)
      c.near_misses.push_back(j);
    c.details.push_back(f);
  }
  if (winners.size() > 1)
    throw std::logic_error("two factors satisfy the codimension-one conditions");
  if (winners.empty()) {
    c.reason = c.near_misses.empty() ? "no factor has x_2 < 0 or x_l > 0"
                                     : "the other factors outweigh every candidate factor";
    return c;
  }
  const FactorCheck& f = c.details[winners.front()];
  c.verdict = Verdict::DrinfeldType;
  c.codim_one = true;
  c.factor = f.factor;
  c.side = f.first_holds ? Side::FirstStep : Side::LastStep;
  c.reason = "codimension one";
  return c;
}

JumpProfile jump_profile(const QVector& x) {
  JumpProfile p;
  for (const auto& v : x) {
    if (!p.jumps.empty() && p.jumps.back() == v) {
      ++p.multiplicities.back();
    } else {
      p.jumps.push_back(v);
      p.multiplicities.push_back(1);
    }
  }
  return p;
}

int flag_dimension(const JumpProfile& p) {
  int dim = 0;
  for (std::size_t a = 0; a < p.multiplicities.size(); ++a)
    for (std::size_t b = a + 1; b < p.multiplicities.size(); ++b)
      dim += p.multiplicities[a] * p.multiplicities[b];
  return dim;
}

SsLocusDescription describe_ss_locus(const GroupDatum& g, const NuTuple& nu,
                                     const Classification& c) {
  nu.validate(g);
  if (c.verdict != Verdict::DrinfeldType)
    throw NotCodimOne("the semistable locus has a complement of codimension >= 2");
  SsLocusDescription d;
  d.side = c.side;
  d.factor = c.factor;
  d.ell = c.ell;
  d.over_extension = c.over_extension;
  const JumpProfile p = jump_profile(nu[c.factor]);
  const int r = static_cast<int>(p.jumps.size());
  if (c.side == Side::FirstStep) {
    if (p.multiplicities.front() != 1) throw std::logic_error("first jump is not simple");
    d.step = 1;
    d.jump = p.jumps.front();
    d.subspace_dim = 1;
    d.target = "Omega^(" + std::to_string(c.ell + 1) + ")";
  } else {
    if (p.multiplicities.back() != 1) throw std::logic_error("last jump is not simple");
    d.step = r;
    d.jump = p.jumps.back();
    d.subspace_dim = c.ell;
    d.target = "dual Omega^(" + std::to_string(c.ell + 1) + ")";
  }
  d.fiber_dim = flag_dimension(p) - c.ell;
  for (int j = 0; j < static_cast<int>(nu.size()); ++j)
    if (j != c.factor) d.other_factor_dims.push_back(flag_dimension(jump_profile(nu[j])));
  return d;
}

std::string SsLocusDescription::text() const {
  std::ostringstream os;
  const std::string field = over_extension ? "k'" : "k";
  if (side == Side::FirstStep) {
    os << "F^{y_1} (a line, y_1 = " << jump << ") is not contained in any " << field
       << "-rational hyperplane";
  } else {
    os << "F^{y_" << step - 1 << "} (a hyperplane, y_" << step << " = " << jump
       << ") contains no " << field << "-rational line";
  }
  os << "\n";
  if (fiber_dim == 0)
    os << "F^ss = " << target;
  else
    os << "F^ss -> " << target << " is surjective and proper with flag-variety fibres of dimension "
       << fiber_dim;
  os << " over " << field;
  if (!other_factor_dims.empty()) {
    os << ", times the flag varieties of the other factors (dims";
    for (int dim : other_factor_dims) os << ' ' << dim;
    os << ")";
  }
  return os.str();
}

}  // namespace perdom
