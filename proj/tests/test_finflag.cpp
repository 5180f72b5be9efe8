#include <algorithm>
#include <set>

#include "doctest.h"
#include "perdom/errors.hpp"
#include "perdom/finflag.hpp"

using namespace perdom;

namespace {

std::vector<FlagPoint> all_flags(const FiniteField& ff, int ell, const std::vector<int>& dims) {
  std::vector<FlagPoint> out;
  enumerate_flags(ff, ell, dims, [&](const FlagPoint& x) { out.push_back(x); });
  return out;
}

FlagPoint line_through(const FiniteField& ff, FVec v) {
  const int n = static_cast<int>(v.size());
  return FlagPoint{{1}, {span(ff, n, {std::move(v)})}};
}

std::vector<FVec> identity_frame(int n) {
  std::vector<FVec> g(n, FVec(n, 0));
  for (int c = 0; c < n; ++c) g[c][c] = 1;
  return g;
}

}  // namespace

TEST_CASE("field axioms on small fields") {
  for (auto [p, e, m] : {std::tuple{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 1}, {3, 2, 1}}) {
    FiniteField ff(p, e, m);
    CAPTURE(ff.size());
    const auto& el = ff.elements();
    for (auto a : el) {
      CHECK(ff.add(a, ff.neg(a)) == 0);
      if (a != 0) CHECK(ff.mul(a, ff.inv(a)) == 1);
      for (auto b : el) {
        CHECK(ff.add(a, b) == ff.add(b, a));
        CHECK(ff.mul(a, b) == ff.mul(b, a));
        CHECK(ff.frobenius(ff.add(a, b)) == ff.add(ff.frobenius(a), ff.frobenius(b)));
        CHECK(ff.frobenius(ff.mul(a, b)) == ff.mul(ff.frobenius(a), ff.frobenius(b)));
        for (FiniteField::Elem c : {0u, 1u, ff.size() - 1}) {
          CHECK(ff.mul(a, ff.add(b, c)) == ff.add(ff.mul(a, b), ff.mul(a, c)));
          CHECK(ff.add(a, ff.add(b, c)) == ff.add(ff.add(a, b), c));
        }
      }
    }
    std::size_t fixed = 0;
    std::set<FiniteField::Elem> image;
    for (auto a : el) {
      fixed += ff.in_base(a);
      image.insert(ff.frobenius(a));
    }
    CHECK(fixed == ff.base_size());
    CHECK(image.size() == ff.size());
    CHECK(ff.base_elements().size() == ff.base_size());
  }
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(FiniteField(4, 1, 1), ValidationError);
  CHECK_THROWS_AS(FiniteField(2, 0, 1), ValidationError);
  CHECK_THROWS_AS(FiniteField(2, 1, 17), BudgetExceeded);
  FiniteField f16(2, 1, 4);
  CHECK(f16.subfield(2).size() == 4);
  CHECK_THROWS_AS(f16.subfield(3), ValidationError);
}

TEST_CASE("gaussian binomials and flag counts") {
  CHECK(gaussian_binomial(2, 1, 4) == 5);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 4, 2) == 0);
  CHECK(flag_count(2, {1, 2}, 2) == 21);
  CHECK(gaussian_binomial(40, 20, 65536) == UINT64_MAX);
}

TEST_CASE("enumeration hits every point once") {
  struct Case {
    int p, m, ell;
    std::vector<int> dims;
    std::size_t expected;
  };
  for (const auto& c : {Case{2, 2, 1, {1}, 5}, Case{2, 1, 2, {1, 2}, 21}, Case{2, 3, 2, {1}, 73},
                        Case{3, 1, 3, {2}, 130}, Case{2, 1, 3, {1, 2, 3}, 315}}) {
    FiniteField ff(c.p, 1, c.m);
    auto pts = all_flags(ff, c.ell, c.dims);
    CHECK(pts.size() == c.expected);
    CHECK(flag_count(c.ell, c.dims, ff.size()) == c.expected);
    std::set<std::vector<std::vector<FVec>>> seen;
    for (const auto& x : pts) {
      std::vector<std::vector<FVec>> key;
      for (std::size_t b = 0; b < x.steps.size(); ++b) {
        CHECK(x.steps[b].dim() == c.dims[b]);
        CHECK(span(ff, c.ell + 1, x.steps[b].rows) == x.steps[b]);
        if (b > 0) CHECK(intersection_dim(ff, x.steps[b - 1], x.steps[b]) == c.dims[b - 1]);
        key.push_back(x.steps[b].rows);
      }
      seen.insert(key);
    }
    CHECK(seen.size() == c.expected);
  }
  FiniteField f2(2, 1, 1);
  FinflagBudget tight;
  tight.max_points = 10;
  CHECK_THROWS_AS(enumerate_flags(f2, 2, {1, 2}, [](const FlagPoint&) {}, tight), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_flags(f2, 2, {2, 1}, [](const FlagPoint&) {}), ValidationError);
}

TEST_CASE("slopes") {
  CHECK(slope(2, {1, 2}, {1, -1}) == 0);
  CHECK(slope(1, {1, 1}, {2, -1}) == 2);
  CHECK(slope(1, {0, 1}, {2, -1}) == -1);
  CHECK_THROWS_AS(slope(0, {0, 0}, {1, -1}), ZeroDimensional);
}

TEST_CASE("the projective line over F4") {
  FiniteField f4(2, 1, 2);
  const QVector nu{1, -1};
  int rational = 0;
  for (const auto& x : all_flags(f4, 1, {1})) {
    const auto& r = x.steps[0].rows[0];
    const bool is_rational = f4.in_base(r[0]) && f4.in_base(r[1]);
    rational += is_rational;
    CHECK(is_semistable_subspace_test(x, nu, f4) == !is_rational);
    CHECK(is_semistable_strata_test(x, nu, f4) == !is_rational);
  }
  CHECK(rational == 3);
}

TEST_CASE("rational full flags are unstable") {
  for (int p : {2, 3}) {
    FiniteField ff(p, 1, 1);
    SemistabilityOracle o(ff, 2, {1, 0, -1});
    for (const auto& x : all_flags(ff, 2, {1, 2})) CHECK_FALSE(o.subspace_test(x));
  }
}

TEST_CASE("semistable counts") {
  CHECK(count_semistable(FiniteField(2, 1, 2), 1, {1, -1}).semistable == 2);
  CHECK(count_semistable(FiniteField(2, 1, 3), 1, {1, -1}).semistable == 6);
  CHECK(count_semistable(FiniteField(3, 1, 2), 1, {1, -1}).semistable == 6);
  CHECK(count_semistable(FiniteField(2, 1, 2), 2, {2, -1, -1}).semistable == 0);
  CHECK(count_semistable(FiniteField(2, 1, 3), 2, {2, -1, -1}).semistable == 24);
  CHECK(drinfeld_point_count(2, 2, 1) == 2);
  CHECK(drinfeld_point_count(3, 2, 1) == 6);
  CHECK(drinfeld_point_count(2, 2, 2) == 0);
  CHECK(drinfeld_point_count(2, 3, 2) == 24);
  CHECK(count_semistable(FiniteField(2, 1, 3), 2, {1, 1, -2}).semistable == 24);
  CHECK(count_semistable(FiniteField(3, 1, 2), 2, {2, -1, -1}).semistable ==
        drinfeld_point_count(3, 2, 2));
}

TEST_CASE("semistability does not depend on the field of definition") {
  FiniteField f4(2, 1, 2), f16(2, 1, 4);
  SemistabilityOracle big(f16, 1, {1, -1});
  std::uint64_t defined_over_f4 = 0, semistable = 0;
  for (const auto& x : all_flags(f16, 1, {1})) {
    if (!(frobenius(f16, x, 2) == x)) continue;
    ++defined_over_f4;
    semistable += big.subspace_test(x);
  }
  CHECK(defined_over_f4 == 5);
  CHECK(semistable == count_semistable(f4, 1, {1, -1}).semistable);
}

TEST_CASE("Frobenius preserves the semistable locus") {
  FiniteField f8(2, 1, 3);
  SemistabilityOracle o(f8, 2, {1, 0, -1});
  for (const auto& x : all_flags(f8, 2, {1, 2})) {
    const auto y = frobenius(f8, x);
    CHECK(o.subspace_test(x) == o.subspace_test(y));
  }
}

TEST_CASE("relative position") {
  FiniteField f2(2, 1, 1);
  const QVector nu{1, 0, -1};
  const auto a2 = RootSystemData::build(Kind::A, 2);
  FlagPoint standard{{1, 2}, {span(f2, 3, {{1, 0, 0}}), span(f2, 3, {{1, 0, 0}, {0, 1, 0}})}};
  auto pos = relative_position(f2, standard, identity_frame(3), nu);
  CHECK(pos.image == nu);
  CHECK(pos.to_weyl(a2) == WeylElement::identity(a2));

  const auto a1 = RootSystemData::build(Kind::A, 1);
  auto p1 = relative_position(f2, line_through(f2, {0, 1}), identity_frame(2), {1, -1});
  CHECK(p1.image == QVector{-1, 1});
  CHECK(p1.to_weyl(a1) == simple_reflection(a1, 0));

  CHECK_THROWS_AS(relative_position(f2, standard, {{1, 0, 0}, {1, 0, 0}, {0, 0, 1}}, nu),
                  SingularTransform);
  CHECK_THROWS_AS(relative_position(f2, standard, identity_frame(3), {2, -1, -1}),
                  DimensionMismatch);
}

TEST_CASE("relative position of coordinate flags") {
  // For flags spanned by standard vectors, reversing the reference frame
  // sends the position w to w0 w.
  FiniteField f3(3, 1, 1);
  const auto a3 = RootSystemData::build(Kind::A, 3);
  const auto w0 = longest_element(a3);
  std::vector<FVec> rev = identity_frame(4);
  std::reverse(rev.begin(), rev.end());
  for (const QVector& nu : {QVector{3, 1, -1, -3}, QVector{1, 1, -1, -1}, QVector{3, -1, -1, -1}}) {
    SemistabilityOracle o(f3, 3, nu);
    for (const auto& x : all_flags(f3, 3, o.type().dims)) {
      bool coordinate = true;
      for (const auto& s : x.steps)
        for (const auto& r : s.rows)
          coordinate = coordinate && std::count(r.begin(), r.end(), 0u) == 3;
      auto pos = relative_position(f3, x, identity_frame(4), nu);
      auto w = pos.to_weyl(a3);
      CHECK(w.apply(nu) == pos.image);
      if (!coordinate) continue;
      auto flipped = relative_position(f3, x, rev, nu);
      CHECK(flipped.image == w0.apply(pos.image));
    }
  }
}

TEST_CASE("the two tests agree") {
  for (auto [p, m] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    FiniteField ff(p, 1, m);
    for (const QVector& nu : {QVector{2, -1, -1}, QVector{1, 1, -2}, QVector{1, 0, -1}}) {
      auto r = compare_tests(ff, 2, nu);
      CHECK(r.disagreements == 0);
      CHECK(r.semistable_subspace == r.semistable_strata);
      CHECK(r.unstable_examples.size() == std::min<std::uint64_t>(3, r.total - r.semistable_subspace));
    }
  }
}

TEST_CASE("sampled reference frames only ever miss instability") {
  FiniteField f4(2, 1, 2);
  SemistabilityOracle o(f4, 2, {1, 0, -1});
  for (const auto& x : all_flags(f4, 2, {1, 2})) {
    if (!o.strata_test(x, GSample::sample(20, 9))) CHECK_FALSE(o.subspace_test(x));
  }
}

TEST_CASE("restriction of scalars census") {
  FiniteField f4(2, 1, 2);
  NuTuple same({{1, -1}, {1, -1}});
  auto c = res_census(f4, 2, 1, same);
  CHECK(c.total == 25);
  CHECK(c.semistable_subspace == 20);
  CHECK(c.semistable_strata == 20);
  CHECK(c.disagreements == 0);
  CHECK(c.unstable.size() == 5);
  std::set<std::vector<FVec>> firsts;
  for (const auto& pt : c.unstable) {
    CHECK(pt.factors[1] == frobenius(f4, pt.factors[0]));
    firsts.insert(pt.factors[0].steps[0].rows);
  }
  CHECK(firsts.size() == 5);

  FiniteField f16(2, 1, 4);
  auto drinfeld = res_census(f16, 2, 1, NuTuple({{1, -1}, {0, 0}}));
  CHECK(drinfeld.total == 17);
  CHECK(drinfeld.semistable_subspace == 12);
  CHECK(drinfeld.disagreements == 0);

  FiniteField f8(2, 1, 3);
  CHECK_THROWS_AS(res_census(f8, 2, 1, same), ValidationError);
}
