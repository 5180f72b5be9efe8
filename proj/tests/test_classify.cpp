#include <algorithm>
#include <random>

#include "doctest.h"
#include "perdom/classify.hpp"
#include "perdom/errors.hpp"
#include "support.hpp"

using namespace perdom;

namespace {

GroupDatum type_a(int l, int t = 1) {
  return GroupDatum(RootSystemData::build(Kind::A, l), Form::Split, t);
}

Classification run(const GroupDatum& g, std::vector<QVector> nu) {
  return classify(g, NuTuple(std::move(nu)));
}

}  // namespace

TEST_CASE("absolutely simple examples") {
  auto c = run(type_a(1), {{1, -1}});
  CHECK(c.verdict == Verdict::DrinfeldType);
  CHECK(c.ell == 1);
  CHECK(c.factor == 0);
  CHECK(c.side == Side::FirstStep);
  CHECK(c.codim_one);
  CHECK_FALSE(c.over_extension);

  CHECK(run(type_a(2), {{1, 0, -1}}).verdict == Verdict::Trivial);
  auto last = run(type_a(2), {{1, 1, -2}});
  CHECK(last.verdict == Verdict::DrinfeldType);
  CHECK(last.side == Side::LastStep);
  CHECK(run(type_a(2), {{0, 0, 0}}).verdict == Verdict::Trivial);
}

TEST_CASE("restriction of scalars examples") {
  auto g = type_a(1, 2);
  auto c = run(g, {{1, -1}, {0, 0}});
  CHECK(c.verdict == Verdict::DrinfeldType);
  CHECK(c.factor == 0);
  CHECK(c.over_extension);
  CHECK(c.details[0].first_sum == 0);
  CHECK(-c.details[0].x2 == 1);

  auto same = run(g, {{1, -1}, {1, -1}});
  CHECK(same.verdict == Verdict::Trivial);
  CHECK(same.near_misses == std::vector<int>{0, 1});

  auto second = run(g, {{1, -1}, {3, -3}});
  CHECK(second.verdict == Verdict::DrinfeldType);
  CHECK(second.factor == 1);
}

TEST_CASE("other types and forms are trivial") {
  std::mt19937_64 rng(5);
  for (auto g : {GroupDatum(RootSystemData::build(Kind::G2, 2), Form::Split, 1),
                 GroupDatum(RootSystemData::build(Kind::B, 3), Form::Split, 2),
                 GroupDatum(RootSystemData::build(Kind::A, 3), Form::UnitaryOuter, 1)}) {
    for (int k = 0; k < 50; ++k) {
      auto c = classify(g, NuTuple(testing::random_dominant(g, rng)));
      CHECK(c.verdict == Verdict::Trivial);
      CHECK(c.details.empty());
    }
  }
  auto u = GroupDatum(RootSystemData::build(Kind::A, 2), Form::UnitaryOuter, 1);
  CHECK(run(u, {{2, -1, -1}}).verdict == Verdict::Trivial);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(run(type_a(2), {{0, 1, -1}}), MalformedNu);
  CHECK_THROWS_AS(run(type_a(2), {{2, 0, -1}}), MalformedNu);
  CHECK_THROWS_AS(run(type_a(2), {{1, -1}}), MalformedNu);
  CHECK_THROWS_AS(run(type_a(1, 2), {{1, -1}}), MalformedNu);
  auto g2 = GroupDatum(RootSystemData::build(Kind::G2, 2), Form::Split, 1);
  CHECK_THROWS_AS(run(g2, {{-1, 1, 0}}), NotDominant);
}

TEST_CASE("uniqueness, duality, permutation and scaling") {
  std::mt19937_64 rng(99);
  for (int t = 1; t <= 3; ++t)
    for (int l = 1; l <= 4; ++l) {
      auto g = type_a(l, t);
      for (int k = 0; k < 200; ++k) {
        NuTuple nu(testing::random_dominant(g, rng));
        auto c = classify(g, nu);
        CHECK((c.verdict == Verdict::DrinfeldType) == c.codim_one);
        if (c.verdict == Verdict::DrinfeldType) {
          for (const auto& f : c.details)
            if (f.factor != c.factor) CHECK_FALSE((f.first_holds || f.last_holds));
        }

        auto d = classify(g, nu.dual());
        CHECK(d.verdict == c.verdict);
        for (int j = 0; j < t; ++j) {
          CHECK(d.details[j].first_holds == c.details[j].last_holds);
          CHECK(d.details[j].last_holds == c.details[j].first_holds);
        }
        if (c.verdict == Verdict::DrinfeldType) {
          CHECK(d.factor == c.factor);
          const auto& f = c.details[c.factor];
          if (f.first_holds != f.last_holds) CHECK(d.side != c.side);
        }

        auto s = classify(g, nu.scaled(Rational(5, 2)));
        CHECK(s.verdict == c.verdict);
        CHECK(s.factor == c.factor);
        CHECK(s.side == c.side);

        std::vector<int> perm(t);
        for (int j = 0; j < t; ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<QVector> moved(t);
        for (int j = 0; j < t; ++j) moved[perm[j]] = nu[j];
        auto p = classify(g, NuTuple(moved));
        CHECK(p.verdict == c.verdict);
        if (c.verdict == Verdict::DrinfeldType) CHECK(p.factor == perm[c.factor]);
      }
    }
}

TEST_CASE("jump profiles") {
  auto p = jump_profile({2, 2, Rational(-1, 2), -1, -1, -1});
  CHECK(p.jumps == std::vector<Rational>{2, Rational(-1, 2), -1});
  CHECK(p.multiplicities == std::vector<int>{2, 1, 3});
  CHECK(flag_dimension(p) == 2 + 6 + 3);
}

TEST_CASE("semistable locus descriptions") {
  auto g = type_a(2);
  NuTuple line({{2, -1, -1}});
  auto d = describe_ss_locus(g, line, classify(g, line));
  CHECK(d.side == Side::FirstStep);
  CHECK(d.step == 1);
  CHECK(d.subspace_dim == 1);
  CHECK(d.target == "Omega^(3)");
  CHECK(d.fiber_dim == 0);

  NuTuple hyper({{1, 1, -2}});
  auto h = describe_ss_locus(g, hyper, classify(g, hyper));
  CHECK(h.side == Side::LastStep);
  CHECK(h.step == 2);
  CHECK(h.subspace_dim == 2);
  CHECK(h.target == "dual Omega^(3)");

  NuTuple full({{3, 1, -4}});
  auto f = describe_ss_locus(g, full, classify(g, full));
  CHECK(f.fiber_dim == 1);

  auto a1 = type_a(1);
  NuTuple p1({{1, -1}});
  auto e = describe_ss_locus(a1, p1, classify(a1, p1));
  CHECK(e.text().find("F^ss = Omega^(2) over k") != std::string::npos);

  auto res = type_a(1, 2);
  NuTuple ex({{1, -1}, {0, 0}});
  auto r = describe_ss_locus(res, ex, classify(res, ex));
  CHECK(r.other_factor_dims == std::vector<int>{0});
  CHECK(r.text().find("k'") != std::string::npos);

  NuTuple trivial({{1, 0, -1}});
  CHECK_THROWS_AS(describe_ss_locus(g, trivial, classify(g, trivial)), NotCodimOne);
}
