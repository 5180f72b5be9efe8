#include <random>

#include "doctest.h"
#include "perdom/errors.hpp"
#include "perdom/jobspec.hpp"

using namespace perdom;

TEST_CASE("one-line job") {
  auto job = parse_jobspec("kind=A rank=1 form=split t=1 nu=1,-1 command=classify");
  CHECK(job.command == Command::Classify);
  CHECK(job.nu == std::vector<QVector>{{1, -1}});
  auto c = classify(job.group(), job.nu_tuple());
  CHECK(c.verdict == Verdict::DrinfeldType);
  CHECK(c.ell == 1);
}

TEST_CASE("config text") {
  auto job = parse_jobspec(R"(# the example over a quadratic extension
command = strata
kind = A
rank = 1
t = 2
nu = 1,-1; 0,0
budget_cells = 500
output = record
)");
  CHECK(job.command == Command::Strata);
  CHECK(job.t == 2);
  CHECK(job.nu == std::vector<QVector>{{1, -1}, {0, 0}});
  CHECK(job.budget_cells == 500u);
  CHECK(job.output == OutputMode::Record);

  auto trivial = parse_jobspec("rank=2 nu=1,0,-1");
  CHECK(classify(trivial.group(), trivial.nu_tuple()).verdict == Verdict::Trivial);

  auto frac = parse_jobspec("rank = 2\nnu = 1/2, 1/2, -1");
  CHECK(frac.nu[0][0] == Rational(1, 2));

  auto e6 = parse_jobspec("command=tables kind=E rank=6");
  CHECK(e6.resolved_kind() == Kind::E6);
}

TEST_CASE("diagnostics name the line and key") {
  auto line_of = [](const std::string& text) {
    try {
      read_jobspec(text);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.key()};
    }
    return std::pair{0, std::string()};
  };
  CHECK(line_of("rank = 1\ncolour = red\n") == std::pair{2, std::string("colour")});
  CHECK(line_of("rank = x") == std::pair{1, std::string("rank")});
  CHECK(line_of("\n\nnu = 1,a") == std::pair{3, std::string("nu")});
  CHECK(line_of("rank = 1\nrank = 2") == std::pair{2, std::string("rank")});
  CHECK(line_of("just words") == std::pair{1, std::string()});
  CHECK(line_of("form = twisted").second == "form");
  CHECK(line_of("nu =").second == "nu");
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(parse_jobspec("rank=2 nu=0,1,-1"), MalformedNu);
  CHECK_THROWS_AS(parse_jobspec("rank=1 t=2 nu=1,-1"), ValidationError);
  CHECK_THROWS_AS(parse_jobspec("kind=Q rank=2 nu=1,-1"), IllegalType);
  CHECK_THROWS_AS(parse_jobspec("kind=G2 rank=3 command=tables"), ValidationError);
  CHECK_THROWS_AS(parse_jobspec("command=verify kind=B rank=2 nu=1,0"), ValidationError);
  CHECK_THROWS_AS(parse_jobspec("command=verify t=2 nu=1,-1;1,-1 m=3"), ValidationError);
  CHECK_NOTHROW(parse_jobspec("command=tables kind=C rank=3"));
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coin(0, 1), small(1, 3);
  const char* commands[] = {"classify", "strata", "verify", "tables"};
  for (int k = 0; k < 200; ++k) {
    const int l = small(rng), t = small(rng);
    std::string text = std::string("command=") + commands[k % 4] + " rank=" + std::to_string(l) +
                       " t=" + std::to_string(t);
    std::string nu;
    for (int j = 0; j < t; ++j) {
      const int top = small(rng);
      nu += (j ? ";" : "") + std::to_string(top) + "/" + std::to_string(small(rng));
      for (int a = 1; a < l; ++a) nu += ",0";
      nu += ",-" + std::to_string(top) + "/" + std::to_string(small(rng));
    }
    text += " nu=" + nu;
    if (coin(rng)) text += " p=3 m=" + std::to_string(t);
    if (coin(rng)) text += " budget_cells=" + std::to_string(small(rng) * 1000);
    if (coin(rng)) text += " budget_field=77";
    if (coin(rng)) text += " output=record seed=" + std::to_string(k);
    const JobSpec once = read_jobspec(text);
    CHECK(read_jobspec(render_jobspec(once)) == once);
  }
}

TEST_CASE("command-line tokens override") {
  JobSpec base = read_jobspec("rank = 1\nnu = 1,-1\n");
  JobSpec j = apply_tokens({"rank=2", "nu=2,-1,-1"}, base);
  CHECK(j.rank == 2);
  CHECK_THROWS_AS(apply_tokens({"rank"}, base), ParseError);
}

TEST_CASE("classification reports") {
  auto job = parse_jobspec("rank=2 t=2 nu=2,-1,-1;0,0,0");
  auto c = classify(job.group(), job.nu_tuple());
  const auto text = render_classification(job, c, OutputMode::Text);
  CHECK(text.find("pi1 = pi1(Omega^(3)/k')\n") != std::string::npos);
  CHECK(text.find("factor = 1\n") != std::string::npos);
  CHECK(render_classification(job, c, OutputMode::Text) == text);

  auto t = parse_jobspec("rank=2 nu=1,0,-1");
  const auto trivial = render_classification(t, classify(t.group(), t.nu_tuple()), OutputMode::Text);
  CHECK(trivial.find("pi1 = trivial\n") != std::string::npos);
  const auto rec = render_classification(t, classify(t.group(), t.nu_tuple()), OutputMode::Record);
  CHECK(rec.find("pi1=trivial\n") != std::string::npos);

  auto a1 = parse_jobspec("rank=1 nu=1,-1");
  CHECK(render_classification(a1, classify(a1.group(), a1.nu_tuple()), OutputMode::Text)
            .find("pi1 = pi1(Omega^(2)/k)\n") != std::string::npos);
}

TEST_CASE("strata reports") {
  auto job = parse_jobspec("command=strata rank=2 nu=2,-1,-1");
  auto r = strata_report(job.group(), job.nu);
  CHECK(render_strata(job, r, OutputMode::Text).find("dim_F=2 dim_Y=1 codim=1\n") != std::string::npos);
  const auto rec = render_strata(job, r, OutputMode::Record);
  CHECK(rec.find("dim_F=2\ndim_Y=1\ncodim=1\n") != std::string::npos);

  auto half = parse_jobspec("command=strata rank=2 nu=1/2,0,-1/2");
  CHECK(render_strata(half, strata_report(half.group(), half.nu), OutputMode::Record)
            .find("nu=1/2,0,-1/2\n") != std::string::npos);

  auto zero = parse_jobspec("command=strata rank=1 nu=0,0");
  CHECK(render_strata(zero, strata_report(zero.group(), zero.nu), OutputMode::Text)
            .find("dim_Y=empty codim=infinite") != std::string::npos);
}

TEST_CASE("tables") {
  auto out = render_tables(RootSystemData::build(Kind::A, 2), OutputMode::Text);
  CHECK(out.find("coweights\n2/3 -1/3 -1/3\n1/3 1/3 -2/3\n") != std::string::npos);
  CHECK(out.find("coweight_gram\n2/3 1/3\n1/3 2/3\n") != std::string::npos);
  auto rec = render_tables(RootSystemData::build(Kind::G2, 2), OutputMode::Record);
  CHECK(rec.find("coweight_gram.1=2 3\n") != std::string::npos);
}
