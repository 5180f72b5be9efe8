#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "perdom/errors.hpp"
#include "perdom/jobspec.hpp"

using namespace perdom;

namespace {

enum Exit { Ok = 0, Usage = 1, Invalid = 2, Budget = 3, Disagree = 4 };

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError(0, "", "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(const JobSpec& job) {
  switch (job.command) {
    case Command::Classify: {
      Classification c = classify(job.group(), job.nu_tuple());
      std::cout << render_classification(job, c, job.output);
      return Ok;
    }
    case Command::Strata: {
      StrataReport r = strata_report(job.group(), job.nu, job.budget_cells);
      std::cout << render_strata(job, r, job.output);
      return Ok;
    }
    case Command::Tables: {
      std::cout << render_tables(job.group().base(), job.output);
      return Ok;
    }
    case Command::Verify: {
      const FieldSpec f = job.field.value_or(FieldSpec{});
      FiniteField ff(f.p, f.e, f.m);
      FinflagBudget budget;
      if (job.budget_field) budget.max_points = *job.budget_field;
      if (job.t == 1) {
        AgreementReport r = compare_tests(ff, job.rank, job.nu.front(), budget);
        std::cout << render_agreement(job, ff, r, job.output);
        return r.disagreements == 0 ? Ok : Disagree;
      }
      ResCensus r = res_census(ff, job.t, job.rank, job.nu_tuple(), budget);
      std::cout << render_census(job, ff, r, job.output);
      return r.disagreements == 0 ? Ok : Disagree;
    }
  }
  return Usage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period domains over finite fields: classification, strata and point counts"};
  app.require_subcommand(1);

  bool record = false;
  std::optional<std::uint64_t> seed, budget_cells, budget_field;
  std::vector<std::string> inputs;
  std::optional<Command> command;

  auto add = [&](const std::string& name, std::optional<Command> cmd, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--record", record, "key=value output");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--budget-cells", budget_cells, "cap on Weyl coset cells");
    sub->add_option("--budget-field", budget_field, "cap on flag points");
    sub->add_option("inputs", inputs, "config file (- for stdin) and key=value overrides");
    sub->callback([&command, cmd] { command = cmd; });
  };
  add("classify", Command::Classify, "decide the fundamental group");
  add("strata", Command::Strata, "dimensions of the unstable strata");
  add("verify", Command::Verify, "finite-field semistability census");
  add("tables", Command::Tables, "simple roots, coweights and Gram matrices");
  add("run", std::nullopt, "run the command named in the config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }

  try {
    JobSpec job;
    std::vector<std::string> tokens;
    bool have_file = false;
    for (const auto& in : inputs) {
      if (in.find('=') != std::string::npos) {
        tokens.push_back(in);
      } else if (!have_file) {
        job = read_jobspec(slurp(in));
        have_file = true;
      } else {
        std::cerr << "error: more than one config file given\n";
        return Usage;
      }
    }
    job = apply_tokens(tokens, job);
    if (command) job.command = *command;
    if (record) job.output = OutputMode::Record;
    if (seed) job.seed = *seed;
    if (budget_cells) job.budget_cells = budget_cells;
    if (budget_field) job.budget_field = budget_field;
    validate(job);
    return run(job);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Usage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return Budget;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return Invalid;
  }
}
