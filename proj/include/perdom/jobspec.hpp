#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perdom/classify.hpp"
#include "perdom/finflag.hpp"
#include "perdom/rootdata.hpp"
#include "perdom/strata.hpp"

namespace perdom {

enum class Command { Classify, Strata, Verify, Tables };
enum class OutputMode { Text, Record };

std::string to_string(Command c);
std::string to_string(OutputMode m);

struct FieldSpec {
  int p = 2;
  int e = 1;
  int m = 2;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/*
  One job of the command-line tool. Config text is line oriented:

    command = classify
    kind = A
    rank = 1
    nu = 1,-1; 0,0     # vectors comma separated, tuple entries by ';'

  A line may also hold several whitespace separated key=value tokens.
  `kind` is A, B, C, D, E, F, G or the full names E6, E7, E8, F4, G2.
*/
struct JobSpec {
  Command command = Command::Classify;
  std::string kind = "A";
  int rank = 1;
  Form form = Form::Split;
  int t = 1;
  std::vector<QVector> nu;
  std::optional<FieldSpec> field;
  std::optional<std::uint64_t> budget_cells;
  std::optional<std::uint64_t> budget_field;
  OutputMode output = OutputMode::Text;
  std::uint64_t seed = 1;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;

  Kind resolved_kind() const;          // throws IllegalType
  GroupDatum group() const;            // throws IllegalType, ValidationError
  NuTuple nu_tuple() const { return NuTuple(nu); }
};

// Reads assignments into `base` without validating. Throws ParseError; a
// key given twice in the same text is an error.
JobSpec read_jobspec(std::string_view text, JobSpec base = {});
// Applies command-line `key=value` tokens; later tokens win.
JobSpec apply_tokens(const std::vector<std::string>& tokens, JobSpec base);
// Throws ValidationError, IllegalType, MalformedNu, NotDominant.
void validate(const JobSpec& job);
// read_jobspec followed by validate.
JobSpec parse_jobspec(std::string_view text);

// Canonical config text; read_jobspec(render_jobspec(j)) == j.
std::string render_jobspec(const JobSpec& job);

std::string format_nu(const std::vector<QVector>& nu);

std::string render_classification(const JobSpec& job, const Classification& c, OutputMode mode);
std::string render_strata(const JobSpec& job, const StrataReport& r, OutputMode mode);
std::string render_tables(const RootSystemData& rs, OutputMode mode);
std::string render_agreement(const JobSpec& job, const FiniteField& ff, const AgreementReport& r,
                             OutputMode mode);
std::string render_census(const JobSpec& job, const FiniteField& ff, const ResCensus& r,
                          OutputMode mode);

}  // namespace perdom
