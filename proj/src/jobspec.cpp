#include "perdom/jobspec.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "perdom/errors.hpp"

namespace perdom {

std::string to_string(Command c) {
  switch (c) {
    case Command::Classify: return "classify";
    case Command::Strata: return "strata";
    case Command::Verify: return "verify";
    case Command::Tables: return "tables";
  }
  return "?";
}

std::string to_string(OutputMode m) { return m == OutputMode::Text ? "text" : "record"; }

Kind JobSpec::resolved_kind() const {
  if (kind == "E") return parse_kind("E" + std::to_string(rank));
  if (kind == "F") return parse_kind("F" + std::to_string(rank));
  if (kind == "G") return parse_kind("G" + std::to_string(rank));
  return parse_kind(kind);
}

GroupDatum JobSpec::group() const {
  const Kind k = resolved_kind();
  int r = rank;
  switch (k) {
    case Kind::E6: r = 6; break;
    case Kind::E7: r = 7; break;
    case Kind::E8: r = 8; break;
    case Kind::F4: r = 4; break;
    case Kind::G2: r = 2; break;
    default: break;
  }
  if (r != rank) throw ValidationError("rank " + std::to_string(rank) + " does not match " + kind);
  return GroupDatum(RootSystemData::build(k, r), form, t);
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class Int>
Int parse_int(const std::string& v, int line, const std::string& key) {
  Int x{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError(line, key, "expected an integer, got '" + v + "'");
  return x;
}

std::vector<QVector> parse_nu(const std::string& v, int line) {
  std::vector<QVector> out;
  for (const auto& part : split(v, ';')) {
    if (part.empty()) throw ParseError(line, "nu", "empty vector");
    QVector x;
    for (const auto& entry : split(part, ',')) {
      try {
        x.push_back(Rational::parse(entry));
      } catch (const std::exception&) {
        throw ParseError(line, "nu", "'" + entry + "' is not a rational number");
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

void assign(JobSpec& job, const std::string& key, const std::string& v, int line) {
  if (v.empty()) throw ParseError(line, key, "missing value");
  auto field = [&]() -> FieldSpec& {
    if (!job.field) job.field = FieldSpec{};
    return *job.field;
  };
  if (key == "command") {
    if (v == "classify") job.command = Command::Classify;
    else if (v == "strata") job.command = Command::Strata;
    else if (v == "verify") job.command = Command::Verify;
    else if (v == "tables") job.command = Command::Tables;
    else throw ParseError(line, key, "unknown command '" + v + "'");
  } else if (key == "kind") {
    job.kind = v;
  } else if (key == "rank") {
    job.rank = parse_int<int>(v, line, key);
  } else if (key == "form") {
    if (v == "split") job.form = Form::Split;
    else if (v == "unitary") job.form = Form::UnitaryOuter;
    else throw ParseError(line, key, "form must be split or unitary");
  } else if (key == "t") {
    job.t = parse_int<int>(v, line, key);
  } else if (key == "nu") {
    job.nu = parse_nu(v, line);
  } else if (key == "p") {
    field().p = parse_int<int>(v, line, key);
  } else if (key == "e") {
    field().e = parse_int<int>(v, line, key);
  } else if (key == "m") {
    field().m = parse_int<int>(v, line, key);
  } else if (key == "budget_cells") {
    job.budget_cells = parse_int<std::uint64_t>(v, line, key);
  } else if (key == "budget_field") {
    job.budget_field = parse_int<std::uint64_t>(v, line, key);
  } else if (key == "output") {
    if (v == "text") job.output = OutputMode::Text;
    else if (v == "record") job.output = OutputMode::Record;
    else throw ParseError(line, key, "output must be text or record");
  } else if (key == "seed") {
    job.seed = parse_int<std::uint64_t>(v, line, key);
  } else {
    throw ParseError(line, key, "unknown key");
  }
}

std::pair<std::string, std::string> split_token(const std::string& tok, int line) {
  const auto eq = tok.find('=');
  if (eq == std::string::npos) throw ParseError(line, "", "expected key=value, got '" + tok + "'");
  std::string key = trim(std::string_view(tok).substr(0, eq));
  if (key.empty()) throw ParseError(line, "", "missing key before '='");
  return {key, trim(std::string_view(tok).substr(eq + 1))};
}

}  // namespace

JobSpec read_jobspec(std::string_view text, JobSpec base) {
  std::set<std::string> seen;
  int line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto [key, value] = split_token(line, line_no);
    std::vector<std::pair<std::string, std::string>> items;
    if (key.find_first_of(" \t") != std::string::npos || value.find('=') != std::string::npos) {
      std::istringstream is(line);
      std::string tok;
      while (is >> tok) items.push_back(split_token(tok, line_no));
    } else {
      items.emplace_back(key, value);
    }
    for (const auto& [k, v] : items) {
      if (!seen.insert(k).second) throw ParseError(line_no, k, "key given twice");
      assign(base, k, v, line_no);
    }
  }
  return base;
}

JobSpec apply_tokens(const std::vector<std::string>& tokens, JobSpec base) {
  int pos = 0;
  for (const auto& tok : tokens) {
    ++pos;
    auto [k, v] = split_token(tok, pos);
    assign(base, k, v, pos);
  }
  return base;
}

void validate(const JobSpec& job) {
  if (job.t < 1) throw ValidationError("t must be at least 1");
  const GroupDatum g = job.group();
  if (job.command != Command::Tables) {
    if (static_cast<int>(job.nu.size()) != job.t)
      throw ValidationError("nu has " + std::to_string(job.nu.size()) + " components, t = " +
                            std::to_string(job.t));
    job.nu_tuple().validate(g);
  }
  if (job.command == Command::Verify) {
    if (!g.is_split_type_a())
      throw ValidationError("verify needs a split group of type A");
    const FieldSpec f = job.field.value_or(FieldSpec{});
    if (f.m % job.t != 0)
      throw ValidationError("m must be a multiple of t so that F_{q^m} contains k'");
  }
}

JobSpec parse_jobspec(std::string_view text) {
  JobSpec job = read_jobspec(text);
  validate(job);
  return job;
}

std::string format_nu(const std::vector<QVector>& nu) {
  std::string s;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (j) s += "; ";
    for (std::size_t a = 0; a < nu[j].size(); ++a) {
      if (a) s += ",";
      s += nu[j][a].str();
    }
  }
  return s;
}

std::string render_jobspec(const JobSpec& job) {
  std::ostringstream os;
  os << "command = " << to_string(job.command) << "\n"
     << "kind = " << job.kind << "\n"
     << "rank = " << job.rank << "\n"
     << "form = " << to_string(job.form) << "\n"
     << "t = " << job.t << "\n";
  if (!job.nu.empty()) os << "nu = " << format_nu(job.nu) << "\n";
  if (job.field) os << "p = " << job.field->p << "\ne = " << job.field->e << "\nm = " << job.field->m << "\n";
  if (job.budget_cells) os << "budget_cells = " << *job.budget_cells << "\n";
  if (job.budget_field) os << "budget_field = " << *job.budget_field << "\n";
  os << "output = " << to_string(job.output) << "\n"
     << "seed = " << job.seed << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Reports

namespace {

// Text mode aligns "key = value"; record mode writes "key=value".
class Out {
 public:
  explicit Out(OutputMode m) : mode_(m) {}
  Out& kv(const std::string& k, const std::string& v) {
    if (mode_ == OutputMode::Record) os_ << k << '=' << v << '\n';
    else os_ << k << " = " << v << '\n';
    return *this;
  }
  Out& line(const std::string& s) {
    if (mode_ == OutputMode::Text) os_ << s << '\n';
    return *this;
  }
  bool record() const { return mode_ == OutputMode::Record; }
  std::string str() const { return os_.str(); }

 private:
  OutputMode mode_;
  std::ostringstream os_;
};

std::string word_text(const WeylElement& w) {
  if (!w.word()) return "?";
  if (w.word()->empty()) return "e";
  std::string s;
  for (int i : *w.word()) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(i + 1);
  }
  return s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string flag_text(const FlagPoint& x) {
  std::string s;
  for (std::size_t b = 0; b < x.steps.size(); ++b) {
    if (b) s += " < ";
    s += "[";
    for (std::size_t r = 0; r < x.steps[b].rows.size(); ++r) {
      if (r) s += "; ";
      for (std::size_t c = 0; c < x.steps[b].rows[r].size(); ++c) {
        if (c) s += ' ';
        s += std::to_string(x.steps[b].rows[r][c]);
      }
    }
    s += "]";
  }
  return s.empty() ? "(point)" : s;
}

std::string field_text(const FiniteField& ff) {
  return "q=" + std::to_string(ff.base_size()) + " m=" + std::to_string(ff.extension_degree()) +
         " (F_" + std::to_string(ff.size()) + ")";
}

}  // namespace

std::string render_classification(const JobSpec& job, const Classification& c, OutputMode mode) {
  Out out(mode);
  const GroupDatum g = job.group();
  out.kv("group", g.name()).kv("nu", format_nu(job.nu));
  if (c.verdict == Verdict::Trivial) {
    out.kv("pi1", "trivial");
  } else {
    out.kv("pi1", "pi1(Omega^(" + std::to_string(c.ell + 1) + ")/" +
                      (c.over_extension ? "k'" : "k") + ")");
    out.kv("factor", std::to_string(c.factor + 1));
    out.kv("side", to_string(c.side));
  }
  out.kv("codim_one", bool_text(c.codim_one));
  out.kv("reason", c.reason);
  for (const auto& f : c.details) {
    const std::string p = "check." + std::to_string(f.factor + 1) + ".";
    out.kv(p + "x2", f.x2.str())
        .kv(p + "xl", f.xl.str())
        .kv(p + "first_sum", f.first_sum.str())
        .kv(p + "last_sum", f.last_sum.str())
        .kv(p + "first", f.first_holds ? "holds" : f.first_candidate ? "fails" : "n/a")
        .kv(p + "last", f.last_holds ? "holds" : f.last_candidate ? "fails" : "n/a");
  }
  if (!c.near_misses.empty()) {
    std::string s;
    for (int j : c.near_misses) s += (s.empty() ? "" : " ") + std::to_string(j + 1);
    out.kv("near_misses", s);
  }
  if (c.verdict == Verdict::DrinfeldType) {
    SsLocusDescription d = describe_ss_locus(g, job.nu_tuple(), c);
    out.kv("ss_step", "y_" + std::to_string(d.step) + " = " + d.jump.str())
        .kv("ss_subspace_dim", std::to_string(d.subspace_dim))
        .kv("ss_target", d.target)
        .kv("ss_fiber_dim", std::to_string(d.fiber_dim));
    out.line(d.text());
  }
  return out.str();
}

std::string render_strata(const JobSpec& job, const StrataReport& r, OutputMode mode) {
  Out out(mode);
  const GroupDatum g = job.group();
  const std::string dim_y = r.dim_Y ? std::to_string(*r.dim_Y) : "empty";
  const std::string codim = r.codim_Y ? std::to_string(*r.codim_Y) : "infinite";
  if (out.record()) {
    out.kv("group", g.name())
        .kv("nu", format_nu(job.nu))
        .kv("cosets", std::to_string(r.parabolic.coset_count()))
        .kv("dim_F", std::to_string(r.dim_F))
        .kv("dim_Y", dim_y)
        .kv("codim", codim);
  } else {
    out.kv("group", g.name()).kv("nu", format_nu(job.nu));
    out.kv("cosets", std::to_string(r.parabolic.coset_count()));
    out.line("dim_F=" + std::to_string(r.dim_F) + " dim_Y=" + dim_y + " codim=" + codim);
  }
  for (const auto& s : r.per_vertex) {
    const std::string p = "vertex." + std::to_string(s.vertex + 1) + ".";
    out.kv(p + "dim", s.dim ? std::to_string(*s.dim) : "empty");
    out.kv(p + "cells", std::to_string(s.cell_count));
    if (s.witness) {
      out.kv(p + "witness", word_text(*s.witness));
      out.kv(p + "image", to_string(s.witness_image));
    }
  }
  return out.str();
}

std::string render_tables(const RootSystemData& rs, OutputMode mode) {
  std::ostringstream os;
  const bool rec = mode == OutputMode::Record;
  auto vectors = [&](const std::string& title, const std::vector<QVector>& vs) {
    if (!rec) os << title << "\n";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (rec) os << title << "." << i + 1 << "=";
      os << to_string(vs[i]) << "\n";
    }
  };
  auto gram = [&](const std::string& title, auto entry) {
    std::vector<QVector> rows(rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) rows[i].push_back(entry(i, j));
    vectors(title, rows);
  };
  if (rec) os << "type=" << rs.name() << "\n";
  else os << "type " << rs.name() << "\n";
  vectors("simple_roots", rs.simple_roots());
  vectors("simple_coroots", [&] {
    std::vector<QVector> v;
    for (int i = 0; i < rs.rank(); ++i) v.push_back(rs.simple_coroot(i));
    return v;
  }());
  vectors("coweights", rs.coweights());
  gram("root_gram", [&](int i, int j) { return rs.cartan_pairing(i, j); });
  gram("coweight_gram", [&](int i, int j) { return rs.coweight_gram(i, j); });
  std::string tau;
  for (int i = 0; i < rs.rank(); ++i) tau += (i ? " " : "") + std::to_string(rs.opposition(i) + 1);
  if (rec) os << "opposition=" << tau << "\n";
  else os << "opposition\n" << tau << "\n";
  for (const auto& n : rs.notes()) os << (rec ? "note=" : "note: ") << n << "\n";
  return os.str();
}

std::string render_agreement(const JobSpec& job, const FiniteField& ff, const AgreementReport& r,
                             OutputMode mode) {
  Out out(mode);
  out.kv("group", job.group().name()).kv("nu", format_nu(job.nu)).kv("field", field_text(ff));
  out.kv("points", std::to_string(r.total))
      .kv("semistable_subspace_test", std::to_string(r.semistable_subspace))
      .kv("semistable_strata_test", std::to_string(r.semistable_strata))
      .kv("disagreements", std::to_string(r.disagreements));
  for (std::size_t i = 0; i < r.unstable_examples.size(); ++i)
    out.kv("unstable." + std::to_string(i + 1), flag_text(r.unstable_examples[i]));
  for (std::size_t i = 0; i < r.disagreement_examples.size(); ++i)
    out.kv("disagreement." + std::to_string(i + 1), flag_text(r.disagreement_examples[i]));
  out.kv("agreement", r.disagreements == 0 ? "agree" : "DISAGREE");
  return out.str();
}

std::string render_census(const JobSpec& job, const FiniteField& ff, const ResCensus& r,
                          OutputMode mode) {
  Out out(mode);
  out.kv("group", job.group().name()).kv("nu", format_nu(job.nu)).kv("field", field_text(ff));
  out.kv("points", std::to_string(r.total))
      .kv("semistable_subspace_test", std::to_string(r.semistable_subspace))
      .kv("semistable_strata_test", std::to_string(r.semistable_strata))
      .kv("disagreements", std::to_string(r.disagreements))
      .kv("unstable", std::to_string(r.unstable.size()));
  for (std::size_t i = 0; i < r.unstable.size() && i < 3; ++i) {
    std::string s;
    for (std::size_t j = 0; j < r.unstable[i].factors.size(); ++j)
      s += (j ? " x " : "") + flag_text(r.unstable[i].factors[j]);
    out.kv("unstable." + std::to_string(i + 1), s);
  }
  out.kv("agreement", r.disagreements == 0 ? "agree" : "DISAGREE");
  return out.str();
}

}  // namespace perdom
