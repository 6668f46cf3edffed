#include "recip/errors.hpp"
#include "recip/oracle.hpp"
#include "recip/reciprocity.hpp"
#include "recip/selfcheck.hpp"
#include "recip/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace recip;

enum Exit { kOk = 0, kAssertFailed = 1, kInvalidInput = 2, kResource = 3, kIdentity = 4 };

struct Config {
  std::string input;
  std::string order = "case1";
  bool reversed = false;
  int degree = 8;
  std::string mode = "sum";
  bool assert_property = false;
  bool verify = false;
  std::uint64_t seed = 20240601;
  std::size_t budget = 200000;
  unsigned jobs = 0;
  std::string output;
  bool trace = false;
  std::optional<int> d;
  bool strict = false;
  std::string f, g;
};

int exit_code(Errc c) {
  switch (c) {
    case Errc::TermBudgetExceeded: return kResource;
    case Errc::IdentityViolation:
    case Errc::NotOriented:
    case Errc::NoMixedPair: return kIdentity;
    default: return kInvalidInput;
  }
}

std::string read_file(const std::string& path) {
  if (path.empty()) throw Error(Errc::InvalidInput, "--input is required");
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OrderSpec order_of(const Config& c) {
  OrderSpec o = c.order == "case2" ? OrderSpec::case2() : OrderSpec::case1();
  return c.reversed ? o.reverse() : o;
}

EngineOptions engine_of(const Config& c) {
  EngineOptions e;
  e.term_budget = c.budget;
  if (c.trace)
    e.trace = [](const TraceRecord& t) {
      std::cerr << Json{{"lambda", t.lambda + 1}, {"round", t.round}, {"steps", t.steps},
                        {"live", t.live_terms}, {"finished", t.finished_terms},
                        {"measure", t.max_measure.to_string()}}.dump()
                << '\n';
    };
  return e;
}

Json system_json(const LDSystem& sys) {
  Json A = Json::array();
  for (int k = 0; k < sys.r(); ++k) {
    Json row = Json::array();
    for (int j = 0; j < sys.n(); ++j) row.push_back(sys.A(k, j));
    A.push_back(row);
  }
  Json b = Json::array();
  for (int k = 0; k < sys.r(); ++k) b.push_back(sys.b(k));
  return {{"A", A}, {"b", b}};
}

Json header(const std::string& command, const Config& c, const LDSystem* sys) {
  Json out{{"command", command}};
  if (sys) out["system"] = system_json(*sys);
  out["order"] = order_of(c).describe();
  return out;
}

/// E of A alpha = b (or Ebar, whose solutions are positive with A alpha = -b).
int cmd_gf(const Config& c, bool bar, std::ostream& os) {
  LDSystem sys = parse_system_document(read_file(c.input)).system;
  const OrderSpec ord = order_of(c);
  ElliottRational f = ct_all(bar ? crude_Ebar(sys) : crude_E(sys), ord, engine_of(c));
  Json out = header(bar ? "ebar" : "ct", c, &sys);
  out[bar ? "Ebar" : "E"] = to_string(f);
  out["function"] = to_json(f);
  int code = kOk;
  if (!c.reversed) {
    LaurentPolynomial series = expand_in_box(f, c.degree);
    out["degree"] = c.degree;
    out["series"] = series_json(series, f.space());
    if (c.verify) {
      LDSystem target = bar ? make_system(sys.A, -sys.b) : sys;
      SolutionSet s = enumerate_solutions(target, c.degree, bar ? Positivity::Strict : Positivity::Nonneg);
      bool pass = series == indicator_series(s, sys.n());
      out["verify"] = pass ? "pass" : "fail";
      if (!pass) code = kIdentity;
    }
  } else if (c.verify) {
    out["verify"] = "skipped: the reversed order does not give a power series";
  }
  os << out.dump(2) << '\n';
  return code;
}

int cmd_recip(const Config& c, std::ostream& os) {
  LDSystem sys = parse_system_document(read_file(c.input)).system;
  RPropertyResult r = r_property(crude_E(sys), order_of(c), c.d, engine_of(c));
  Json out = header("recip", c, &sys);
  out["r_property"] = to_json(r);
  os << out.dump(2) << '\n';
  return c.assert_property && !r.holds ? kAssertFailed : kOk;
}

int cmd_iprop(const Config& c, std::ostream& os) {
  LDSystem sys = parse_system_document(read_file(c.input)).system;
  IMode mode = c.mode == "per-term" ? IMode::PerTerm : IMode::SumLevel;
  IPropertyResult i = i_property(crude_E(sys), order_of(c), mode, engine_of(c));
  Json out = header("iprop", c, &sys);
  out["i_property"] = to_json(i);
  os << out.dump(2) << '\n';
  return c.assert_property && !i.holds ? kAssertFailed : kOk;
}

int cmd_monster(const Config& c, std::ostream& os) {
  LDSystem sys = parse_system_document(read_file(c.input)).system;
  MatrixForm T = matrix_form(sys);
  MonsterVerdict v = monster_check(T, order_of(c));
  Json out = header("monster", c, &sys);
  out["matrix"] = render(T);
  out["verdict"] = to_json(v);
  Json forms = Json::array();
  for (const MonsterCheck& m : v.checked)
    forms.push_back({{"sequence", m.sequence.to_string()},
                     {"matrix", render(sequence_ops(T, SequenceKind::RD, m.sequence.indices))}});
  out["reduced_forms"] = forms;
  os << out.dump(2) << '\n';
  return c.assert_property && !v.holds ? kAssertFailed : kOk;
}

int cmd_error_terms(const Config& c, std::ostream& os) {
  LDSystem sys = parse_system_document(read_file(c.input)).system;
  ErrorTermDecomposition e = error_terms(crude_E(sys), order_of(c), engine_of(c));
  Json out = header("error-terms", c, &sys);
  out["decomposition"] = to_json(e);
  os << out.dump(2) << '\n';
  return kOk;
}

int cmd_grid(const Config& c, std::ostream& os) {
  SystemDocument doc = parse_system_document(read_file(c.input));
  if (!doc.b_ranges) throw Error(Errc::InvalidInput, "field \"b_ranges\" is required for grid");
  GridOptions opts;
  opts.order = order_of(c);
  opts.mode = c.mode == "per-term" ? IMode::PerTerm : IMode::SumLevel;
  opts.jobs = c.jobs;
  opts.engine = engine_of(c);
  GridResult g = run_grid(doc.system.A, *doc.b_ranges, opts);
  os << grid_table(g, doc.system.r());
  std::cerr << to_json(g.summary).dump() << '\n';
  for (const GridRow& row : g.rows)
    if (row.error) std::cerr << "point failed: " << *row.error << '\n';
  if (!g.summary.i_subset_r || !g.summary.monster_subset_r) {
    std::cerr << "inclusion violated\n";
    return kIdentity;
  }
  return kOk;
}

int cmd_enumerate(const Config& c, std::ostream& os) {
  LDSystem sys = parse_system_document(read_file(c.input)).system;
  SolutionSet s = enumerate_solutions(sys, c.degree, c.strict ? Positivity::Strict : Positivity::Nonneg);
  Json out{{"command", "enumerate"}, {"system", system_json(sys)}, {"solutions", to_json(s)}};
  os << out.dump(2) << '\n';
  return kOk;
}

int cmd_feasible(const Config& c, std::ostream& os) {
  LDSystem sys = parse_system_document(read_file(c.input)).system;
  Feasibility f = has_positive_solution(sys.A);
  Json out{{"command", "feasible"}, {"system", system_json(sys)}, {"result", to_json(f)}};
  os << out.dump(2) << '\n';
  return c.assert_property && !f.feasible ? kAssertFailed : kOk;
}

int cmd_hadamard(const Config& c, std::ostream& os) {
  ElliottRational f = parse_univariate(c.f), g = parse_univariate(c.g);
  ElliottRational h = hadamard_product(f, g, engine_of(c));
  Json out{{"command", "hadamard"}, {"f", to_string(f)}, {"g", to_string(g)}, {"product", to_string(h)}};
  out["degree"] = c.degree;
  out["series"] = series_json(expand_in_box(h, c.degree), h.space());
  os << out.dump(2) << '\n';
  return kOk;
}

int cmd_selfcheck(const Config& c, std::ostream& os) {
  int failures = 0;
  for (const SelfCheckResult& r : run_selfcheck(c.seed)) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << '\n';
    failures += !r.passed;
  }
  os << (failures ? std::to_string(failures) + " check(s) failed" : std::string("all checks passed")) << '\n';
  return failures ? kAssertFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-term reciprocity checks for linear Diophantine systems"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", c.input, "System document {\"A\": [[...]], \"b\": [...]}");
    sub->add_option("--order", c.order, "Monomial order")->check(CLI::IsMember({"case1", "case2"}));
    sub->add_flag("--reversed", c.reversed, "Use the reversed order");
    sub->add_option("--degree", c.degree, "Truncation degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--mode", c.mode, "I-property mode")->check(CLI::IsMember({"sum", "per-term"}));
    sub->add_flag("--assert", c.assert_property, "Exit 1 when the property fails");
    sub->add_flag("--verify", c.verify, "Compare against brute-force enumeration");
    sub->add_option("--seed", c.seed, "Seed for randomized checks");
    sub->add_option("--budget", c.budget, "Maximum live terms during reduction");
    sub->add_option("--jobs", c.jobs, "Worker threads (0: all cores)");
    sub->add_option("--output", c.output, "Write the report to FILE");
    sub->add_flag("--trace", c.trace, "Stream reduction statistics to stderr");
    return sub;
  };

  std::map<std::string, std::function<int(std::ostream&)>> commands;
  auto add = [&](const std::string& name, const std::string& help, std::function<int(std::ostream&)> run) {
    commands[name] = std::move(run);
    return common(app.add_subcommand(name, help));
  };
  add("ct", "Solution generating function E(x;b)", [&](std::ostream& os) { return cmd_gf(c, false, os); });
  add("ebar", "Positive-solution generating function Ebar(x;b)", [&](std::ostream& os) { return cmd_gf(c, true, os); });
  add("recip", "R-property of the crude generating function", [&](std::ostream& os) { return cmd_recip(c, os); })
      ->add_option("--d", c.d, "Sign exponent (default: number of rows)");
  add("iprop", "I-property of the crude generating function", [&](std::ostream& os) { return cmd_iprop(c, os); });
  add("monster", "Sufficient condition via contribution sequences", [&](std::ostream& os) { return cmd_monster(c, os); });
  add("error-terms", "Error-term decomposition", [&](std::ostream& os) { return cmd_error_terms(c, os); });
  add("grid", "R, I and monster over the b_ranges box", [&](std::ostream& os) { return cmd_grid(c, os); });
  add("enumerate", "Brute-force solutions up to --degree", [&](std::ostream& os) { return cmd_enumerate(c, os); })
      ->add_flag("--strict", c.strict, "Positive solutions only");
  add("feasible", "Positive solution of A alpha = 0", [&](std::ostream& os) { return cmd_feasible(c, os); });
  CLI::App* had = add("hadamard", "Hadamard product of two univariate series",
                      [&](std::ostream& os) { return cmd_hadamard(c, os); });
  had->add_option("f", c.f, "First function, e.g. 1/(1-x)^2")->required();
  had->add_option("g", c.g, "Second function")->required();
  add("selfcheck", "Built-in invariant suite", [&](std::ostream& os) { return cmd_selfcheck(c, os); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (c.output.empty()) return commands[name](std::cout);
    std::ostringstream buffer;
    int code = commands[name](buffer);
    std::ofstream out(c.output);
    if (!out) throw Error(Errc::InvalidInput, "cannot write " + c.output);
    out << buffer.str();
    return code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kResource;
  }
}
