#include "abduction/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include "abduction/checks.h"
#include "abduction/instance_io.h"
#include "abduction/oracle.h"
#include "abduction/reductions.h"
#include "abduction/solver.h"

namespace abduction {

namespace {

using nlohmann::json;

struct UsageError : AbductionError {
  using AbductionError::AbductionError;
};

struct QueryOptions {
  std::string file;
  std::string ordering = "none";
  std::string query;
  std::string set;
  std::string var;
  bool json = false;
  Limits limits;
};

const std::vector<std::string> kQueries = {"exists",    "verify",      "relevant",
                                           "necessary", "dispensable", "enumerate"};

Var resolve(const AbductionInstance& inst, const std::string& token) {
  const auto v = inst.lookup(token);
  if (!v) throw UsageError("unknown variable '" + token + "'");
  return *v;
}

VarSet resolve_set(const AbductionInstance& inst, const std::string& text) {
  std::vector<Var> vs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    if (!token.empty()) vs.push_back(resolve(inst, token));
    pos = comma + 1;
  }
  return VarSet(std::move(vs));
}

json witness_json(const AbductionInstance& inst, const VarSet& s) {
  json arr = json::array();
  for (Var v : s) {
    if (static_cast<std::size_t>(v) <= inst.names.size() && !inst.names[v - 1].empty()) {
      arr.push_back(inst.names[v - 1]);
    } else {
      arr.push_back(v);
    }
  }
  return arr;
}

json stats_json(const SolverStats& stats) {
  return {{"engine_calls", stats.engine_calls}, {"subsets", stats.subsets}};
}

int emit_answer(const AbductionInstance& inst, const QueryOptions& opt, const QueryResult& r,
                std::ostream& out) {
  if (opt.json) {
    json j;
    j["answer"] = r.answer;
    j["witness"] = r.witness ? witness_json(inst, *r.witness) : json(nullptr);
    j["stats"] = stats_json(r.stats);
    out << j.dump() << '\n';
  } else {
    out << (r.answer ? "yes" : "no") << '\n';
    if (r.witness) out << "witness " << to_string(*r.witness, &inst) << '\n';
    out << "engine_calls " << r.stats.engine_calls << " subsets " << r.stats.subsets << '\n';
  }
  return r.answer ? kExitYes : kExitNo;
}

int emit_enumeration(const AbductionInstance& inst, const QueryOptions& opt,
                     const Enumeration& e, std::ostream& out) {
  if (opt.json) {
    json j;
    j["explanations"] = json::array();
    for (const VarSet& s : e.explanations) j["explanations"].push_back(witness_json(inst, s));
    j["complete"] = e.complete;
    j["stats"] = stats_json(e.stats);
    out << j.dump() << '\n';
  } else {
    for (const VarSet& s : e.explanations) out << to_string(s, &inst) << '\n';
    out << e.explanations.size() << " explanations" << (e.complete ? "" : " (incomplete)")
        << '\n';
  }
  return e.complete ? kExitSuccess : kExitCap;
}

OrderingKind ordering_of(const QueryOptions& opt) {
  const auto kind = parse_ordering(opt.ordering);
  if (!kind) throw UsageError("unknown ordering '" + opt.ordering + "'");
  return *kind;
}

QueryKind query_kind(const std::string& q) {
  if (q == "relevant") return QueryKind::kRelevant;
  if (q == "necessary") return QueryKind::kNecessary;
  return QueryKind::kDispensable;
}

VarSet candidate_of(const AbductionInstance& inst, const QueryOptions& opt) {
  if (!opt.set.empty() || !inst.candidate) {
    if (opt.set.empty() && !inst.candidate) throw UsageError("verify needs --set");
    return resolve_set(inst, opt.set);
  }
  return *inst.candidate;
}

Var target_of(const AbductionInstance& inst, const QueryOptions& opt) {
  if (opt.var.empty()) throw UsageError(opt.query + " needs --var");
  return resolve(inst, opt.var);
}

int run_solve(const QueryOptions& opt, std::ostream& out) {
  const AbductionInstance inst = read_instance_file(opt.file);
  const Ordering ord = Ordering::for_instance(ordering_of(opt), inst);
  AbductionSolver solver(inst, opt.limits);
  if (opt.query == "exists") return emit_answer(inst, opt, solver.exists(), out);
  if (opt.query == "verify") return emit_answer(inst, opt, solver.verify(ord, candidate_of(inst, opt)), out);
  if (opt.query == "enumerate") return emit_enumeration(inst, opt, solver.enumerate(ord), out);
  return emit_answer(inst, opt, solver.query(ord, query_kind(opt.query), target_of(inst, opt)),
                     out);
}

int run_oracle(const QueryOptions& opt, std::ostream& out) {
  const AbductionInstance inst = read_instance_file(opt.file);
  const Ordering ord = Ordering::for_instance(ordering_of(opt), inst);
  const OracleReport report = brute_minimal(inst, ord);
  const SolverStats stats{0, report.subsets};
  auto with_stats = [&](QueryResult r) {
    r.stats = stats;
    return r;
  };
  if (opt.query == "exists") return emit_answer(inst, opt, with_stats(oracle_exists(report)), out);
  if (opt.query == "verify") {
    const VarSet cand = candidate_of(inst, opt);
    if (!cand.is_subset_of(inst.hypotheses())) {
      throw UsageError("candidate is not a subset of the hypotheses");
    }
    return emit_answer(inst, opt, with_stats(oracle_verify(report, cand)), out);
  }
  if (opt.query == "enumerate") {
    return emit_enumeration(inst, opt, Enumeration{report.minimal, true, stats}, out);
  }
  const Var h = target_of(inst, opt);
  if (!inst.hypotheses().contains(h)) throw UsageError(opt.var + " is not a hypothesis");
  return emit_answer(inst, opt, with_stats(oracle_query(report, query_kind(opt.query), h)), out);
}

struct ReduceOptions {
  std::string file;
  std::string transform;
  std::string variant = "auto";
  int c = 0;
  std::string var;
  std::string output;
};

int run_reduce(const ReduceOptions& opt, std::ostream& out) {
  const AbductionInstance inst = read_instance_file(opt.file);
  Variant variant = Variant::kPlain;
  if (opt.variant == "auto") {
    variant = inst.classes.size() > 1 ? Variant::kPrio
              : inst.candidate        ? Variant::kVerify
                                      : Variant::kPlain;
  } else if (opt.variant == "verify") {
    variant = Variant::kVerify;
  } else if (opt.variant == "prio") {
    variant = Variant::kPrio;
  }
  ReductionRecord rec;
  if (opt.transform == "f") {
    rec = transform_f(inst, variant);
  } else if (opt.transform == "gc") {
    const int c = opt.c ? opt.c : class_of(inst, variant == Variant::kPrio);
    rec = transform_gc_record(inst, c, variant);
  } else if (opt.transform == "i") {
    rec = transform_i(inst, variant);
  } else if (opt.transform == "first-of-first") {
    if (opt.var.empty()) throw UsageError("first-of-first needs --var");
    rec = transform_first_of_first(inst, resolve(inst, opt.var));
  } else {
    rec = transform_dh_replicate(inst);
  }
  const std::string text = "c reduction " + opt.transform + " " + to_string(variant) + "\n" +
                           serialize_record(rec) + serialize_instance(rec.output);
  if (opt.output.empty()) {
    out << text;
  } else {
    write_text_file(opt.output, text);
  }
  return kExitSuccess;
}

struct CheckOptions {
  std::string file;
  std::string lemma;
  std::uint64_t seed = 1;
  int samples = 100;
  int c = 0;
  bool verbose = false;
};

CheckReport repr_equivalence_suite(const AbductionInstance& inst) {
  struct Case {
    EquivReduction reduction;
    EquivProblem problem;
    OrderingKind ordering;
  };
  std::vector<Case> cases = {
      {EquivReduction::kI, EquivProblem::kExists, OrderingKind::kUniversal},
      {EquivReduction::kIVerify, EquivProblem::kVerify, OrderingKind::kSubsetPref},
      {EquivReduction::kIVerify, EquivProblem::kVerify, OrderingKind::kCardPref},
      {EquivReduction::kI, EquivProblem::kRelevant, OrderingKind::kSubsetPref},
      {EquivReduction::kI, EquivProblem::kNecessary, OrderingKind::kCardPref},
  };
  if (inst.classes.size() > 1) {
    cases.push_back({EquivReduction::kIPrio, EquivProblem::kVerify, OrderingKind::kSubsetPrio});
    cases.push_back({EquivReduction::kIPrio, EquivProblem::kRelevant, OrderingKind::kCardPrio});
  }
  CheckReport all;
  for (const Case& c : cases) {
    all.merge(check_representative_equivalence(c.reduction, c.problem, c.ordering, inst));
  }
  return all;
}

int run_check(const CheckOptions& opt, std::ostream& out) {
  const AbductionInstance inst = read_instance_file(opt.file);
  Rng rng(opt.seed);
  CheckReport report;
  if (opt.lemma == "basic") {
    report = check_indicator_reduction(inst, rng, opt.samples);
  } else if (opt.lemma == "basic-order") {
    report = check_indicator_reduction_order(inst);
  } else if (opt.lemma == "add-assumptions") {
    report = check_padding(inst, opt.c);
  } else if (opt.lemma == "first-of-first") {
    report = check_first_of_first(inst, QueryKind::kRelevant);
    report.merge(check_first_of_first(inst, QueryKind::kNecessary));
  } else if (opt.lemma == "dh-replicate") {
    report = check_dh_replicate(inst);
  } else {
    report = repr_equivalence_suite(inst);
  }
  out << (report.pass ? "PASS" : "FAIL") << ' ' << opt.lemma << ": " << report.cases
      << " cases, " << report.failures << " failures" << (report.skipped ? ", skipped" : "")
      << '\n';
  if (opt.verbose) {
    out << report.transcript;
  } else {
    std::size_t pos = 0;
    while (pos < report.transcript.size()) {
      std::size_t end = report.transcript.find('\n', pos);
      if (end == std::string::npos) end = report.transcript.size();
      const std::string line = report.transcript.substr(pos, end - pos);
      if (line.rfind("FAIL", 0) == 0) out << line << '\n';
      pos = end + 1;
    }
  }
  return report.pass ? kExitSuccess : kExitCheckFailed;
}

void add_query_options(CLI::App* sub, QueryOptions& opt) {
  sub->add_option("file", opt.file, "instance in .abd format")->required();
  sub->add_option("--ordering", opt.ordering, "none|subset|card|prio-subset|prio-card|penalty");
  sub->add_option("--query", opt.query, "query kind")
      ->required()
      ->check(CLI::IsMember(kQueries));
  sub->add_option("--set", opt.set, "candidate explanation, comma separated");
  sub->add_option("--var", opt.var, "hypothesis for relevant/necessary/dispensable");
  sub->add_flag("--json", opt.json, "machine-readable output");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Propositional abduction: explanations under preference orderings"};
  app.require_subcommand(1);

  QueryOptions solve_opt;
  CLI::App* solve = app.add_subcommand("solve", "answer a query with the solver");
  add_query_options(solve, solve_opt);
  solve->add_option("--max-explanations", solve_opt.limits.max_explanations,
                    "explanation cap per query");
  solve->add_option("--max-subsets", solve_opt.limits.max_subsets, "subset cap per query");

  QueryOptions oracle_opt;
  CLI::App* oracle = app.add_subcommand("oracle", "answer a query by brute force");
  add_query_options(oracle, oracle_opt);

  ReduceOptions reduce_opt;
  CLI::App* reduce = app.add_subcommand("reduce", "apply a transformation");
  reduce->add_option("file", reduce_opt.file, "instance in .abd format")->required();
  reduce->add_option("--transform", reduce_opt.transform, "transformation")
      ->required()
      ->check(CLI::IsMember({"f", "gc", "i", "first-of-first", "dh-replicate"}));
  reduce->add_option("--variant", reduce_opt.variant, "auto|plain|verify|prio")
      ->check(CLI::IsMember({"auto", "plain", "verify", "prio"}));
  reduce->add_option("--c", reduce_opt.c, "padding size for gc");
  reduce->add_option("--var", reduce_opt.var, "target hypothesis for first-of-first");
  reduce->add_option("-o,--output", reduce_opt.output, "output file (default stdout)");

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "run a correspondence check");
  check->add_option("file", check_opt.file, "instance in .abd format")->required();
  check->add_option("--lemma", check_opt.lemma, "property to check")
      ->required()
      ->check(CLI::IsMember({"basic", "add-assumptions", "basic-order", "first-of-first",
                             "dh-replicate", "repr-equivalence"}));
  check->add_option("--seed", check_opt.seed, "sampling seed");
  check->add_option("--samples", check_opt.samples, "sampled indicator sets");
  check->add_option("--c", check_opt.c, "padding size (default class + 1)");
  check->add_flag("--verbose", check_opt.verbose, "print the whole transcript");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_opt, out);
    if (oracle->parsed()) return run_oracle(oracle_opt, out);
    if (reduce->parsed()) return run_reduce(reduce_opt, out);
    return run_check(check_opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidInstance& e) {
    err << "invalid instance: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace abduction
