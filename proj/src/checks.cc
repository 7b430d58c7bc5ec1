#include "abduction/checks.h"

#include <algorithm>

#include "abduction/oracle.h"
#include "abduction/reductions.h"

namespace abduction {

void CheckReport::note(const std::string& line) { transcript += line + "\n"; }

void CheckReport::fail(const std::string& line) {
  pass = false;
  ++failures;
  note("FAIL " + line);
}

void CheckReport::merge(const CheckReport& other) {
  pass = pass && other.pass;
  cases += other.cases;
  failures += other.failures;
  transcript += other.transcript;
}

namespace {

std::vector<VarSet> subsets_of(const VarSet& set) {
  const std::vector<Var>& vs = set.vars();
  if (vs.size() > 20) throw CapExceeded("too many hypotheses to enumerate subsets");
  std::vector<VarSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    std::vector<Var> s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (mask >> i & 1) s.push_back(vs[i]);
    }
    out.emplace_back(std::move(s));
  }
  return out;
}

VarSet map_set(const VarSet& s, const std::vector<Var>& map) {
  std::vector<Var> out;
  for (Var v : s) out.push_back(map[v]);
  return VarSet(std::move(out));
}

std::vector<VarSet> extend_all(const std::vector<VarSet>& sets, const VarSet& extra,
                               const std::vector<Var>* map = nullptr) {
  std::vector<VarSet> out;
  for (const VarSet& s : sets) out.push_back(set_union(map ? map_set(s, *map) : s, extra));
  std::sort(out.begin(), out.end());
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool contains(const std::vector<VarSet>& sorted, const VarSet& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

}  // namespace

// ---------------------------------------------------------------- f

CheckReport check_indicator_reduction(const AbductionInstance& instance, Rng& rng, int samples) {
  CheckReport report;
  const ReductionRecord rec = transform_f(instance, Variant::kPlain);
  const OracleReport base = brute_solutions(instance);
  AbductionSolver solver(rec.output);
  const std::vector<VarSet> subsets = subsets_of(instance.hypotheses());
  for (const VarSet& s : subsets) {
    ++report.cases;
    const bool expected = contains(base.solutions, s);
    if (solver.is_member(set_union(s, rec.forced)) != expected) {
      report.fail("S=" + to_string(s, &instance) + ": input " + yes_no(expected) +
                  ", S u R in reduced " + yes_no(!expected));
    }
  }

  std::vector<Var> indicators;
  for (const auto& [i, c] : rec.c_index) indicators.push_back(c);
  for (const auto& [i, d] : rec.d_index) indicators.push_back(d);
  std::sort(indicators.begin(), indicators.end());
  if (indicators.empty()) return report;
  auto flip = [&](VarSet& q) {
    const Var v = indicators[rng.below(indicators.size())];
    if (q.contains(v)) {
      q.erase(v);
    } else {
      q.insert(v);
    }
  };
  for (int k = 0; k < samples; ++k) {
    VarSet q;
    if (k % 2 == 0) {
      for (Var v : indicators) {
        if (rng.coin()) q.insert(v);
      }
    } else {
      q = rec.forced;
      const int flips = rng.between(1, 3);
      for (int j = 0; j < flips; ++j) flip(q);
    }
    while (q == rec.forced) flip(q);
    for (const VarSet& s : subsets) {
      ++report.cases;
      if (solver.is_member(set_union(s, q))) {
        report.fail("S=" + to_string(s, &instance) + " with a non-canonical indicator set of size " +
                    std::to_string(q.size()) + " is a solution");
      }
    }
  }
  return report;
}

CheckReport check_indicator_reduction_order(const AbductionInstance& instance) {
  CheckReport report;
  const ReductionRecord rec = transform_f(instance, Variant::kPlain);
  AbductionSolver solver(rec.output);
  for (OrderingKind kind : {OrderingKind::kSubsetPref, OrderingKind::kCardPref}) {
    ++report.cases;
    const Ordering ord(kind);
    const auto expected = extend_all(brute_minimal(instance, ord).minimal, rec.forced);
    const Enumeration got = solver.enumerate(ord);
    if (!got.complete || got.explanations != expected) {
      report.fail(to_string(kind) + ": reduced instance has " +
                  std::to_string(got.explanations.size()) + " minimal explanations, expected " +
                  std::to_string(expected.size()));
    }
  }
  return report;
}

// ---------------------------------------------------------------- g_c

CheckReport check_padding(const AbductionInstance& instance, int c) {
  CheckReport report;
  if (c == 0) c = class_of(instance, false) + 1;
  const ReductionRecord rec = transform_gc_record(instance, c, Variant::kPlain);
  const OracleReport in = brute_solutions(instance);
  const OracleReport out = brute_solutions(rec.output);
  const int pad = c - static_cast<int>(instance.hypotheses().size());
  ++report.cases;
  if (out.solutions.size() != in.solutions.size() << pad) {
    report.fail("|SOL| " + std::to_string(out.solutions.size()) + " after padding to " +
                std::to_string(c) + ", expected " + std::to_string(in.solutions.size()) +
                " * 2^" + std::to_string(pad));
  }
  for (OrderingKind kind : {OrderingKind::kSubsetPref, OrderingKind::kCardPref}) {
    ++report.cases;
    const Ordering ord(kind);
    const auto expected = extend_all(brute_minimal(instance, ord).minimal, {}, &rec.var_map);
    if (minimal_elements(ord, out.solutions) != expected) {
      report.fail(to_string(kind) + ": minimal explanations change under padding to " +
                  std::to_string(c));
    }
  }
  return report;
}

// ---------------------------------------------------------------- first-of-first

CheckReport check_first_of_first(const AbductionInstance& instance, QueryKind kind) {
  CheckReport report;
  for (OrderingKind ok : {OrderingKind::kSubsetPrio, OrderingKind::kCardPrio}) {
    const OracleReport in = brute_minimal(instance, Ordering::for_instance(ok, instance));
    for (Var h : instance.hypotheses()) {
      ++report.cases;
      const ReductionRecord rec = transform_first_of_first(instance, h);
      const Var t = rec.fresh.at("t");
      const OracleReport out = brute_minimal(rec.output, Ordering::for_instance(ok, rec.output));
      const bool before = oracle_query(in, kind, h).answer;
      const bool after = oracle_query(out, kind, t).answer;
      if (before != after) {
        report.fail(to_string(ok) + " " + to_string(kind) + " of " + instance.label(h) + ": " +
                    yes_no(before) + " in the input, " + yes_no(after) + " for t");
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- replication

CheckReport check_dh_replicate(const AbductionInstance& instance) {
  CheckReport report;
  const OracleReport base = brute_solutions(instance);
  if (base.solutions.empty()) {
    report.skipped = true;
    report.note("skipped: the input has no explanation");
    return report;
  }
  const ReductionRecord rec = transform_dh_replicate(instance);
  const Ordering card(OrderingKind::kCardPref);
  const std::vector<VarSet> minimal = minimal_elements(card, base.solutions);
  AbductionSolver solver(rec.output);
  for (const VarSet& s : subsets_of(instance.hypotheses())) {
    report.cases += 2;
    const VarSet lifted = set_union(s, rec.forced);
    const bool member = contains(base.solutions, s);
    if (solver.is_member(lifted) != member) {
      report.fail("S=" + to_string(s, &instance) + ": membership " + yes_no(member) +
                  " in the input only");
    }
    const bool min = contains(minimal, s);
    if (solver.verify(card, lifted).answer != min) {
      report.fail("S=" + to_string(s, &instance) + ": card-minimal " + yes_no(min) +
                  " in the input only");
    }
  }
  return report;
}

// ---------------------------------------------------------------- representative equivalence

std::string to_string(EquivReduction r) {
  switch (r) {
    case EquivReduction::kI: return "i";
    case EquivReduction::kIVerify: return "i-verify";
    case EquivReduction::kIPrio: return "i-prio";
    case EquivReduction::kIdentity: return "identity";
  }
  return "?";
}

std::string to_string(EquivProblem p) {
  switch (p) {
    case EquivProblem::kExists: return "exists";
    case EquivProblem::kVerify: return "verify";
    case EquivProblem::kRelevant: return "relevant";
    case EquivProblem::kNecessary: return "necessary";
  }
  return "?";
}

namespace {

bool answer(const AbductionInstance& x, EquivProblem problem, OrderingKind kind, Var h) {
  AbductionSolver solver(x);
  const Ordering ord = Ordering::for_instance(kind, x);
  switch (problem) {
    case EquivProblem::kExists: return solver.exists().answer;
    case EquivProblem::kVerify: return solver.verify(ord, *x.candidate).answer;
    case EquivProblem::kRelevant: return solver.query(ord, QueryKind::kRelevant, h).answer;
    case EquivProblem::kNecessary: return solver.query(ord, QueryKind::kNecessary, h).answer;
  }
  return false;
}

}  // namespace

CheckReport check_representative_equivalence(EquivReduction reduction, EquivProblem problem,
                                             OrderingKind ordering,
                                             const AbductionInstance& instance) {
  if (ordering == OrderingKind::kPenalty) {
    throw AbductionError("the representative check does not support the penalty ordering");
  }
  if (reduction == EquivReduction::kIVerify && problem != EquivProblem::kVerify) {
    throw AbductionError("the i-verify reduction only applies to verify");
  }
  const bool prio = reduction == EquivReduction::kIPrio;
  const Variant variant = prio ? Variant::kPrio
                          : reduction == EquivReduction::kIVerify ? Variant::kVerify
                                                                  : Variant::kPlain;
  // Weights are not part of any representative; plain reductions see one class.
  AbductionInstance y = instance;
  y.weights.clear();
  if (!prio) y.classes = {y.hypotheses()};
  y = validate_instance(std::move(y));
  const int c = class_of(y, prio);

  auto reduce = [&](const AbductionInstance& x) {
    if (reduction == EquivReduction::kIdentity) return transform_gc_record(x, c, variant);
    return transform_i(x, variant);
  };

  std::vector<std::optional<VarSet>> candidates;
  if (problem != EquivProblem::kVerify) {
    candidates.push_back(std::nullopt);
  } else if (y.candidate) {
    candidates.push_back(y.candidate);
  } else {
    for (const VarSet& s : subsets_of(y.hypotheses())) candidates.push_back(s);
  }
  std::vector<Var> targets = {0};
  if (problem == EquivProblem::kRelevant || problem == EquivProblem::kNecessary) {
    targets = y.hypotheses().vars();
  }

  CheckReport report;
  for (const auto& candidate : candidates) {
    AbductionInstance yc = y;
    yc.candidate = candidate;
    AbductionInstance repr = repr_instance(c, prio ? Variant::kPrio : Variant::kPlain);
    if (candidate) repr.candidate = VarSet{};
    const ReductionRecord ry = reduce(yc);
    const ReductionRecord rr = reduce(repr);
    const std::string label =
        candidate ? " candidate " + to_string(*candidate, &y) : std::string();
    if (fixed_part(ry.output) != fixed_part(rr.output)) {
      report.note("fixed parts differ" + label);
    }
    AbductionInstance combined = rr.output;
    combined.manifestations = ry.output.manifestations;
    combined.candidate = ry.output.candidate;
    if (combined.num_vars != ry.output.num_vars) {
      ++report.cases;
      report.fail("fixed parts have different variable counts" + label);
      continue;
    }
    try {
      combined = validate_instance(std::move(combined));
    } catch (const InvalidInstance& e) {
      ++report.cases;
      report.fail("varying part does not fit the representative" + label + ": " + e.what());
      continue;
    }
    for (Var h : targets) {
      ++report.cases;
      const Var mapped = h ? ry.var_map[h] : 0;
      const bool direct = answer(ry.output, problem, ordering, mapped);
      const bool via_repr = answer(combined, problem, ordering, mapped);
      const std::string what = to_string(reduction) + " " + to_string(problem) + " " +
                               to_string(ordering) + label +
                               (h ? " h=" + y.label(h) : std::string());
      if (direct != via_repr) {
        report.fail(what + ": reduced " + yes_no(direct) + ", representative " +
                    yes_no(via_repr));
      } else {
        report.note("ok " + what + ": " + yes_no(direct));
      }
    }
  }
  return report;
}

}  // namespace abduction
