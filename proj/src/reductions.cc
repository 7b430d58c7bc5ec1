#include "abduction/reductions.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace abduction {

int ClauseUniverse::index_of(const Clause& clause) const {
  auto it = std::lower_bound(clauses.begin(), clauses.end(), clause);
  if (it == clauses.end() || *it != clause) return 0;
  return static_cast<int>(it - clauses.begin()) + 1;
}

ClauseUniverse pi(const VarSet& variables, Dialect dialect) {
  ClauseUniverse u;
  u.dialect = dialect;
  u.variables = variables;
  const std::vector<Var>& x = variables.vars();
  const std::size_t n = x.size();
  auto emit = [&](const std::vector<Var>& vars) {
    const std::size_t w = vars.size();
    for (unsigned signs = 0; signs < (1u << w); ++signs) {
      std::vector<Lit> lits;
      int positives = 0;
      for (std::size_t i = 0; i < w; ++i) {
        const bool negative = (signs >> i) & 1;
        positives += !negative;
        lits.push_back(negative ? Lit::negative(vars[i]) : Lit::positive(vars[i]));
      }
      if (dialect == Dialect::kHorn && positives > 1) continue;
      if (dialect == Dialect::kDefiniteHorn && positives != 1) continue;
      u.clauses.emplace_back(std::move(lits));
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    emit({x[i]});
    for (std::size_t j = i + 1; j < n; ++j) {
      emit({x[i], x[j]});
      for (std::size_t k = j + 1; k < n; ++k) emit({x[i], x[j], x[k]});
    }
  }
  std::sort(u.clauses.begin(), u.clauses.end());
  return u;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kPlain: return "plain";
    case Variant::kVerify: return "verify";
    case Variant::kPrio: return "prio";
  }
  return "?";
}

namespace {

VarSet other_vars(const AbductionInstance& instance) {
  return set_difference(instance.theory.vars(), instance.hypotheses());
}

// Hands out fresh variable ids with names that do not clash with existing
// ones.
class FreshVars {
 public:
  explicit FreshVars(AbductionInstance& out) : out_(out) {
    for (const std::string& n : out_.names) {
      if (!n.empty()) taken_.insert(n);
    }
  }

  Var make(const std::string& base) {
    std::string name = base;
    for (int k = 2; taken_.contains(name); ++k) name = base + "_" + std::to_string(k);
    taken_.insert(name);
    out_.names.push_back(name);
    return ++out_.num_vars;
  }

 private:
  AbductionInstance& out_;
  std::set<std::string> taken_;
};

std::vector<Var> identity_map(int n) {
  std::vector<Var> map(static_cast<std::size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) map[v] = v;
  return map;
}

void check_small_clauses(const Theory& theory) {
  for (const Clause& c : theory.clauses()) {
    if (!c.is_tautology() && c.num_distinct_vars() > 3) {
      throw AbductionError("clause " + to_string(c) + " has more than 3 variables");
    }
  }
}

}  // namespace

int class_of(const AbductionInstance& instance, bool prioritized) {
  int value = static_cast<int>(other_vars(instance).size());
  if (prioritized) {
    value = std::max(value, static_cast<int>(instance.classes.size()));
    for (const VarSet& cls : instance.classes) value = std::max(value, static_cast<int>(cls.size()));
  } else {
    value = std::max(value, static_cast<int>(instance.hypotheses().size()));
  }
  return value;
}

int class_of(const AbductionInstance& instance) {
  return class_of(instance, instance.classes.size() > 1);
}

AbductionInstance repr_instance(int c, Variant shape) {
  if (c < 1) throw AbductionError("representative class must be at least 1");
  AbductionInstance raw;
  std::vector<Var> all;
  if (shape == Variant::kPrio) {
    for (int i = 1; i <= c; ++i) {
      VarSet cls;
      for (int j = 1; j <= c; ++j) {
        raw.names.push_back("h" + std::to_string(i) + "_" + std::to_string(j));
        cls.insert(++raw.num_vars);
        all.push_back(raw.num_vars);
      }
      raw.classes.push_back(std::move(cls));
    }
  } else {
    VarSet cls;
    for (int j = 1; j <= c; ++j) {
      raw.names.push_back("h" + std::to_string(j));
      cls.insert(++raw.num_vars);
      all.push_back(raw.num_vars);
    }
    raw.classes.push_back(std::move(cls));
  }
  for (int j = 1; j <= c; ++j) {
    raw.names.push_back("x" + std::to_string(j));
    all.push_back(++raw.num_vars);
  }
  raw.theory = Theory(pi(VarSet(all), Dialect::kGeneral).clauses);
  if (shape == Variant::kVerify) raw.candidate = VarSet{};
  return validate_instance(std::move(raw));
}

AbductionInstance exte(const AbductionInstance& instance, int n) {
  const int cls = class_of(instance);
  if (n < cls) {
    throw AbductionError("extension size " + std::to_string(n) + " is below the class " +
                         std::to_string(cls));
  }
  AbductionInstance out = instance;
  std::vector<Clause> clauses = out.theory.clauses();
  FreshVars fresh(out);
  for (int j = static_cast<int>(other_vars(instance).size()) + 1; j <= n; ++j) {
    const Var x = fresh.make("x" + std::to_string(j));
    clauses.push_back(Clause{Lit::positive(x), Lit::negative(x)});
  }
  out.theory = Theory(std::move(clauses));
  return out;
}

ReductionRecord transform_gc_record(const AbductionInstance& instance, int c, Variant variant) {
  const bool prio = variant == Variant::kPrio;
  const int cls = class_of(instance, prio);
  if (c < cls) {
    throw AbductionError("padding size " + std::to_string(c) + " is below the class " +
                         std::to_string(cls));
  }
  if (variant == Variant::kVerify && !instance.candidate) {
    throw AbductionError("the verify variant needs a candidate explanation");
  }
  ReductionRecord rec;
  rec.var_map.assign(static_cast<std::size_t>(instance.num_vars) + 1, 0);
  AbductionInstance& out = rec.output;
  FreshVars fresh(out);
  auto keep = [&](Var v) {
    out.names.push_back(instance.names[v - 1]);
    rec.var_map[v] = ++out.num_vars;
    return out.num_vars;
  };

  std::vector<VarSet> classes = instance.classes;
  if (prio) {
    while (static_cast<int>(classes.size()) < c) classes.emplace_back();
  }
  int padded_total = static_cast<int>(instance.hypotheses().size());
  std::vector<Var> padding_h;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    VarSet members;
    for (Var v : classes[i]) members.insert(keep(v));
    if (prio) {
      for (int j = static_cast<int>(classes[i].size()) + 1; j <= c; ++j) {
        const std::string role = "h" + std::to_string(i + 1) + "_" + std::to_string(j);
        const Var h = fresh.make(role);
        members.insert(h);
        padding_h.push_back(h);
        rec.fresh[role] = h;
      }
    } else if (i == 0) {
      while (padded_total < c) {
        const std::string role = "h" + std::to_string(++padded_total);
        const Var h = fresh.make(role);
        members.insert(h);
        padding_h.push_back(h);
        rec.fresh[role] = h;
      }
    }
    out.classes.push_back(std::move(members));
  }
  const VarSet x = other_vars(instance);
  for (Var v : x) keep(v);

  auto map_set = [&](const VarSet& s) {
    std::vector<Var> vs;
    for (Var v : s) vs.push_back(rec.var_map[v]);
    return VarSet(std::move(vs));
  };
  std::vector<Clause> clauses;
  for (const Clause& cl : instance.theory.clauses()) {
    std::vector<Lit> lits;
    for (Lit l : cl) {
      const Var v = rec.var_map[l.var()];
      lits.push_back(l.is_negative() ? Lit::negative(v) : Lit::positive(v));
    }
    clauses.emplace_back(std::move(lits));
  }
  for (int j = static_cast<int>(x.size()) + 1; j <= c; ++j) {
    const std::string role = "x" + std::to_string(j);
    const Var v = fresh.make(role);
    rec.fresh[role] = v;
    clauses.push_back(Clause{Lit::positive(v), Lit::negative(v)});
  }
  out.theory = Theory(std::move(clauses));
  out.manifestations = map_set(instance.manifestations);
  for (const auto& [v, w] : instance.weights) out.weights[rec.var_map[v]] = w;
  if (instance.has_weights()) {
    for (Var h : padding_h) out.weights[h] = 1;
  }
  if (instance.candidate) out.candidate = map_set(*instance.candidate);
  out = validate_instance(std::move(out));
  return rec;
}

AbductionInstance transform_gc(const AbductionInstance& instance, int c, Variant variant) {
  return transform_gc_record(instance, c, variant).output;
}

ReductionRecord transform_f(const AbductionInstance& instance, Variant variant) {
  if (variant == Variant::kVerify && !instance.candidate) {
    throw AbductionError("the verify variant needs a candidate explanation");
  }
  check_small_clauses(instance.theory);
  ReductionRecord rec;
  rec.var_map = identity_map(instance.num_vars);
  AbductionInstance& out = rec.output;
  out = instance;
  const VarSet hyps = instance.hypotheses();
  const ClauseUniverse u = pi(set_union(hyps, instance.theory.vars()), Dialect::kGeneral);
  rec.universe = u.clauses;
  const int k = static_cast<int>(u.clauses.size());

  FreshVars fresh(out);
  for (int i = 1; i <= k; ++i) rec.c_index[i] = fresh.make("c" + std::to_string(i));
  for (int i = 1; i <= k; ++i) rec.d_index[i] = fresh.make("d" + std::to_string(i));

  std::vector<Clause> clauses;
  std::vector<Var> forced;
  VarSet indicators;
  for (int i = 1; i <= k; ++i) {
    const Var ci = rec.c_index[i];
    const Var di = rec.d_index[i];
    const Clause& gamma = u.clauses[i - 1];
    clauses.push_back(Clause{Lit::negative(ci), Lit::negative(di)});
    std::vector<Lit> implied = gamma.lits();
    implied.push_back(Lit::negative(ci));
    clauses.emplace_back(std::move(implied));
    forced.push_back(instance.theory.contains(gamma) ? ci : di);
    indicators.insert(ci);
    indicators.insert(di);
  }
  rec.forced = VarSet(std::move(forced));
  out.theory = Theory(std::move(clauses));
  out.manifestations = set_union(instance.manifestations, rec.forced);
  out.classes[0] = set_union(out.classes[0], indicators);
  if (instance.has_weights()) {
    for (Var v : indicators) out.weights[v] = 1;
  }
  if (out.candidate) out.candidate = set_union(*out.candidate, rec.forced);
  out = validate_instance(std::move(out));
  return rec;
}

ReductionRecord transform_i(const AbductionInstance& instance, Variant variant) {
  const int c = class_of(instance, variant == Variant::kPrio);
  ReductionRecord padded = transform_gc_record(instance, c, variant);
  ReductionRecord rec = transform_f(padded.output, variant);
  std::vector<Var> composed(padded.var_map.size(), 0);
  for (std::size_t v = 1; v < padded.var_map.size(); ++v) {
    if (padded.var_map[v] != 0) composed[v] = rec.var_map[padded.var_map[v]];
  }
  rec.var_map = std::move(composed);
  for (const auto& [role, v] : padded.fresh) rec.fresh[role] = v;
  return rec;
}

ReductionRecord transform_first_of_first(const AbductionInstance& instance, Var target) {
  if (!instance.hypotheses().contains(target)) {
    throw AbductionError("variable " + instance.label(target) + " is not a hypothesis");
  }
  ReductionRecord rec;
  rec.var_map = identity_map(instance.num_vars);
  AbductionInstance& out = rec.output;
  out = instance;
  FreshVars fresh(out);
  const Var t = fresh.make("t");
  const Var s = fresh.make("s");
  const Var u = fresh.make("u");
  const Var v = fresh.make("v");
  rec.fresh = {{"t", t}, {"s", s}, {"u", u}, {"v", v}};
  out.classes.insert(out.classes.begin(), VarSet{t, s});
  out.manifestations = set_union(out.manifestations, VarSet{u, v});
  std::vector<Clause> clauses = out.theory.clauses();
  clauses.push_back(Clause{Lit::negative(target), Lit::positive(u)});
  clauses.push_back(Clause{Lit::negative(t), Lit::positive(v)});
  clauses.push_back(Clause{Lit::negative(s), Lit::positive(u)});
  clauses.push_back(Clause{Lit::negative(s), Lit::positive(v)});
  out.theory = Theory(std::move(clauses));
  if (instance.has_weights()) {
    out.weights[t] = 1;
    out.weights[s] = 1;
  }
  out = validate_instance(std::move(out));
  return rec;
}

ReductionRecord transform_dh_replicate(const AbductionInstance& instance) {
  if (!instance.theory.flags().is_definite_horn) {
    throw AbductionError("replication needs a definite Horn theory");
  }
  check_small_clauses(instance.theory);
  const VarSet hyps = instance.hypotheses();
  const ClauseUniverse u = pi(set_union(hyps, instance.theory.vars()), Dialect::kDefiniteHorn);
  const int n = static_cast<int>(hyps.size());
  const int k = static_cast<int>(u.clauses.size());

  ReductionRecord rec;
  rec.var_map = identity_map(instance.num_vars);
  rec.universe = u.clauses;
  AbductionInstance& out = rec.output;
  out = instance;
  FreshVars fresh(out);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= n + 1; ++j) {
      rec.replicas[i].push_back(fresh.make("c" + std::to_string(i) + "_" + std::to_string(j)));
    }
  }
  std::vector<Clause> clauses;
  std::vector<Var> forced;
  VarSet replica_set;
  for (int i = 1; i <= k; ++i) {
    const Clause& gamma = u.clauses[i - 1];
    std::vector<Lit> lits = gamma.lits();
    for (Var r : rec.replicas[i]) {
      lits.push_back(Lit::negative(r));
      replica_set.insert(r);
    }
    clauses.emplace_back(std::move(lits));
    if (instance.theory.contains(gamma)) {
      forced.insert(forced.end(), rec.replicas[i].begin(), rec.replicas[i].end());
    }
  }
  for (const Clause& c : instance.theory.clauses()) {
    if (!c.is_tautology() && !u.index_of(c)) {
      throw AbductionError("clause " + to_string(c) + " is not a definite Horn clause");
    }
  }
  rec.forced = VarSet(std::move(forced));
  out.theory = Theory(std::move(clauses));
  out.manifestations = set_union(out.manifestations, rec.forced);
  out.classes[0] = set_union(out.classes[0], replica_set);
  if (instance.has_weights()) {
    for (Var r : replica_set) out.weights[r] = 1;
  }
  if (out.candidate) out.candidate = set_union(*out.candidate, rec.forced);
  out = validate_instance(std::move(out));
  return rec;
}

std::string fixed_part(const AbductionInstance& instance) {
  std::ostringstream os;
  os << "p abd " << instance.num_vars << '\n';
  for (std::size_t i = 0; i < instance.classes.size(); ++i) {
    os << "h " << i + 1;
    for (Var v : instance.classes[i]) os << ' ' << v;
    os << " 0\n";
  }
  for (const auto& [v, w] : instance.weights) os << "w " << v << ' ' << w << '\n';
  if (instance.candidate) os << "c candidate\n";
  for (const Clause& c : instance.theory.clauses()) {
    for (Lit l : c) os << l.dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

}  // namespace abduction
