#include "abduction/core.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace abduction {

Lit Lit::from_dimacs(int value) {
  if (value == 0) throw AbductionError("literal 0 is not a literal");
  return value > 0 ? positive(value) : negative(-value);
}

// ---------------------------------------------------------------- VarSet

VarSet::VarSet(std::initializer_list<Var> vars) : VarSet(std::vector<Var>(vars)) {}

VarSet::VarSet(std::vector<Var> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool VarSet::contains(Var v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

void VarSet::insert(Var v) {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) vars_.insert(it, v);
}

void VarSet::erase(Var v) {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it != vars_.end() && *it == v) vars_.erase(it);
}

VarSet VarSet::with(Var v) const {
  VarSet copy = *this;
  copy.insert(v);
  return copy;
}

VarSet VarSet::without(Var v) const {
  VarSet copy = *this;
  copy.erase(v);
  return copy;
}

bool VarSet::is_subset_of(const VarSet& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(),
                       vars_.end());
}

bool VarSet::intersects(const VarSet& other) const {
  auto a = vars_.begin();
  auto b = other.vars_.begin();
  while (a != vars_.end() && b != other.vars_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

std::strong_ordering VarSet::operator<=>(const VarSet& other) const {
  if (auto c = vars_.size() <=> other.vars_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(vars_.begin(), vars_.end(),
                                                other.vars_.begin(),
                                                other.vars_.end());
}

VarSet set_union(const VarSet& a, const VarSet& b) {
  std::vector<Var> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VarSet(std::move(out));
}

VarSet set_intersection(const VarSet& a, const VarSet& b) {
  std::vector<Var> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VarSet(std::move(out));
}

VarSet set_difference(const VarSet& a, const VarSet& b) {
  std::vector<Var> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VarSet(std::move(out));
}

// ---------------------------------------------------------------- Clause

Clause::Clause(std::initializer_list<Lit> lits) : Clause(std::vector<Lit>(lits)) {}

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause Clause::from_dimacs(std::initializer_list<int> values) {
  std::vector<Lit> lits;
  for (int v : values) lits.push_back(Lit::from_dimacs(v));
  return Clause(std::move(lits));
}

bool Clause::is_tautology() const {
  // Complementary literals are adjacent in canonical order.
  for (std::size_t i = 1; i < lits_.size(); ++i) {
    if (lits_[i].var() == lits_[i - 1].var()) return true;
  }
  return false;
}

int Clause::num_distinct_vars() const {
  int count = 0;
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i == 0 || lits_[i].var() != lits_[i - 1].var()) ++count;
  }
  return count;
}

int Clause::num_positive() const {
  return static_cast<int>(
      std::count_if(lits_.begin(), lits_.end(), [](Lit l) { return l.is_positive(); }));
}

VarSet Clause::vars() const {
  std::vector<Var> vs;
  for (Lit l : lits_) vs.push_back(l.var());
  return VarSet(std::move(vs));
}

std::strong_ordering Clause::operator<=>(const Clause& other) const {
  if (auto c = lits_.size() <=> other.lits_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(lits_.begin(), lits_.end(),
                                                other.lits_.begin(),
                                                other.lits_.end());
}

// ---------------------------------------------------------------- Theory

Theory::Theory(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
  for (const Clause& c : clauses_) {
    if (c.num_distinct_vars() > 3) flags_.is3cnf = false;
    int positives = c.num_positive();
    if (positives > 1) flags_.is_horn = false;
    if (positives != 1) flags_.is_definite_horn = false;
  }
}

VarSet Theory::vars() const {
  std::vector<Var> vs;
  for (const Clause& c : clauses_) {
    for (Lit l : c) vs.push_back(l.var());
  }
  return VarSet(std::move(vs));
}

bool Theory::contains(const Clause& clause) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), clause);
}

Var Theory::max_var() const {
  Var m = 0;
  for (const Clause& c : clauses_) {
    for (Lit l : c) m = std::max(m, l.var());
  }
  return m;
}

// ---------------------------------------------------------------- Instance

VarSet AbductionInstance::hypotheses() const {
  std::vector<Var> all;
  for (const VarSet& cls : classes) all.insert(all.end(), cls.begin(), cls.end());
  return VarSet(std::move(all));
}

int AbductionInstance::class_of_var(Var v) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].contains(v)) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::string AbductionInstance::label(Var v) const {
  if (v >= 1 && static_cast<std::size_t>(v) <= names.size() && !names[v - 1].empty()) {
    return names[v - 1];
  }
  return std::to_string(v);
}

std::optional<Var> AbductionInstance::lookup(const std::string& token) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!names[i].empty() && names[i] == token) return static_cast<Var>(i + 1);
  }
  Var v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec == std::errc() && ptr == token.data() + token.size() && v >= 1 &&
      v <= num_vars) {
    return v;
  }
  return std::nullopt;
}

AbductionInstance validate_instance(AbductionInstance raw, std::vector<Var>* renumbering) {
  if (raw.num_vars < 0) throw InvalidInstance("negative variable count");
  if (raw.classes.empty()) raw.classes.emplace_back();
  raw.names.resize(static_cast<std::size_t>(raw.num_vars));

  auto check_range = [&](Var v, const char* what) {
    if (v < 1 || v > raw.num_vars) {
      throw InvalidInstance(std::string(what) + " variable " + std::to_string(v) +
                            " is outside 1.." + std::to_string(raw.num_vars));
    }
  };

  std::vector<int> owner(static_cast<std::size_t>(raw.num_vars) + 1, 0);
  for (std::size_t i = 0; i < raw.classes.size(); ++i) {
    for (Var v : raw.classes[i]) {
      check_range(v, "hypothesis");
      if (owner[v] != 0) {
        throw InvalidInstance("priority classes " + std::to_string(owner[v]) + " and " +
                              std::to_string(i + 1) + " overlap on variable " +
                              std::to_string(v));
      }
      owner[v] = static_cast<int>(i) + 1;
    }
  }
  for (const Clause& c : raw.theory.clauses()) {
    for (Lit l : c) check_range(l.var(), "clause");
  }
  const VarSet theory_vars = raw.theory.vars();
  for (Var m : raw.manifestations) {
    check_range(m, "manifestation");
    if (!theory_vars.contains(m)) {
      throw InvalidInstance("manifestation " + raw.label(m) +
                            " does not occur in the theory");
    }
  }
  const VarSet hyps = raw.hypotheses();
  if (!raw.weights.empty()) {
    for (const auto& [v, w] : raw.weights) {
      if (!hyps.contains(v)) {
        throw InvalidInstance("weight given for non-hypothesis " + raw.label(v));
      }
      if (w < 1) {
        throw InvalidInstance("weight of " + raw.label(v) + " must be at least 1, got " +
                              std::to_string(w));
      }
    }
    for (Var h : hyps) {
      if (!raw.weights.contains(h)) {
        throw InvalidInstance("hypothesis " + raw.label(h) + " has no weight");
      }
    }
  }
  if (raw.candidate && !raw.candidate->is_subset_of(hyps)) {
    throw InvalidInstance("candidate explanation is not a subset of the hypotheses");
  }
  std::set<std::string> seen_names;
  for (const std::string& n : raw.names) {
    if (n.empty()) continue;
    if (!seen_names.insert(n).second) throw InvalidInstance("duplicate name " + n);
  }

  // Dense renumbering of used variables.
  const VarSet used = set_union(set_union(hyps, raw.manifestations), theory_vars);
  std::vector<Var> map(static_cast<std::size_t>(raw.num_vars) + 1, 0);
  Var next = 0;
  for (Var v : used) map[v] = ++next;
  if (renumbering) *renumbering = map;
  if (next == raw.num_vars) return raw;

  auto remap_set = [&](const VarSet& s) {
    std::vector<Var> out;
    for (Var v : s) out.push_back(map[v]);
    return VarSet(std::move(out));
  };
  AbductionInstance out;
  out.num_vars = next;
  out.names.resize(static_cast<std::size_t>(next));
  for (Var v : used) out.names[map[v] - 1] = raw.names[v - 1];
  for (const VarSet& cls : raw.classes) out.classes.push_back(remap_set(cls));
  out.manifestations = remap_set(raw.manifestations);
  std::vector<Clause> clauses;
  for (const Clause& c : raw.theory.clauses()) {
    std::vector<Lit> lits;
    for (Lit l : c) {
      lits.push_back(l.is_negative() ? Lit::negative(map[l.var()])
                                     : Lit::positive(map[l.var()]));
    }
    clauses.emplace_back(std::move(lits));
  }
  out.theory = Theory(std::move(clauses));
  for (const auto& [v, w] : raw.weights) out.weights[map[v]] = w;
  if (raw.candidate) out.candidate = remap_set(*raw.candidate);
  return out;
}

std::string to_string(const VarSet& set, const AbductionInstance* context) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Var v : set) {
    if (!first) os << ',';
    first = false;
    os << (context ? context->label(v) : std::to_string(v));
  }
  os << '}';
  return os.str();
}

std::string to_string(const Clause& clause, const AbductionInstance* context) {
  std::ostringstream os;
  bool first = true;
  for (Lit l : clause) {
    if (!first) os << " v ";
    first = false;
    if (l.is_negative()) os << '-';
    os << (context ? context->label(l.var()) : std::to_string(l.var()));
  }
  if (first) os << "[]";
  return os.str();
}

}  // namespace abduction
