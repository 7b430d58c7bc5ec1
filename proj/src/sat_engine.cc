#include "abduction/sat_engine.h"

#include <algorithm>

namespace abduction {

bool Assignment::satisfies(const Clause& c) const {
  return std::any_of(c.begin(), c.end(), [&](Lit l) { return satisfies(l); });
}

VarSet Assignment::true_vars() const {
  std::vector<Var> out;
  for (std::size_t v = 1; v < values_.size(); ++v) {
    if (values_[v] > 0) out.push_back(static_cast<Var>(v));
  }
  return VarSet(std::move(out));
}

// ---------------------------------------------------------------- SatEngine

SatEngine::SatEngine(const Theory& theory, int num_vars) {
  grow(std::max(num_vars, theory.max_var()));
  for (const Clause& c : theory.clauses()) {
    if (c.is_tautology()) continue;
    if (c.empty()) {
      has_empty_clause_ = true;
    } else if (c.size() == 1) {
      units_.push_back(c.lits()[0]);
    } else {
      clauses_.push_back(c.lits());
      attach(static_cast<int>(clauses_.size()) - 1);
    }
  }
}

void SatEngine::grow(int num_vars) {
  if (num_vars <= num_vars_) return;
  num_vars_ = num_vars;
  watches_.resize(2 * static_cast<std::size_t>(num_vars_) + 2);
  values_.resize(static_cast<std::size_t>(num_vars_) + 1, -1);
}

void SatEngine::attach(int index) {
  const auto& c = clauses_[index];
  watches_[c[0].code()].push_back(index);
  watches_[c[1].code()].push_back(index);
}

void SatEngine::detach_last() {
  const int index = static_cast<int>(clauses_.size()) - 1;
  const auto& c = clauses_[index];
  for (int k = 0; k < 2; ++k) {
    auto& ws = watches_[c[k].code()];
    ws.erase(std::find(ws.begin(), ws.end(), index));
  }
  clauses_.pop_back();
}

signed char SatEngine::lit_value(Lit l) const {
  const signed char v = values_[l.var()];
  if (v < 0) return -1;
  return l.is_negative() ? static_cast<signed char>(1 - v) : v;
}

bool SatEngine::enqueue(Lit l) {
  const signed char v = lit_value(l);
  if (v == 0) return false;
  if (v == 1) return true;
  values_[l.var()] = l.is_negative() ? 0 : 1;
  trail_.push_back(l);
  return true;
}

bool SatEngine::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit false_lit = ~trail_[qhead_++];
    auto& ws = watches_[false_lit.code()];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      const int ci = ws[i++];
      auto& c = clauses_[ci];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (lit_value(c[0]) == 1) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (lit_value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1].code()].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = ci;
      if (!enqueue(c[0])) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        return false;
      }
    }
    ws.resize(j);
  }
  return true;
}

void SatEngine::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    const Var v = trail_.back().var();
    values_[v] = -1;
    next_var_ = std::min(next_var_, v);
    trail_.pop_back();
  }
  qhead_ = std::min(qhead_, trail_size);
}

std::optional<Assignment> SatEngine::solve(std::span<const Lit> assumptions,
                                           const std::vector<Lit>* extra_clause) {
  ++calls_;
  for (Lit l : assumptions) grow(l.var());
  bool extra_attached = false;
  bool ok = !has_empty_clause_;
  std::vector<Lit> extra_units;
  if (extra_clause) {
    std::vector<Lit> lits = *extra_clause;
    for (Lit l : lits) grow(l.var());
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    bool tautology = false;
    for (std::size_t k = 1; k < lits.size(); ++k) {
      if (lits[k].var() == lits[k - 1].var()) tautology = true;
    }
    if (!tautology) {
      if (lits.empty()) {
        ok = false;
      } else if (lits.size() == 1) {
        extra_units.push_back(lits[0]);
      } else {
        clauses_.push_back(std::move(lits));
        attach(static_cast<int>(clauses_.size()) - 1);
        extra_attached = true;
      }
    }
  }

  trail_.clear();
  qhead_ = 0;
  next_var_ = 1;
  std::vector<Decision> decisions;
  std::optional<Assignment> result;

  for (Lit l : units_) ok = ok && enqueue(l);
  for (Lit l : extra_units) ok = ok && enqueue(l);
  for (Lit l : assumptions) ok = ok && enqueue(l);

  while (ok) {
    if (!propagate()) {
      while (!decisions.empty() && decisions.back().flipped) decisions.pop_back();
      if (decisions.empty()) {
        ok = false;
        break;
      }
      Decision& d = decisions.back();
      undo_to(d.trail_size);
      d.flipped = true;
      enqueue(~d.lit);
      continue;
    }
    while (next_var_ <= num_vars_ && values_[next_var_] >= 0) ++next_var_;
    if (next_var_ > num_vars_) {
      result = Assignment(std::vector<signed char>(values_.begin(), values_.end()));
      break;
    }
    decisions.push_back({trail_.size(), Lit::positive(next_var_), false});
    enqueue(Lit::positive(next_var_));
  }

  undo_to(0);
  if (extra_attached) detach_last();
  return result;
}

std::optional<std::vector<Lit>> SatEngine::implied_literals(std::span<const Lit> assumptions) {
  ++calls_;
  for (Lit l : assumptions) grow(l.var());
  trail_.clear();
  qhead_ = 0;
  bool ok = !has_empty_clause_;
  for (Lit l : units_) ok = ok && enqueue(l);
  for (Lit l : assumptions) ok = ok && enqueue(l);
  ok = ok && propagate();
  std::optional<std::vector<Lit>> result;
  if (ok) result = trail_;
  undo_to(0);
  next_var_ = 1;
  return result;
}

// ---------------------------------------------------------------- ForwardChainer

ForwardChainer::ForwardChainer(const Theory& theory, int num_vars)
    : num_vars_(std::max(num_vars, theory.max_var())) {
  if (!theory.flags().is_definite_horn) {
    throw AbductionError("forward chaining needs a definite Horn theory");
  }
  watching_.resize(static_cast<std::size_t>(num_vars_) + 1);
  for (const Clause& c : theory.clauses()) {
    if (c.is_tautology()) continue;
    Rule r{0, 0};
    for (Lit l : c) {
      if (l.is_positive()) {
        r.head = l.var();
      } else {
        ++r.body_size;
        watching_[l.var()].push_back(static_cast<int>(rules_.size()));
      }
    }
    rules_.push_back(r);
  }
}

VarSet ForwardChainer::closure(const VarSet& facts) {
  ++calls_;
  std::vector<char> derived(static_cast<std::size_t>(num_vars_) + 1, 0);
  std::vector<int> missing(rules_.size());
  std::vector<Var> queue;
  auto derive = [&](Var v) {
    if (v < 1 || v > num_vars_) return;
    if (!derived[v]) {
      derived[v] = 1;
      queue.push_back(v);
    }
  };
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    missing[r] = rules_[r].body_size;
    if (missing[r] == 0) derive(rules_[r].head);
  }
  std::vector<Var> outside;  // facts outside the theory's variables
  for (Var v : facts) {
    if (v > num_vars_) {
      outside.push_back(v);
    } else {
      derive(v);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (int r : watching_[queue[qi]]) {
      if (--missing[r] == 0) derive(rules_[r].head);
    }
  }
  std::vector<Var> out = std::move(outside);
  for (Var v = 1; v <= num_vars_; ++v) {
    if (derived[v]) out.push_back(v);
  }
  return VarSet(std::move(out));
}

// ---------------------------------------------------------------- free functions

namespace {

std::vector<Lit> positive_lits(const VarSet& vars) {
  std::vector<Lit> out;
  for (Var v : vars) out.push_back(Lit::positive(v));
  return out;
}

}  // namespace

std::optional<Assignment> is_consistent(const Theory& theory, const Explanation& assumptions,
                                        EngineCounters* counters) {
  SatEngine engine(theory);
  const auto lits = positive_lits(assumptions);
  auto result = engine.solve(lits);
  if (counters) counters->calls += engine.calls();
  return result;
}

bool entails(const Theory& theory, const Explanation& assumptions, const VarSet& goals,
             EngineCounters* counters) {
  if (goals.empty()) return true;
  SatEngine engine(theory);
  const auto lits = positive_lits(assumptions);
  std::vector<Lit> refutation;
  for (Var g : goals) refutation.push_back(Lit::negative(g));
  const bool counter_model = engine.solve(lits, &refutation).has_value();
  if (counters) counters->calls += engine.calls();
  return !counter_model;
}

VarSet forward_chain(const Theory& theory, const Explanation& assumptions,
                     EngineCounters* counters) {
  ForwardChainer chainer(theory);
  VarSet out = chainer.closure(assumptions);
  if (counters) counters->calls += chainer.calls();
  return out;
}

TheoryFlags classify_theory(const Theory& theory) {
  TheoryFlags flags;
  for (const Clause& c : theory.clauses()) {
    if (c.num_distinct_vars() > 3) flags.is3cnf = false;
    const int positives = c.num_positive();
    if (positives > 1) flags.is_horn = false;
    if (positives != 1) flags.is_definite_horn = false;
  }
  return flags;
}

}  // namespace abduction
