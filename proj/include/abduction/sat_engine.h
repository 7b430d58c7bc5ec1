// Satisfiability, consistency and entailment for clausal theories.
//
// SatEngine is a plain DPLL procedure (two watched literals, chronological
// backtracking, no learning) with a fixed branching rule: the lowest
// unassigned variable, true first. Witness assignments are therefore
// reproducible. ForwardChainer computes least models of definite Horn
// theories in linear time.

#ifndef ABDUCTION_SAT_ENGINE_H_
#define ABDUCTION_SAT_ENGINE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "abduction/core.h"

namespace abduction {

// Total assignment over variables 1..num_vars.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<signed char> values) : values_(std::move(values)) {}

  bool value(Var v) const {
    return v >= 1 && static_cast<std::size_t>(v) < values_.size() && values_[v] > 0;
  }
  bool satisfies(Lit l) const { return value(l.var()) != l.is_negative(); }
  bool satisfies(const Clause& c) const;
  int num_vars() const { return values_.empty() ? 0 : static_cast<int>(values_.size()) - 1; }
  VarSet true_vars() const;

 private:
  std::vector<signed char> values_;  // index 0 unused
};

class SatEngine {
 public:
  explicit SatEngine(const Theory& theory, int num_vars = 0);

  // Satisfiability of theory + unit assumptions (+ one extra clause).
  std::optional<Assignment> solve(std::span<const Lit> assumptions,
                                  const std::vector<Lit>* extra_clause = nullptr);

  // Unit propagation only: the literals implied by the assumptions, or
  // nullopt when propagation alone reaches a conflict.
  std::optional<std::vector<Lit>> implied_literals(std::span<const Lit> assumptions);

  std::uint64_t calls() const { return calls_; }
  int num_vars() const { return num_vars_; }

 private:
  struct Decision {
    std::size_t trail_size;
    Lit lit;
    bool flipped;
  };

  void grow(int num_vars);
  signed char lit_value(Lit l) const;
  bool enqueue(Lit l);
  bool propagate();
  void undo_to(std::size_t trail_size);
  void attach(int clause_index);
  void detach_last();

  int num_vars_ = 0;
  bool has_empty_clause_ = false;
  std::vector<std::vector<Lit>> clauses_;  // size >= 2, non-tautological
  std::vector<Lit> units_;
  std::vector<std::vector<int>> watches_;  // by literal code
  std::vector<signed char> values_;        // -1 unassigned, 0 false, 1 true
  std::vector<Lit> trail_;
  std::size_t qhead_ = 0;
  Var next_var_ = 1;
  std::uint64_t calls_ = 0;
};

// Linear-time least model computation for definite Horn theories.
class ForwardChainer {
 public:
  // Throws AbductionError unless the theory is definite Horn.
  explicit ForwardChainer(const Theory& theory, int num_vars = 0);

  VarSet closure(const VarSet& facts);
  std::uint64_t calls() const { return calls_; }

 private:
  struct Rule {
    Var head;
    int body_size;
  };
  int num_vars_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> watching_;  // var -> rules with var in body
  std::uint64_t calls_ = 0;
};

// Calls-to-engine counter shared by the free functions below.
struct EngineCounters {
  std::uint64_t calls = 0;
};

// theory + assumptions satisfiable; the witness model when it is.
std::optional<Assignment> is_consistent(const Theory& theory, const Explanation& assumptions,
                                        EngineCounters* counters = nullptr);

// theory + assumptions |= every goal. Decided with one call, by refuting
// theory + assumptions + (-g1 v ... v -gk). Empty goals are entailed.
bool entails(const Theory& theory, const Explanation& assumptions, const VarSet& goals,
             EngineCounters* counters = nullptr);

VarSet forward_chain(const Theory& theory, const Explanation& assumptions,
                     EngineCounters* counters = nullptr);

TheoryFlags classify_theory(const Theory& theory);

}  // namespace abduction

#endif  // ABDUCTION_SAT_ENGINE_H_
