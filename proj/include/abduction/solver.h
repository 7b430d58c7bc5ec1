// Decision procedures for abduction: existence, verification, relevance,
// necessity, dispensability, and enumeration of minimal explanations.
//
// AbductionSolver works in the style of implicit hitting set solvers. A
// master problem proposes a cheapest hypothesis set that satisfies the
// constraints learned so far; the SAT engine either certifies it as an
// explanation or yields a new constraint:
//
//   * a positive clause (every explanation contains one of these
//     hypotheses) from a counter-model of the entailment, grown to a
//     maximal non-entailing set;
//   * a negative clause (no explanation contains all of these) from a
//     deletion-minimized inconsistent subset.
//
// Learned constraints hold for every query on the instance and are kept
// across calls. Before any search, hypotheses that every explanation must
// contain (manifestations that nothing else can derive) and hypotheses that
// no explanation may contain (refuted by unit propagation) are fixed.

#ifndef ABDUCTION_SOLVER_H_
#define ABDUCTION_SOLVER_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abduction/core.h"
#include "abduction/ordering.h"
#include "abduction/sat_engine.h"

namespace abduction {

struct Limits {
  std::size_t max_explanations = 10000;
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
};

struct SolverStats {
  std::uint64_t engine_calls = 0;
  std::uint64_t subsets = 0;
};

struct QueryResult {
  bool answer = false;
  std::optional<Explanation> witness;
  SolverStats stats;
};

struct Enumeration {
  std::vector<Explanation> explanations;  // canonical order
  bool complete = true;
  SolverStats stats;
};

enum class QueryKind { kRelevant, kNecessary, kDispensable };

std::string to_string(QueryKind kind);

// Constraints on the hypothesis sets a region search may return.
struct Region {
  VarSet include;
  VarSet exclude;
  // No returned set may contain all members of a block.
  std::vector<VarSet> blocks;
};

class AbductionSolver {
 public:
  explicit AbductionSolver(AbductionInstance instance, Limits limits = {});
  ~AbductionSolver();
  AbductionSolver(const AbductionSolver&) = delete;
  AbductionSolver& operator=(const AbductionSolver&) = delete;

  const AbductionInstance& instance() const { return instance_; }

  bool is_member(const Explanation& s);

  QueryResult exists();
  QueryResult verify(const Ordering& ordering, const Explanation& candidate);
  QueryResult query(const Ordering& ordering, QueryKind kind, Var h);
  Enumeration enumerate(const Ordering& ordering);

  // A cheapest explanation inside the region, cost measured by `ordering`
  // (cardinality for orderings without a cost). When `limit` is given only
  // explanations with cost < limit (or <= limit when `inclusive`) qualify.
  std::optional<Explanation> optimum(const Region& region, const Ordering& ordering,
                                     const std::optional<std::vector<std::int64_t>>& limit =
                                         std::nullopt,
                                     bool inclusive = false);

  // Deletes hypotheses (never those in `keep`) while the set stays an
  // explanation. Yields a subset-minimal explanation among those
  // containing `keep`.
  Explanation shrink(Explanation s, const VarSet& keep = {});

  // Every explanation contains `forced()`; none meets `excluded()`.
  const VarSet& forced() const { return forced_; }
  const VarSet& excluded() const { return excluded_; }
  std::size_t learned_positive() const { return positive_.size(); }
  std::size_t learned_negative() const { return negative_.size(); }

  SolverStats stats() const;

 private:
  enum class Status { kSolution, kInconsistent, kNotEntailed };

  void preprocess();
  bool consistent(const VarSet& s);
  std::optional<VarSet> counter_model_hyps(const VarSet& s);
  Status check_and_learn(const VarSet& local_full);
  void count_subset();

  std::vector<Explanation> minimal_subset_explanations(bool* complete);
  std::vector<std::int64_t> optimum_cost(const Ordering& ordering, bool* found);
  QueryResult query_subset_pref(QueryKind kind, Var h);
  QueryResult query_cost(const Ordering& ordering, QueryKind kind, Var h);
  QueryResult query_from_list(const std::vector<Explanation>& minimal, QueryKind kind, Var h);
  std::vector<Explanation> filter_minimal(const Ordering& ordering,
                                          const std::vector<Explanation>& candidates) const;

  AbductionInstance instance_;
  Limits limits_;
  VarSet hypotheses_;
  std::vector<Lit> not_m_;  // the clause -m1 v ... v -mk
  bool horn_ = false;
  std::unique_ptr<SatEngine> engine_;
  std::unique_ptr<ForwardChainer> chainer_;

  VarSet forced_;
  VarSet excluded_;
  std::vector<Var> free_;    // local index -> variable
  std::vector<int> local_;   // variable -> local index, -1 if not free
  bool no_solution_ = false;

  std::vector<std::vector<int>> positive_;
  std::vector<std::vector<int>> negative_;

  std::uint64_t subsets_ = 0;
  std::uint64_t query_subsets_start_ = 0;

  std::optional<std::vector<Explanation>> subset_minimal_cache_;
  bool subset_minimal_complete_ = true;
  std::map<std::vector<std::vector<std::int64_t>>, std::optional<std::vector<std::int64_t>>>
      optimum_cache_;
};

// Free-function forms. Each builds a fresh solver.
bool is_solution(const AbductionInstance& instance, const Explanation& candidate);
QueryResult exists_explanation(const AbductionInstance& instance, Limits limits = {});
QueryResult verify_minimal(const AbductionInstance& instance, const Ordering& ordering,
                           const Explanation& candidate, Limits limits = {});
QueryResult query_variable(const AbductionInstance& instance, const Ordering& ordering,
                           QueryKind kind, Var h, Limits limits = {});
Enumeration enumerate_minimal(const AbductionInstance& instance, const Ordering& ordering,
                              Limits limits = {});

enum class FastQuery { kExists, kSubsetNecessary };

// Polynomial procedures for definite Horn theories, by forward chaining.
// Throws AbductionError when the theory is not definite Horn.
QueryResult dh_fast_path(const AbductionInstance& instance, FastQuery query, Var h = 0);

}  // namespace abduction

#endif  // ABDUCTION_SOLVER_H_
