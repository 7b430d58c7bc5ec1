// Instance transformations: clause universes, classification /
// representative / extension functions, the clause-indicator reduction f,
// hypothesis padding g_c, their composition i, the first-of-first
// construction for prioritized relevance and necessity, and replication
// for definite Horn theories.
//
// Every transformation numbers fresh variables canonically, so equal inputs
// give byte-identical outputs and the fixed part of i depends on the class
// of its input only.

#ifndef ABDUCTION_REDUCTIONS_H_
#define ABDUCTION_REDUCTIONS_H_

#include <map>
#include <string>
#include <vector>

#include "abduction/core.h"
#include "abduction/oracle.h"

namespace abduction {

// All non-tautological clauses with 1 to 3 distinct variables over
// `variables` (restricted by dialect), in canonical clause order.
struct ClauseUniverse {
  Dialect dialect = Dialect::kGeneral;
  VarSet variables;
  std::vector<Clause> clauses;

  // 1-based index of a clause, 0 when absent.
  int index_of(const Clause& clause) const;
};

ClauseUniverse pi(const VarSet& variables, Dialect dialect);

// plain: <H,M,T>; verify: carries a candidate H_a; prio: prioritized.
enum class Variant { kPlain, kVerify, kPrio };

std::string to_string(Variant v);

struct ReductionRecord {
  AbductionInstance output;
  // Input variable id -> output variable id (0 when dropped).
  std::vector<Var> var_map;
  // The clause universe the indicator variables refer to.
  std::vector<Clause> universe;
  std::map<int, Var> c_index;                 // clause index -> c_i
  std::map<int, Var> d_index;                 // clause index -> d_i
  std::map<int, std::vector<Var>> replicas;   // clause index -> c^1_i .. c^(n+1)_i
  Explanation forced;                         // R
  std::map<std::string, Var> fresh;           // role -> variable
};

// max(|H|, |Var(T) \ H|); with `prioritized` also m and every |H_i|.
int class_of(const AbductionInstance& instance, bool prioritized);
// Prioritized form when the instance has more than one class.
int class_of(const AbductionInstance& instance);

AbductionInstance repr_instance(int c, Variant shape);

// Appends tautologies over fresh variables until |Var(T) \ H| = n.
AbductionInstance exte(const AbductionInstance& instance, int n);

// H' = H u C u D (C u D join class 1), M' = M u R,
// T' = {-c_i v -d_i, -c_i v gamma_i}. A candidate becomes H_a u R. The
// verify variant requires a candidate.
ReductionRecord transform_f(const AbductionInstance& instance, Variant variant);

// Pads to class c and renumbers canonically: class members class by class
// (original first, then padding), then the other theory variables, then
// padding variables. plain/verify pad H and X to c; prio pads every class
// to c members, the number of classes to c and X to c.
ReductionRecord transform_gc_record(const AbductionInstance& instance, int c, Variant variant);
AbductionInstance transform_gc(const AbductionInstance& instance, int c, Variant variant);

// f(g_Class(instance)).
ReductionRecord transform_i(const AbductionInstance& instance, Variant variant);

// Prepends the class {t,s}, adds u and v to M, and adds
// target -> u, t -> v, s -> u, s -> v.
ReductionRecord transform_first_of_first(const AbductionInstance& instance, Var target);

// n = |H|; every definite Horn clause gamma_i over H u X gets n+1 replica
// hypotheses, T' = {gamma_i v -c^1_i v ... v -c^(n+1)_i}, and the replicas of
// clauses in T join M.
ReductionRecord transform_dh_replicate(const AbductionInstance& instance);

// Canonical text of the part of an instance fixed before the query:
// variable count, hypothesis classes, weights and clauses. No names, no
// manifestations, no candidate contents.
std::string fixed_part(const AbductionInstance& instance);

}  // namespace abduction

#endif  // ABDUCTION_REDUCTIONS_H_
