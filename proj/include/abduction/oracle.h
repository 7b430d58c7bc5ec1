// Brute-force reference answers by explicit enumeration, plus a seeded
// random instance generator.
//
// The membership test is a truth table over all variables; it does not use
// the SAT engine. Every model contributes its hypothesis projection, and a
// superset transform over the hypothesis bits gives consistency and
// entailment for all subsets of H at once.

#ifndef ABDUCTION_ORACLE_H_
#define ABDUCTION_ORACLE_H_

#include <cstdint>
#include <vector>

#include "abduction/core.h"
#include "abduction/ordering.h"
#include "abduction/random.h"
#include "abduction/solver.h"

namespace abduction {

inline constexpr std::uint64_t kOracleCap = std::uint64_t{1} << 16;
inline constexpr int kOracleMaxVars = 20;

struct OracleReport {
  std::vector<Explanation> solutions;  // canonical order
  std::vector<Explanation> minimal;    // canonical order
  std::uint64_t subsets = 0;
  std::uint64_t assignments = 0;
};

// Throws CapExceeded when 2^|H| > cap or the instance has more than
// kOracleMaxVars variables.
OracleReport brute_solutions(const AbductionInstance& instance, std::uint64_t cap = kOracleCap);
OracleReport brute_minimal(const AbductionInstance& instance, const Ordering& ordering,
                           std::uint64_t cap = kOracleCap);

// Minimal elements of `candidates` under the strict part of `ordering`.
std::vector<Explanation> minimal_elements(const Ordering& ordering,
                                          const std::vector<Explanation>& candidates);

// Reference answers computed from a report for the same ordering.
QueryResult oracle_exists(const OracleReport& report);
QueryResult oracle_verify(const OracleReport& report, const Explanation& candidate);
QueryResult oracle_query(const OracleReport& report, QueryKind kind, Var h);

enum class Dialect { kGeneral, kHorn, kDefiniteHorn };

struct RandomShape {
  int min_hypotheses = 1;
  int max_hypotheses = 4;
  // Bound on |H| + |X| (all variables).
  int max_vars = 6;
  int min_clauses = 1;
  int max_clauses = 8;
  int max_clause_vars = 3;
  int max_manifestations = 2;
  int max_classes = 1;
  bool weights = false;
  int max_weight = 5;
  Dialect dialect = Dialect::kGeneral;
};

// A validated instance drawn from `shape`; identical for identical seeds.
AbductionInstance random_instance(Rng& rng, const RandomShape& shape);

}  // namespace abduction

#endif  // ABDUCTION_ORACLE_H_
