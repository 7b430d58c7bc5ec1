// Core value types for propositional abduction: variables, literals,
// clauses, theories, explanation sets and abduction instances.
//
// Variables are positive integers. A literal packs a variable and a
// polarity into one integer so that the natural integer order is the
// canonical literal order (ascending variable, positive before negative).

#ifndef ABDUCTION_CORE_H_
#define ABDUCTION_CORE_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace abduction {

using Var = int;

class AbductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance violates a structural invariant.
class InvalidInstance : public AbductionError {
 public:
  using AbductionError::AbductionError;
};

// A search or enumeration exceeded its configured budget.
class CapExceeded : public AbductionError {
 public:
  using AbductionError::AbductionError;
};

class Lit {
 public:
  constexpr Lit() = default;
  static constexpr Lit positive(Var v) { return Lit(2 * v); }
  static constexpr Lit negative(Var v) { return Lit(2 * v + 1); }
  // DIMACS convention: -3 is the negation of variable 3.
  static Lit from_dimacs(int value);

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool is_negative() const { return (code_ & 1) != 0; }
  constexpr bool is_positive() const { return (code_ & 1) == 0; }
  constexpr int code() const { return code_; }
  int dimacs() const { return is_negative() ? -var() : var(); }

  constexpr Lit operator~() const { return Lit(code_ ^ 1); }
  constexpr auto operator<=>(const Lit&) const = default;

 private:
  constexpr explicit Lit(int code) : code_(code) {}
  int code_ = 0;
};

// Sorted set of variables. Used for hypothesis sets, explanations,
// manifestations and anything else that is "a set of variables".
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<Var> vars);
  explicit VarSet(std::vector<Var> vars);

  bool contains(Var v) const;
  void insert(Var v);
  void erase(Var v);
  VarSet with(Var v) const;
  VarSet without(Var v) const;

  bool is_subset_of(const VarSet& other) const;
  bool intersects(const VarSet& other) const;

  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }
  const std::vector<Var>& vars() const { return vars_; }

  bool operator==(const VarSet&) const = default;
  // Shorter sets first, then lexicographic; the canonical listing order.
  std::strong_ordering operator<=>(const VarSet& other) const;

 private:
  std::vector<Var> vars_;
};

VarSet set_union(const VarSet& a, const VarSet& b);
VarSet set_intersection(const VarSet& a, const VarSet& b);
VarSet set_difference(const VarSet& a, const VarSet& b);

// A disjunction of literals in canonical order. Duplicate literals are
// merged. Tautologies (x and -x together) are representable on purpose:
// padding constructions add them.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Lit> lits);
  explicit Clause(std::vector<Lit> lits);
  static Clause from_dimacs(std::initializer_list<int> values);

  const std::vector<Lit>& lits() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  bool is_tautology() const;
  int num_distinct_vars() const;
  int num_positive() const;
  VarSet vars() const;

  bool operator==(const Clause&) const = default;
  // Shorter clauses first, then lexicographic on literals.
  std::strong_ordering operator<=>(const Clause& other) const;

 private:
  std::vector<Lit> lits_;
};

struct TheoryFlags {
  bool is3cnf = true;
  bool is_horn = true;
  bool is_definite_horn = true;
  bool operator==(const TheoryFlags&) const = default;
};

// A CNF theory kept as a sorted, duplicate-free clause list.
class Theory {
 public:
  Theory() = default;
  explicit Theory(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  const TheoryFlags& flags() const { return flags_; }
  VarSet vars() const;
  bool contains(const Clause& clause) const;
  Var max_var() const;

  bool operator==(const Theory& other) const { return clauses_ == other.clauses_; }

 private:
  std::vector<Clause> clauses_;
  TheoryFlags flags_;
};

using Explanation = VarSet;

// <<H_1,...,H_m>, M, T>, optionally with weights over H and a candidate
// explanation (for verification-shaped instances).
struct AbductionInstance {
  int num_vars = 0;
  // names[v - 1] is the display name of v; empty when unnamed.
  std::vector<std::string> names;
  // Priority classes, most likely first. A plain instance has one class.
  std::vector<VarSet> classes;
  VarSet manifestations;
  Theory theory;
  // Empty when the instance carries no penalties.
  std::map<Var, std::int64_t> weights;
  std::optional<Explanation> candidate;

  VarSet hypotheses() const;
  // 1-based class index of a hypothesis, 0 when v is not a hypothesis.
  int class_of_var(Var v) const;
  bool has_weights() const { return !weights.empty(); }
  // Name if present, else the decimal id.
  std::string label(Var v) const;
  // Resolves a name or a decimal id; nullopt when unknown.
  std::optional<Var> lookup(const std::string& token) const;

  bool operator==(const AbductionInstance&) const = default;
};

// Checks every instance invariant, computes theory flags and renumbers the
// used variables densely as 1..n (preserving relative order). When
// `renumbering` is non-null it receives old id -> new id (0 for dropped ids).
AbductionInstance validate_instance(AbductionInstance raw,
                                    std::vector<Var>* renumbering = nullptr);

std::string to_string(const VarSet& set, const AbductionInstance* context = nullptr);
std::string to_string(const Clause& clause, const AbductionInstance* context = nullptr);

}  // namespace abduction

#endif  // ABDUCTION_CORE_H_
