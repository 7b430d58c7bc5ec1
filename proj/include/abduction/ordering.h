// Preference orderings over explanations.

#ifndef ABDUCTION_ORDERING_H_
#define ABDUCTION_ORDERING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abduction/core.h"

namespace abduction {

enum class OrderingKind {
  kUniversal,   // no preference: every pair is equivalent
  kSubsetPref,  // A <= B iff A is a subset of B
  kCardPref,    // A <= B iff |A| <= |B|
  kSubsetPrio,  // subset comparison class by class, least likely class first
  kCardPrio,    // cardinality vector compared lexicographically, H_m first
  kPenalty,     // total weight
};

enum class Comparison { kStrictlyBetter, kStrictlyWorse, kEquivalent, kIncomparable };

std::string to_string(OrderingKind kind);
std::string to_string(Comparison c);
// Accepts the CLI spellings (none, subset, card, prio-subset, prio-card,
// penalty) and the enum names without prefix.
std::optional<OrderingKind> parse_ordering(const std::string& text);

// An ordering together with the data it needs (priority classes, weights).
// Cheap to copy; independent of any particular instance once built.
class Ordering {
 public:
  explicit Ordering(OrderingKind kind, std::vector<VarSet> classes = {},
                    std::map<Var, std::int64_t> weights = {});
  // Takes classes and weights from the instance. Throws AbductionError when
  // the penalty ordering is requested for an instance without weights.
  static Ordering for_instance(OrderingKind kind, const AbductionInstance& instance);

  OrderingKind kind() const { return kind_; }
  const std::vector<VarSet>& classes() const { return classes_; }

  // A <= B in the ordering (at least as preferred).
  bool preceq(const VarSet& a, const VarSet& b) const;
  Comparison compare(const VarSet& a, const VarSet& b) const;
  bool strictly_better(const VarSet& a, const VarSet& b) const {
    return compare(a, b) == Comparison::kStrictlyBetter;
  }

  // True for orderings induced by a cost vector (card-pref, card-prio,
  // penalty): A <= B iff cost(A) <= cost(B) lexicographically.
  bool is_cost_based() const;
  bool is_subset_based() const {
    return kind_ == OrderingKind::kSubsetPref || kind_ == OrderingKind::kSubsetPrio;
  }
  std::size_t cost_width() const;
  // Cost contribution of a single hypothesis; costs are additive.
  std::vector<std::int64_t> element_cost(Var v) const;
  std::vector<std::int64_t> cost(const VarSet& s) const;

 private:
  OrderingKind kind_;
  std::vector<VarSet> classes_;
  std::map<Var, std::int64_t> weights_;
};

Comparison compare(OrderingKind kind, const VarSet& a, const VarSet& b,
                   const AbductionInstance& instance);

struct PropertyWitness {
  VarSet first;
  VarSet second;
  std::optional<Var> added;  // the shared hypothesis, for meaningfulness
  Comparison observed = Comparison::kEquivalent;
  Comparison expected = Comparison::kEquivalent;
};

struct PropertyResult {
  bool pass = true;
  std::optional<PropertyWitness> witness;
  std::uint64_t cases = 0;
};

struct OrderingProperties {
  PropertyResult meaningful;
  PropertyResult irredundant;
  bool exhaustive = true;
};

// Meaningful: adjoining the same fresh hypothesis to both sides never
// changes the comparison. Irredundant: a proper subset is strictly better.
// Exhaustive when the universe is small enough for `budget` cases,
// otherwise `budget` seeded random cases per property.
OrderingProperties check_ordering_properties(const Ordering& ordering,
                                             const VarSet& universe,
                                             std::uint64_t budget,
                                             std::uint64_t seed = 1);

std::string describe(const PropertyWitness& w);

}  // namespace abduction

#endif  // ABDUCTION_ORDERING_H_
