#include "abduction/ordering.h"

#include <algorithm>
#include <sstream>

#include "abduction/random.h"

namespace abduction {

std::string to_string(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::kUniversal: return "none";
    case OrderingKind::kSubsetPref: return "subset";
    case OrderingKind::kCardPref: return "card";
    case OrderingKind::kSubsetPrio: return "prio-subset";
    case OrderingKind::kCardPrio: return "prio-card";
    case OrderingKind::kPenalty: return "penalty";
  }
  return "?";
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::kStrictlyBetter: return "strictly-better";
    case Comparison::kStrictlyWorse: return "strictly-worse";
    case Comparison::kEquivalent: return "equivalent";
    case Comparison::kIncomparable: return "incomparable";
  }
  return "?";
}

std::optional<OrderingKind> parse_ordering(const std::string& text) {
  if (text == "none" || text == "universal") return OrderingKind::kUniversal;
  if (text == "subset" || text == "subset-pref") return OrderingKind::kSubsetPref;
  if (text == "card" || text == "card-pref") return OrderingKind::kCardPref;
  if (text == "prio-subset" || text == "subset-prio") return OrderingKind::kSubsetPrio;
  if (text == "prio-card" || text == "card-prio") return OrderingKind::kCardPrio;
  if (text == "penalty") return OrderingKind::kPenalty;
  return std::nullopt;
}

Ordering::Ordering(OrderingKind kind, std::vector<VarSet> classes,
                   std::map<Var, std::int64_t> weights)
    : kind_(kind), classes_(std::move(classes)), weights_(std::move(weights)) {
  if ((kind_ == OrderingKind::kSubsetPrio || kind_ == OrderingKind::kCardPrio) &&
      classes_.empty()) {
    throw AbductionError("prioritized ordering needs at least one priority class");
  }
}

Ordering Ordering::for_instance(OrderingKind kind, const AbductionInstance& instance) {
  std::vector<VarSet> classes = instance.classes;
  if (classes.empty()) classes.emplace_back();
  // An instance without hypotheses trivially has all the weights it needs.
  if (kind == OrderingKind::kPenalty && !instance.has_weights() &&
      !instance.hypotheses().empty()) {
    throw AbductionError("penalty ordering needs hypothesis weights");
  }
  return Ordering(kind, std::move(classes), instance.weights);
}

bool Ordering::is_cost_based() const {
  return kind_ == OrderingKind::kCardPref || kind_ == OrderingKind::kCardPrio ||
         kind_ == OrderingKind::kPenalty;
}

std::size_t Ordering::cost_width() const {
  return kind_ == OrderingKind::kCardPrio ? classes_.size() : 1;
}

std::vector<std::int64_t> Ordering::element_cost(Var v) const {
  std::vector<std::int64_t> c(cost_width(), 0);
  switch (kind_) {
    case OrderingKind::kPenalty: {
      auto it = weights_.find(v);
      if (it == weights_.end()) {
        throw AbductionError("no weight for variable " + std::to_string(v));
      }
      c[0] = it->second;
      break;
    }
    case OrderingKind::kCardPrio: {
      // Most significant position holds the least likely class H_m.
      const std::size_t m = classes_.size();
      for (std::size_t i = 0; i < m; ++i) {
        if (classes_[i].contains(v)) {
          c[m - 1 - i] = 1;
          return c;
        }
      }
      throw AbductionError("variable " + std::to_string(v) + " is in no priority class");
    }
    default:
      c[0] = 1;
  }
  return c;
}

std::vector<std::int64_t> Ordering::cost(const VarSet& s) const {
  std::vector<std::int64_t> total(cost_width(), 0);
  for (Var v : s) {
    auto c = element_cost(v);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += c[i];
  }
  return total;
}

namespace {

// Subset prioritization: find the least likely class on which the two sets
// differ; the comparison is decided there by strict inclusion.
bool subset_prio_preceq(const std::vector<VarSet>& classes, const VarSet& a,
                        const VarSet& b) {
  for (std::size_t i = classes.size(); i-- > 0;) {
    VarSet pa = set_intersection(a, classes[i]);
    VarSet pb = set_intersection(b, classes[i]);
    if (pa == pb) continue;
    return pa.is_subset_of(pb);
  }
  return true;
}

}  // namespace

bool Ordering::preceq(const VarSet& a, const VarSet& b) const {
  switch (kind_) {
    case OrderingKind::kUniversal:
      return true;
    case OrderingKind::kSubsetPref:
      return a.is_subset_of(b);
    case OrderingKind::kSubsetPrio:
      return subset_prio_preceq(classes_, a, b);
    case OrderingKind::kCardPref:
    case OrderingKind::kCardPrio:
    case OrderingKind::kPenalty:
      return cost(a) <= cost(b);
  }
  return false;
}

Comparison Ordering::compare(const VarSet& a, const VarSet& b) const {
  const bool ab = preceq(a, b);
  const bool ba = preceq(b, a);
  if (ab && ba) return Comparison::kEquivalent;
  if (ab) return Comparison::kStrictlyBetter;
  if (ba) return Comparison::kStrictlyWorse;
  return Comparison::kIncomparable;
}

Comparison compare(OrderingKind kind, const VarSet& a, const VarSet& b,
                   const AbductionInstance& instance) {
  return Ordering::for_instance(kind, instance).compare(a, b);
}

namespace {

VarSet subset_from_mask(const std::vector<Var>& universe, std::uint64_t mask) {
  std::vector<Var> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask >> i & 1) out.push_back(universe[i]);
  }
  return VarSet(std::move(out));
}

// Checks one meaningfulness case; records the first failure.
void meaningful_case(const Ordering& ord, const VarSet& a, const VarSet& b, Var h,
                     PropertyResult& result) {
  ++result.cases;
  if (!result.pass) return;
  const Comparison base = ord.compare(a, b);
  const Comparison extended = ord.compare(a.with(h), b.with(h));
  if (base != extended) {
    result.pass = false;
    result.witness = PropertyWitness{a, b, h, extended, base};
  }
}

void irredundant_case(const Ordering& ord, const VarSet& a, const VarSet& b,
                      PropertyResult& result) {
  ++result.cases;
  if (!result.pass) return;
  const Comparison c = ord.compare(a, b);
  if (c != Comparison::kStrictlyBetter) {
    result.pass = false;
    result.witness = PropertyWitness{a, b, std::nullopt, c, Comparison::kStrictlyBetter};
  }
}

}  // namespace

OrderingProperties check_ordering_properties(const Ordering& ordering,
                                             const VarSet& universe,
                                             std::uint64_t budget, std::uint64_t seed) {
  if (budget < 1) throw AbductionError("property check budget must be at least 1");
  const std::vector<Var>& u = universe.vars();
  const std::size_t n = u.size();
  OrderingProperties out;

  // Exhaustive sizes: n * 4^(n-1) meaningful cases, 3^n - 2^n irredundant.
  long double meaningful_cases = 0, irredundant_cases = 0;
  if (n > 0 && n < 30) {
    meaningful_cases = static_cast<long double>(n);
    for (std::size_t i = 1; i < n; ++i) meaningful_cases *= 4;
    long double p3 = 1, p2 = 1;
    for (std::size_t i = 0; i < n; ++i) {
      p3 *= 3;
      p2 *= 2;
    }
    irredundant_cases = p3 - p2;
  }
  out.exhaustive = n < 30 && meaningful_cases <= budget && irredundant_cases <= budget;

  if (out.exhaustive) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::size_t hi = 0; hi < n; ++hi) {
      const std::uint64_t rest = full & ~(std::uint64_t{1} << hi);
      // Enumerate submasks a, b of rest.
      for (std::uint64_t am = rest;; am = (am - 1) & rest) {
        for (std::uint64_t bm = rest;; bm = (bm - 1) & rest) {
          meaningful_case(ordering, subset_from_mask(u, am), subset_from_mask(u, bm),
                          u[hi], out.meaningful);
          if (bm == 0) break;
        }
        if (am == 0) break;
      }
    }
    for (std::uint64_t bm = full;; bm = (bm - 1) & full) {
      for (std::uint64_t am = bm;; am = (am - 1) & bm) {
        if (am != bm) {
          irredundant_case(ordering, subset_from_mask(u, am), subset_from_mask(u, bm),
                           out.irredundant);
        }
        if (am == 0) break;
      }
      if (bm == 0) break;
    }
    return out;
  }

  Rng rng(seed);
  auto random_subset = [&](std::uint64_t allowed) {
    std::vector<Var> out_vars;
    for (std::size_t i = 0; i < n; ++i) {
      if ((allowed >> i & 1) && rng.coin()) out_vars.push_back(u[i]);
    }
    return VarSet(std::move(out_vars));
  };
  if (n == 0) return out;
  const std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t k = 0; k < budget; ++k) {
    const std::size_t hi = rng.below(n);
    const std::uint64_t rest = full & ~(std::uint64_t{1} << hi);
    meaningful_case(ordering, random_subset(rest), random_subset(rest), u[hi],
                    out.meaningful);
    // Proper subset: drop at least one element of b.
    VarSet b = random_subset(full);
    if (b.empty()) b.insert(u[rng.below(n)]);
    std::vector<Var> kept;
    const Var dropped = b.vars()[rng.below(b.size())];
    for (Var v : b) {
      if (v != dropped && rng.coin()) kept.push_back(v);
    }
    irredundant_case(ordering, VarSet(std::move(kept)), b, out.irredundant);
  }
  return out;
}

std::string describe(const PropertyWitness& w) {
  std::ostringstream os;
  os << "A=" << to_string(w.first) << " B=" << to_string(w.second);
  if (w.added) os << " h=" << *w.added;
  os << " observed " << to_string(w.observed) << ", expected " << to_string(w.expected);
  return os.str();
}

}  // namespace abduction
