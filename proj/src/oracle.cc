#include "abduction/oracle.h"

#include <algorithm>

namespace abduction {

OracleReport brute_solutions(const AbductionInstance& instance, std::uint64_t cap) {
  const VarSet hyp_set = instance.hypotheses();
  const std::vector<Var>& hyps = hyp_set.vars();
  const int n = instance.num_vars;
  const std::size_t k = hyps.size();
  if (n > kOracleMaxVars) {
    throw CapExceeded("oracle handles at most " + std::to_string(kOracleMaxVars) +
                      " variables, instance has " + std::to_string(n));
  }
  if (k >= 63 || (std::uint64_t{1} << k) > cap) {
    throw CapExceeded("oracle cap exceeded: 2^" + std::to_string(k) + " subsets of H");
  }

  struct Bits {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
  };
  std::vector<Bits> clauses;
  for (const Clause& c : instance.theory.clauses()) {
    Bits b;
    for (Lit l : c) {
      const std::uint32_t bit = std::uint32_t{1} << (l.var() - 1);
      (l.is_negative() ? b.neg : b.pos) |= bit;
    }
    clauses.push_back(b);
  }
  std::uint32_t m_bits = 0;
  for (Var m : instance.manifestations) m_bits |= std::uint32_t{1} << (m - 1);

  const std::size_t subsets = std::size_t{1} << k;
  std::vector<char> consistent(subsets, 0);
  std::vector<char> countermodel(subsets, 0);
  const std::uint64_t assignments = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < assignments; ++a) {
    const auto mask = static_cast<std::uint32_t>(a);
    bool model = true;
    for (const Bits& b : clauses) {
      if (!((mask & b.pos) || (~mask & b.neg))) {
        model = false;
        break;
      }
    }
    if (!model) continue;
    std::size_t proj = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> (hyps[i] - 1) & 1) proj |= std::size_t{1} << i;
    }
    consistent[proj] = 1;
    if ((mask & m_bits) != m_bits) countermodel[proj] = 1;
  }
  // A set is consistent (has a counter-model) when some model's projection
  // contains it.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t s = 0; s < subsets; ++s) {
      if (!(s >> i & 1)) {
        consistent[s] |= consistent[s | (std::size_t{1} << i)];
        countermodel[s] |= countermodel[s | (std::size_t{1} << i)];
      }
    }
  }

  OracleReport report;
  report.assignments = assignments;
  report.subsets = subsets;
  for (std::size_t s = 0; s < subsets; ++s) {
    if (!consistent[s] || countermodel[s]) continue;
    std::vector<Var> members;
    for (std::size_t i = 0; i < k; ++i) {
      if (s >> i & 1) members.push_back(hyps[i]);
    }
    report.solutions.emplace_back(std::move(members));
  }
  std::sort(report.solutions.begin(), report.solutions.end());
  report.minimal = report.solutions;
  return report;
}

std::vector<Explanation> minimal_elements(const Ordering& ordering,
                                          const std::vector<Explanation>& candidates) {
  std::vector<Explanation> out;
  for (const Explanation& s : candidates) {
    bool dominated = false;
    for (const Explanation& t : candidates) {
      if (ordering.compare(t, s) == Comparison::kStrictlyBetter) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OracleReport brute_minimal(const AbductionInstance& instance, const Ordering& ordering,
                           std::uint64_t cap) {
  OracleReport report = brute_solutions(instance, cap);
  report.minimal = minimal_elements(ordering, report.solutions);
  return report;
}

QueryResult oracle_exists(const OracleReport& report) {
  QueryResult r;
  r.answer = !report.solutions.empty();
  if (r.answer) r.witness = report.solutions.front();
  return r;
}

QueryResult oracle_verify(const OracleReport& report, const Explanation& candidate) {
  QueryResult r;
  r.answer = std::binary_search(report.minimal.begin(), report.minimal.end(), candidate);
  return r;
}

QueryResult oracle_query(const OracleReport& report, QueryKind kind, Var h) {
  QueryResult r;
  if (kind == QueryKind::kRelevant) {
    for (const Explanation& s : report.minimal) {
      if (s.contains(h)) {
        r.answer = true;
        r.witness = s;
        return r;
      }
    }
    return r;
  }
  bool necessary = !report.minimal.empty();
  for (const Explanation& s : report.minimal) {
    if (!s.contains(h)) {
      necessary = false;
      r.witness = s;
      break;
    }
  }
  r.answer = kind == QueryKind::kNecessary ? necessary : !necessary;
  return r;
}

// ---------------------------------------------------------------- generator

AbductionInstance random_instance(Rng& rng, const RandomShape& shape) {
  const int nh = rng.between(shape.min_hypotheses, shape.max_hypotheses);
  const int nx = rng.between(1, std::max(1, shape.max_vars - nh));
  const int n = nh + nx;

  AbductionInstance raw;
  raw.num_vars = n;
  const int m = rng.between(1, std::max(1, shape.max_classes));
  raw.classes.assign(static_cast<std::size_t>(m), VarSet{});
  for (Var h = 1; h <= nh; ++h) raw.classes[rng.below(static_cast<std::uint64_t>(m))].insert(h);

  std::vector<Clause> clauses;
  const int nc = rng.between(shape.min_clauses, shape.max_clauses);
  for (int i = 0; i < nc; ++i) {
    const int width = rng.between(1, std::min(shape.max_clause_vars, n));
    std::vector<Var> pool;
    for (Var v = 1; v <= n; ++v) pool.push_back(v);
    std::vector<Var> vars;
    for (int j = 0; j < width; ++j) {
      const auto pick = rng.below(pool.size());
      vars.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    // Polarities: definite Horn gets exactly one positive literal, Horn at
    // most one; general clauses lean towards rules (one positive).
    std::vector<Lit> lits;
    int positive_at = -1;
    switch (shape.dialect) {
      case Dialect::kDefiniteHorn:
        positive_at = static_cast<int>(rng.below(vars.size()));
        break;
      case Dialect::kHorn:
        if (rng.chance(3, 4)) positive_at = static_cast<int>(rng.below(vars.size()));
        break;
      case Dialect::kGeneral:
        positive_at = rng.chance(2, 3) ? static_cast<int>(rng.below(vars.size())) : -2;
        break;
    }
    for (std::size_t j = 0; j < vars.size(); ++j) {
      bool positive = positive_at == -2 ? rng.coin() : static_cast<int>(j) == positive_at;
      lits.push_back(positive ? Lit::positive(vars[j]) : Lit::negative(vars[j]));
    }
    clauses.emplace_back(std::move(lits));
  }
  raw.theory = Theory(std::move(clauses));

  // Manifestations from the theory's variables, preferring non-hypotheses.
  const VarSet tv = raw.theory.vars();
  std::vector<Var> preferred, others;
  for (Var v : tv) (v > nh ? preferred : others).push_back(v);
  std::vector<Var>& pool = preferred.empty() ? others : preferred;
  const int nm = rng.between(1, std::min<int>(shape.max_manifestations,
                                              static_cast<int>(pool.size())));
  std::vector<Var> ms;
  for (int j = 0; j < nm; ++j) {
    const auto pick = rng.below(pool.size());
    ms.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  raw.manifestations = VarSet(std::move(ms));

  if (shape.weights) {
    for (Var h = 1; h <= nh; ++h) raw.weights[h] = rng.between(1, shape.max_weight);
  }
  return validate_instance(std::move(raw));
}

}  // namespace abduction
