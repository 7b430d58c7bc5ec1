#include "abduction/solver.h"

#include <algorithm>
#include <limits>

namespace abduction {

std::string to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::kRelevant: return "relevant";
    case QueryKind::kNecessary: return "necessary";
    case QueryKind::kDispensable: return "dispensable";
  }
  return "?";
}

namespace {

using Cost = std::vector<std::int64_t>;

std::vector<Lit> positive_lits(const VarSet& vars) {
  std::vector<Lit> out;
  out.reserve(vars.size());
  for (Var v : vars) out.push_back(Lit::positive(v));
  return out;
}

// Branch and bound for a cheapest set of elements that hits every positive
// clause and contains no negative clause completely. Costs are vectors
// compared lexicographically and are nonnegative.
class HittingSetSearch {
 public:
  HittingSetSearch(const std::vector<Cost>& element_cost,
                   const std::vector<std::vector<int>>& positive,
                   std::vector<const std::vector<int>*> negative, std::vector<signed char> fixed,
                   std::optional<Cost> limit, bool inclusive)
      : cost_(element_cost),
        positive_(positive),
        negative_(std::move(negative)),
        state_(std::move(fixed)),
        limit_(std::move(limit)),
        inclusive_(inclusive) {
    const std::size_t k = cost_.size();
    width_ = k == 0 ? 1 : cost_[0].size();
    current_.assign(width_, 0);
    pos_of_.resize(k);
    neg_of_.resize(k);
    for (std::size_t j = 0; j < positive_.size(); ++j) {
      for (int e : positive_[j]) pos_of_[e].push_back(static_cast<int>(j));
    }
    for (std::size_t j = 0; j < negative_.size(); ++j) {
      for (int e : *negative_[j]) neg_of_[e].push_back(static_cast<int>(j));
    }
    hits_.assign(positive_.size(), 0);
    inside_.assign(negative_.size(), 0);
    mark_.assign(k, 0);
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> preset;
    for (std::size_t e = 0; e < state_.size(); ++e) {
      if (state_[e] == 1) preset.push_back(static_cast<int>(e));
    }
    bool conflict = false;
    for (int e : preset) {
      state_[e] = -1;
      conflict = set_in(e) || conflict;
    }
    if (!conflict) search();
    return best_;
  }

 private:
  bool within(const Cost& c) const {
    if (!limit_) return true;
    return inclusive_ ? c <= *limit_ : c < *limit_;
  }

  // Returns true when a negative clause became fully contained.
  bool set_in(int e) {
    state_[e] = 1;
    for (std::size_t i = 0; i < width_; ++i) current_[i] += cost_[e][i];
    for (int j : pos_of_[e]) ++hits_[j];
    bool conflict = false;
    for (int j : neg_of_[e]) {
      if (++inside_[j] == static_cast<int>(negative_[j]->size())) conflict = true;
    }
    return conflict;
  }

  void unset_in(int e) {
    state_[e] = -1;
    for (std::size_t i = 0; i < width_; ++i) current_[i] -= cost_[e][i];
    for (int j : pos_of_[e]) --hits_[j];
    for (int j : neg_of_[e]) --inside_[j];
  }

  // Lower bound: current cost plus the cheapest element of each clause in
  // a greedy packing of unhit clauses with disjoint free elements.
  Cost lower_bound() {
    ++stamp_;
    Cost lb = current_;
    for (std::size_t j = 0; j < positive_.size(); ++j) {
      if (hits_[j] > 0) continue;
      bool disjoint = true;
      const Cost* cheapest = nullptr;
      for (int e : positive_[j]) {
        if (state_[e] != -1) continue;
        if (mark_[e] == stamp_) {
          disjoint = false;
          break;
        }
        if (!cheapest || cost_[e] < *cheapest) cheapest = &cost_[e];
      }
      if (!disjoint || !cheapest) continue;
      for (int e : positive_[j]) {
        if (state_[e] == -1) mark_[e] = stamp_;
      }
      for (std::size_t i = 0; i < width_; ++i) lb[i] += (*cheapest)[i];
    }
    return lb;
  }

  void search() {
    int chosen = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < positive_.size(); ++j) {
      if (hits_[j] > 0) continue;
      std::size_t available = 0;
      for (int e : positive_[j]) available += state_[e] == -1;
      if (available == 0) return;
      if (available < fewest) {
        fewest = available;
        chosen = static_cast<int>(j);
      }
    }
    if (chosen < 0) {
      if (within(current_)) {
        std::vector<int> picked;
        for (std::size_t e = 0; e < state_.size(); ++e) {
          if (state_[e] == 1) picked.push_back(static_cast<int>(e));
        }
        best_ = std::move(picked);
        limit_ = current_;
        inclusive_ = false;
      }
      return;
    }
    if (!within(lower_bound())) return;

    std::vector<int> options;
    for (int e : positive_[chosen]) {
      if (state_[e] == -1) options.push_back(e);
    }
    std::stable_sort(options.begin(), options.end(),
                     [&](int a, int b) { return cost_[a] < cost_[b]; });
    std::vector<int> closed;
    for (int e : options) {
      if (!set_in(e)) search();
      unset_in(e);
      state_[e] = 0;
      closed.push_back(e);
    }
    for (int e : closed) state_[e] = -1;
  }

  const std::vector<Cost>& cost_;
  const std::vector<std::vector<int>>& positive_;
  std::vector<const std::vector<int>*> negative_;
  std::vector<signed char> state_;  // -1 open, 0 out, 1 in
  std::optional<Cost> limit_;
  bool inclusive_;
  std::size_t width_ = 1;
  Cost current_;
  std::vector<std::vector<int>> pos_of_;
  std::vector<std::vector<int>> neg_of_;
  std::vector<int> hits_;
  std::vector<int> inside_;
  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
  std::optional<std::vector<int>> best_;
};

Ordering cardinality() { return Ordering(OrderingKind::kCardPref); }

}  // namespace

// ---------------------------------------------------------------- setup

AbductionSolver::AbductionSolver(AbductionInstance instance, Limits limits)
    : instance_(std::move(instance)), limits_(limits) {
  preprocess();
}

AbductionSolver::~AbductionSolver() = default;

void AbductionSolver::preprocess() {
  hypotheses_ = instance_.hypotheses();
  const Theory& theory = instance_.theory;
  horn_ = theory.flags().is_definite_horn;
  engine_ = std::make_unique<SatEngine>(theory, instance_.num_vars);
  if (horn_) chainer_ = std::make_unique<ForwardChainer>(theory, instance_.num_vars);
  for (Var m : instance_.manifestations) not_m_.push_back(Lit::negative(m));

  // A manifestation hypothesis that no clause can derive must be assumed.
  std::vector<char> derivable(static_cast<std::size_t>(instance_.num_vars) + 1, 0);
  for (const Clause& c : theory.clauses()) {
    if (c.is_tautology()) continue;
    for (Lit l : c) {
      if (l.is_positive()) derivable[l.var()] = 1;
    }
  }
  std::vector<Var> forced;
  for (Var m : instance_.manifestations) {
    if (hypotheses_.contains(m) && !derivable[m]) forced.push_back(m);
  }
  forced_ = VarSet(std::move(forced));

  std::vector<Var> excluded;
  if (!horn_) {
    auto implied = engine_->implied_literals(positive_lits(forced_));
    if (!implied || !consistent(forced_)) {
      no_solution_ = true;
    } else {
      for (Lit l : *implied) {
        if (l.is_negative() && hypotheses_.contains(l.var())) excluded.push_back(l.var());
      }
    }
  }
  excluded_ = VarSet(std::move(excluded));

  local_.assign(static_cast<std::size_t>(instance_.num_vars) + 1, -1);
  for (Var h : hypotheses_) {
    if (forced_.contains(h) || excluded_.contains(h)) continue;
    local_[h] = static_cast<int>(free_.size());
    free_.push_back(h);
  }
}

SolverStats AbductionSolver::stats() const {
  SolverStats s;
  s.engine_calls = engine_->calls() + (chainer_ ? chainer_->calls() : 0);
  s.subsets = subsets_;
  return s;
}

void AbductionSolver::count_subset() {
  ++subsets_;
  if (subsets_ - query_subsets_start_ > limits_.max_subsets) {
    throw CapExceeded("more than " + std::to_string(limits_.max_subsets) +
                      " candidate subsets examined");
  }
}

namespace {

// Per-query accounting: resets the subset budget and reports the deltas.
class QueryScope {
 public:
  QueryScope(const AbductionSolver& solver, std::uint64_t& budget_start, std::uint64_t subsets)
      : solver_(solver), start_(solver.stats()) {
    budget_start = subsets;
  }
  SolverStats delta() const {
    SolverStats now = solver_.stats();
    return {now.engine_calls - start_.engine_calls, now.subsets - start_.subsets};
  }

 private:
  const AbductionSolver& solver_;
  SolverStats start_;
};

}  // namespace

// ---------------------------------------------------------------- membership

bool AbductionSolver::consistent(const VarSet& s) {
  if (horn_) return true;
  return engine_->solve(positive_lits(s)).has_value();
}

std::optional<VarSet> AbductionSolver::counter_model_hyps(const VarSet& s) {
  if (instance_.manifestations.empty()) return std::nullopt;
  if (horn_) {
    VarSet least = chainer_->closure(s);
    if (instance_.manifestations.is_subset_of(least)) return std::nullopt;
    return set_intersection(least, hypotheses_);
  }
  auto model = engine_->solve(positive_lits(s), &not_m_);
  if (!model) return std::nullopt;
  return set_intersection(model->true_vars(), hypotheses_);
}

bool AbductionSolver::is_member(const Explanation& s) {
  count_subset();
  return consistent(s) && !counter_model_hyps(s).has_value();
}

AbductionSolver::Status AbductionSolver::check_and_learn(const VarSet& local_set) {
  count_subset();
  auto full_of = [&](const std::vector<int>& locals) {
    std::vector<Var> vars(forced_.begin(), forced_.end());
    for (int e : locals) vars.push_back(free_[e]);
    return VarSet(std::move(vars));
  };
  std::vector<int> picked(local_set.begin(), local_set.end());
  const VarSet full = full_of(picked);

  if (!consistent(full)) {
    std::vector<int> core = picked;
    for (int e : picked) {
      std::vector<int> trial;
      for (int x : core) {
        if (x != e) trial.push_back(x);
      }
      if (!consistent(full_of(trial))) core = std::move(trial);
    }
    negative_.push_back(std::move(core));
    return Status::kInconsistent;
  }

  auto counter = counter_model_hyps(full);
  if (!counter) return Status::kSolution;

  std::vector<char> grown(free_.size(), 0);
  auto absorb = [&](const VarSet& hyps) {
    for (Var v : hyps) {
      if (local_[v] >= 0) grown[local_[v]] = 1;
    }
  };
  absorb(*counter);
  for (std::size_t e = 0; e < free_.size(); ++e) {
    if (grown[e]) continue;
    std::vector<int> trial;
    for (std::size_t x = 0; x < free_.size(); ++x) {
      if (grown[x] || x == e) trial.push_back(static_cast<int>(x));
    }
    if (auto more = counter_model_hyps(full_of(trial))) absorb(*more);
  }
  std::vector<int> clause;
  for (std::size_t e = 0; e < free_.size(); ++e) {
    if (!grown[e]) clause.push_back(static_cast<int>(e));
  }
  if (clause.empty()) no_solution_ = true;
  positive_.push_back(std::move(clause));
  return Status::kNotEntailed;
}

// ---------------------------------------------------------------- search

std::optional<Explanation> AbductionSolver::optimum(const Region& region,
                                                    const Ordering& ordering,
                                                    const std::optional<Cost>& limit,
                                                    bool inclusive) {
  if (no_solution_) return std::nullopt;
  const std::size_t k = free_.size();
  std::vector<signed char> fixed(k, -1);
  for (Var v : region.include) {
    if (forced_.contains(v)) continue;
    if (v < 0 || v > instance_.num_vars || local_[v] < 0) return std::nullopt;
    fixed[local_[v]] = 1;
  }
  for (Var v : region.exclude) {
    if (forced_.contains(v)) return std::nullopt;
    if (v < 1 || v > instance_.num_vars || local_[v] < 0) continue;
    if (fixed[local_[v]] == 1) return std::nullopt;
    fixed[local_[v]] = 0;
  }
  std::vector<std::vector<int>> blocks;
  for (const VarSet& q : region.blocks) {
    std::vector<int> block;
    bool satisfiable_block = true;
    for (Var v : q) {
      if (forced_.contains(v)) continue;
      if (v < 1 || v > instance_.num_vars || local_[v] < 0) {
        satisfiable_block = false;
        break;
      }
      block.push_back(local_[v]);
    }
    if (!satisfiable_block) continue;
    if (block.empty()) return std::nullopt;
    blocks.push_back(std::move(block));
  }

  static const Ordering card = cardinality();
  const Ordering& m = ordering.is_cost_based() ? ordering : card;
  std::vector<Cost> element_cost;
  element_cost.reserve(k);
  for (Var v : free_) element_cost.push_back(m.element_cost(v));
  std::optional<Cost> local_limit;
  if (limit) {
    Cost offset = m.cost(forced_);
    local_limit = *limit;
    if (local_limit->size() != offset.size()) {
      throw AbductionError("cost bound has the wrong width");
    }
    for (std::size_t i = 0; i < offset.size(); ++i) (*local_limit)[i] -= offset[i];
  }

  while (true) {
    std::vector<const std::vector<int>*> negative;
    for (const auto& q : negative_) negative.push_back(&q);
    for (const auto& q : blocks) negative.push_back(&q);
    HittingSetSearch master(element_cost, positive_, std::move(negative), fixed, local_limit,
                            inclusive);
    auto picked = master.run();
    if (!picked) return std::nullopt;
    VarSet locals(std::vector<Var>(picked->begin(), picked->end()));
    if (check_and_learn(locals) == Status::kSolution) {
      std::vector<Var> vars(forced_.begin(), forced_.end());
      for (int e : *picked) vars.push_back(free_[e]);
      return VarSet(std::move(vars));
    }
    if (no_solution_) return std::nullopt;
  }
}

Explanation AbductionSolver::shrink(Explanation s, const VarSet& keep) {
  const std::vector<Var> order = s.vars();
  for (Var v : order) {
    if (keep.contains(v) || forced_.contains(v)) continue;
    Explanation trial = s.without(v);
    if (is_member(trial)) s = std::move(trial);
  }
  return s;
}

Cost AbductionSolver::optimum_cost(const Ordering& ordering, bool* found) {
  std::vector<Cost> key;
  for (Var h : hypotheses_) key.push_back(ordering.element_cost(h));
  auto it = optimum_cache_.find(key);
  if (it == optimum_cache_.end()) {
    auto best = optimum(Region{}, ordering);
    std::optional<Cost> c;
    if (best) c = ordering.cost(*best);
    it = optimum_cache_.emplace(std::move(key), std::move(c)).first;
  }
  *found = it->second.has_value();
  return it->second.value_or(Cost{});
}

std::vector<Explanation> AbductionSolver::minimal_subset_explanations(bool* complete) {
  if (!subset_minimal_cache_) {
    std::vector<Explanation> found;
    Region region;
    bool done = true;
    while (true) {
      if (found.size() >= limits_.max_explanations) {
        done = false;
        break;
      }
      auto s = optimum(region, cardinality());
      if (!s) break;
      Explanation minimal = shrink(std::move(*s));
      region.blocks.push_back(minimal);
      found.push_back(std::move(minimal));
    }
    std::sort(found.begin(), found.end());
    subset_minimal_cache_ = std::move(found);
    subset_minimal_complete_ = done;
  }
  *complete = subset_minimal_complete_;
  return *subset_minimal_cache_;
}

std::vector<Explanation> AbductionSolver::filter_minimal(
    const Ordering& ordering, const std::vector<Explanation>& candidates) const {
  std::vector<Explanation> out;
  for (const Explanation& s : candidates) {
    bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const Explanation& t) {
      return ordering.strictly_better(t, s);
    });
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- queries

QueryResult AbductionSolver::exists() {
  QueryScope scope(*this, query_subsets_start_, subsets_);
  QueryResult r;
  if (!no_solution_) {
    std::vector<Var> all(forced_.begin(), forced_.end());
    all.insert(all.end(), free_.begin(), free_.end());
    const VarSet everything(std::move(all));
    if (is_member(everything)) {
      r.answer = true;
      r.witness = shrink(everything);
    } else if (!consistent(everything)) {
      if (auto s = optimum(Region{}, cardinality())) {
        r.answer = true;
        r.witness = shrink(std::move(*s));
      }
    }
  }
  r.stats = scope.delta();
  return r;
}

QueryResult AbductionSolver::verify(const Ordering& ordering, const Explanation& candidate) {
  if (!candidate.is_subset_of(hypotheses_)) {
    throw AbductionError("candidate " + to_string(candidate, &instance_) +
                         " is not a subset of the hypotheses");
  }
  QueryScope scope(*this, query_subsets_start_, subsets_);
  QueryResult r;
  if (!is_member(candidate)) {
    r.stats = scope.delta();
    return r;
  }
  r.answer = true;
  switch (ordering.kind()) {
    case OrderingKind::kUniversal:
      break;
    case OrderingKind::kSubsetPref:
      for (Var h : candidate) {
        Explanation smaller = candidate.without(h);
        if (is_member(smaller)) {
          r.answer = false;
          r.witness = shrink(std::move(smaller));
          break;
        }
      }
      break;
    case OrderingKind::kCardPref:
    case OrderingKind::kCardPrio:
    case OrderingKind::kPenalty:
      if (auto better = optimum(Region{}, ordering, ordering.cost(candidate), false)) {
        r.answer = false;
        r.witness = std::move(better);
      }
      break;
    case OrderingKind::kSubsetPrio: {
      const auto& classes = ordering.classes();
      for (std::size_t k = 0; k < classes.size() && r.answer; ++k) {
        const VarSet mine = set_intersection(candidate, classes[k]);
        if (mine.empty()) continue;
        Region region;
        for (std::size_t j = k + 1; j < classes.size(); ++j) {
          const VarSet keep = set_intersection(candidate, classes[j]);
          region.include = set_union(region.include, keep);
          region.exclude = set_union(region.exclude, set_difference(classes[j], keep));
        }
        region.exclude = set_union(region.exclude, set_difference(classes[k], mine));
        region.blocks.push_back(mine);
        if (auto better = optimum(region, cardinality())) {
          r.answer = false;
          r.witness = shrink(std::move(*better));
        }
      }
      break;
    }
  }
  r.stats = scope.delta();
  return r;
}

QueryResult AbductionSolver::query_from_list(const std::vector<Explanation>& minimal,
                                             QueryKind kind, Var h) {
  QueryResult r;
  if (kind == QueryKind::kRelevant) {
    for (const Explanation& s : minimal) {
      if (s.contains(h)) {
        r.answer = true;
        r.witness = s;
        break;
      }
    }
    return r;
  }
  r.answer = !minimal.empty();
  for (const Explanation& s : minimal) {
    if (!s.contains(h)) {
      r.answer = false;
      r.witness = s;
      break;
    }
  }
  return r;
}

QueryResult AbductionSolver::query_subset_pref(QueryKind kind, Var h) {
  QueryResult r;
  if (kind == QueryKind::kRelevant) {
    Region region;
    region.include = VarSet{h};
    while (auto s = optimum(region, cardinality())) {
      Explanation minimal = shrink(std::move(*s), VarSet{h});
      if (!is_member(minimal.without(h))) {
        r.answer = true;
        r.witness = std::move(minimal);
        break;
      }
      region.blocks.push_back(std::move(minimal));
    }
    return r;
  }
  if (!exists().answer) return r;
  Region region;
  region.exclude = VarSet{h};
  if (auto s = optimum(region, cardinality())) {
    r.witness = shrink(std::move(*s));
  } else {
    r.answer = true;
  }
  return r;
}

QueryResult AbductionSolver::query_cost(const Ordering& ordering, QueryKind kind, Var h) {
  QueryResult r;
  bool found = false;
  const Cost best = optimum_cost(ordering, &found);
  if (!found) return r;
  Region region;
  if (kind == QueryKind::kRelevant) {
    region.include = VarSet{h};
    if (auto s = optimum(region, ordering, best, true)) {
      r.answer = true;
      r.witness = std::move(s);
    }
    return r;
  }
  region.exclude = VarSet{h};
  if (auto s = optimum(region, ordering, best, true)) {
    r.witness = std::move(s);
  } else {
    r.answer = true;
  }
  return r;
}

QueryResult AbductionSolver::query(const Ordering& ordering, QueryKind kind, Var h) {
  if (!hypotheses_.contains(h)) {
    throw AbductionError("variable " + instance_.label(h) + " is not a hypothesis");
  }
  QueryScope scope(*this, query_subsets_start_, subsets_);
  const QueryKind asked = kind;
  if (kind == QueryKind::kDispensable) kind = QueryKind::kNecessary;

  QueryResult r;
  switch (ordering.kind()) {
    case OrderingKind::kUniversal: {
      Region region;
      if (kind == QueryKind::kRelevant) {
        region.include = VarSet{h};
        if (auto s = optimum(region, cardinality())) {
          r.answer = true;
          r.witness = std::move(s);
        }
      } else {
        region.exclude = VarSet{h};
        if (exists().answer) {
          if (auto s = optimum(region, cardinality())) {
            r.witness = std::move(s);
          } else {
            r.answer = true;
          }
        }
      }
      break;
    }
    case OrderingKind::kSubsetPref:
      r = query_subset_pref(kind, h);
      break;
    case OrderingKind::kCardPref:
    case OrderingKind::kCardPrio:
    case OrderingKind::kPenalty:
      r = query_cost(ordering, kind, h);
      break;
    case OrderingKind::kSubsetPrio: {
      bool complete = true;
      auto candidates = minimal_subset_explanations(&complete);
      if (!complete) {
        throw CapExceeded("more than " + std::to_string(limits_.max_explanations) +
                          " subset-minimal explanations");
      }
      r = query_from_list(filter_minimal(ordering, candidates), kind, h);
      break;
    }
  }
  if (asked == QueryKind::kDispensable) r.answer = !r.answer;
  r.stats = scope.delta();
  return r;
}

Enumeration AbductionSolver::enumerate(const Ordering& ordering) {
  QueryScope scope(*this, query_subsets_start_, subsets_);
  Enumeration out;
  try {
    switch (ordering.kind()) {
      case OrderingKind::kUniversal: {
        const std::size_t k = free_.size();
        if (no_solution_) break;
        if (k >= 63) {
          out.complete = false;
          break;
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
          std::vector<Var> vars(forced_.begin(), forced_.end());
          for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) vars.push_back(free_[i]);
          }
          VarSet s(std::move(vars));
          if (!is_member(s)) continue;
          if (out.explanations.size() >= limits_.max_explanations) {
            out.complete = false;
            break;
          }
          out.explanations.push_back(std::move(s));
        }
        break;
      }
      case OrderingKind::kSubsetPref:
        out.explanations = minimal_subset_explanations(&out.complete);
        break;
      case OrderingKind::kSubsetPrio: {
        auto candidates = minimal_subset_explanations(&out.complete);
        out.explanations = filter_minimal(ordering, candidates);
        break;
      }
      case OrderingKind::kCardPref:
      case OrderingKind::kCardPrio:
      case OrderingKind::kPenalty: {
        bool found = false;
        const Cost best = optimum_cost(ordering, &found);
        if (!found) break;
        Region region;
        while (true) {
          if (out.explanations.size() >= limits_.max_explanations) {
            out.complete = false;
            break;
          }
          auto s = optimum(region, ordering, best, true);
          if (!s) break;
          region.blocks.push_back(*s);
          out.explanations.push_back(std::move(*s));
        }
        break;
      }
    }
  } catch (const CapExceeded&) {
    out.complete = false;
  }
  std::sort(out.explanations.begin(), out.explanations.end());
  out.stats = scope.delta();
  return out;
}

// ---------------------------------------------------------------- free functions

bool is_solution(const AbductionInstance& instance, const Explanation& candidate) {
  return is_consistent(instance.theory, candidate).has_value() &&
         entails(instance.theory, candidate, instance.manifestations);
}

QueryResult exists_explanation(const AbductionInstance& instance, Limits limits) {
  return AbductionSolver(instance, limits).exists();
}

QueryResult verify_minimal(const AbductionInstance& instance, const Ordering& ordering,
                           const Explanation& candidate, Limits limits) {
  return AbductionSolver(instance, limits).verify(ordering, candidate);
}

QueryResult query_variable(const AbductionInstance& instance, const Ordering& ordering,
                           QueryKind kind, Var h, Limits limits) {
  return AbductionSolver(instance, limits).query(ordering, kind, h);
}

Enumeration enumerate_minimal(const AbductionInstance& instance, const Ordering& ordering,
                              Limits limits) {
  return AbductionSolver(instance, limits).enumerate(ordering);
}

QueryResult dh_fast_path(const AbductionInstance& instance, FastQuery query, Var h) {
  if (!instance.theory.flags().is_definite_horn) {
    throw AbductionError("the fast path needs a definite Horn theory");
  }
  const VarSet hyps = instance.hypotheses();
  if (query == FastQuery::kSubsetNecessary && !hyps.contains(h)) {
    throw AbductionError("variable " + instance.label(h) + " is not a hypothesis");
  }
  ForwardChainer chainer(instance.theory, instance.num_vars);
  const VarSet& m = instance.manifestations;
  auto explains = [&](const VarSet& s) { return m.is_subset_of(chainer.closure(s)); };
  // Deletion in a fixed order; polynomial.
  auto minimize = [&](VarSet s) {
    for (Var v : std::vector<Var>(s.vars())) {
      VarSet trial = s.without(v);
      if (explains(trial)) s = std::move(trial);
    }
    return s;
  };

  QueryResult r;
  const bool any = explains(hyps);
  if (query == FastQuery::kExists) {
    r.answer = any;
    if (any) r.witness = minimize(hyps);
  } else if (any) {
    const VarSet rest = hyps.without(h);
    if (explains(rest)) {
      r.witness = minimize(rest);
    } else {
      r.answer = true;
    }
  }
  r.stats.engine_calls = chainer.calls();
  return r;
}

}  // namespace abduction
