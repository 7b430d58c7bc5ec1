// Shared instances and a definition-level reference checker for tests.

#ifndef ABDUCTION_TESTS_TEST_INSTANCES_H_
#define ABDUCTION_TESTS_TEST_INSTANCES_H_

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <vector>

#include "abduction/core.h"

namespace abduction {

// Readable gtest failure output.
inline void PrintTo(const VarSet& s, std::ostream* os) { *os << to_string(s); }
inline void PrintTo(const Clause& c, std::ostream* os) { *os << to_string(c); }

}  // namespace abduction

namespace abduction::testing {

// Variables of the TeX running example.
inline constexpr Var kA = 1, kP = 2, kT = 3, kV = 4, kF = 5;

inline AbductionInstance tex_instance() {
  AbductionInstance raw;
  raw.num_vars = 5;
  raw.names = {"a", "p", "t", "v", "f"};
  raw.classes = {VarSet{kA, kP, kT, kV}};
  raw.manifestations = VarSet{kF};
  raw.theory = Theory({Clause::from_dimacs({-kA, kF}), Clause::from_dimacs({-kP, kF}),
                       Clause::from_dimacs({-kT, kF}), Clause::from_dimacs({-kV, kF}),
                       Clause::from_dimacs({-kP, -kT})});
  return validate_instance(raw);
}

// Classes <{p,v},{a,t}>: a and t are the least likely.
inline AbductionInstance tex_prio() {
  AbductionInstance i = tex_instance();
  i.classes = {VarSet{kP, kV}, VarSet{kA, kT}};
  return validate_instance(i);
}

inline AbductionInstance tex_penalty() {
  AbductionInstance i = tex_instance();
  i.weights = {{kA, 4}, {kP, 2}, {kT, 4}, {kV, 1}};
  return validate_instance(i);
}

// <H={h}, M={m}, T={-h v m}>.
inline AbductionInstance tiny_instance() {
  AbductionInstance raw;
  raw.num_vars = 2;
  raw.names = {"h", "m"};
  raw.classes = {VarSet{1}};
  raw.manifestations = VarSet{2};
  raw.theory = Theory({Clause::from_dimacs({-1, 2})});
  return validate_instance(raw);
}

inline bool satisfies(const Clause& c, std::uint64_t assignment) {
  for (Lit l : c) {
    const bool value = (assignment >> (l.var() - 1)) & 1;
    if (value != l.is_negative()) return true;
  }
  return false;
}

// Membership straight from the definition: some model of T makes S true,
// and every such model makes M true.
inline bool defined_solution(const AbductionInstance& inst, const VarSet& s) {
  bool consistent = false;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << inst.num_vars); ++a) {
    bool model = true;
    for (Var h : s) model = model && ((a >> (h - 1)) & 1);
    for (const Clause& c : inst.theory.clauses()) model = model && satisfies(c, a);
    if (!model) continue;
    consistent = true;
    for (Var m : inst.manifestations) {
      if (!((a >> (m - 1)) & 1)) return false;
    }
  }
  return consistent;
}

inline std::vector<VarSet> all_subsets(const VarSet& universe) {
  const auto& u = universe.vars();
  std::vector<VarSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.size()); ++mask) {
    std::vector<Var> members;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if ((mask >> i) & 1) members.push_back(u[i]);
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

inline std::vector<VarSet> defined_solutions(const AbductionInstance& inst) {
  std::vector<VarSet> out;
  for (const VarSet& s : all_subsets(inst.hypotheses())) {
    if (defined_solution(inst, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace abduction::testing

#endif  // ABDUCTION_TESTS_TEST_INSTANCES_H_
