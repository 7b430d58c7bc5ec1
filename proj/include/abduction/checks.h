// Executable forms of the correspondence properties of the reductions. Each
// check answers the input side with the brute-force oracle and the reduced
// side with the oracle where it fits, otherwise with the solver, and returns
// a transcript of every disagreement.

#ifndef ABDUCTION_CHECKS_H_
#define ABDUCTION_CHECKS_H_

#include <string>

#include "abduction/core.h"
#include "abduction/ordering.h"
#include "abduction/random.h"
#include "abduction/solver.h"

namespace abduction {

struct CheckReport {
  bool pass = true;
  bool skipped = false;
  int cases = 0;
  int failures = 0;
  std::string transcript;

  void note(const std::string& line);
  void fail(const std::string& line);
  void merge(const CheckReport& other);
};

// S in SOL(I) iff S u R in SOL(f(I)) for every S subset of H, and S u Q is
// never a solution for `samples` sampled Q subset of C u D with Q != R.
CheckReport check_indicator_reduction(const AbductionInstance& instance, Rng& rng,
                                      int samples = 100);

// SOL_<=(f(I)) = {S u R | S in SOL_<=(I)} for subset and card preference.
CheckReport check_indicator_reduction_order(const AbductionInstance& instance);

// |SOL(g_c(I))| = |SOL(I)| * 2^(c-|H|) and SOL_<= unchanged for subset and
// card preference. c = 0 means class_of(instance) + 1.
CheckReport check_padding(const AbductionInstance& instance, int c = 0);

// For every hypothesis h: h relevant (necessary) under subset-prio and
// card-prio iff the fresh t is relevant (necessary) after the first-of-first
// construction with target h.
CheckReport check_first_of_first(const AbductionInstance& instance, QueryKind kind);

// For every S subset of H: S in SOL iff S u R in SOL of the replicated
// instance, and the same for card-minimality. Skipped when the input has no
// explanation.
CheckReport check_dh_replicate(const AbductionInstance& instance);

enum class EquivReduction { kI, kIVerify, kIPrio, kIdentity };
enum class EquivProblem { kExists, kVerify, kRelevant, kNecessary };

std::string to_string(EquivReduction r);
std::string to_string(EquivProblem p);

// Answers `problem` on red(y) and on the fixed part of red(Repr(Class(y)))
// combined with the varying part of red(y) (manifestations and candidate).
// Passes when both agree on every case. verify without a candidate runs
// every candidate subset of H; relevant and necessary run every hypothesis.
// kIdentity only renumbers canonically (padding to the class), so its fixed
// part is the representative itself.
CheckReport check_representative_equivalence(EquivReduction reduction, EquivProblem problem,
                                             OrderingKind ordering,
                                             const AbductionInstance& instance);

}  // namespace abduction

#endif  // ABDUCTION_CHECKS_H_
