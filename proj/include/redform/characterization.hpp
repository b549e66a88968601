#pragma once

#include <vector>

#include "redform/core.hpp"

namespace redform {

struct AssumptionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WrongAlternativeCount : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CutEvaluation {
  CutTriple triple;
  Rational lhs{0}, rhs{0};
  bool violated = false;
};

// Ex ante belief consistency per alternative in K* plus componentwise
// nonnegativity over K*. Empty result means the conic condition holds.
// Balance violations are listed before negativity violations, each in
// declared order.
std::vector<Violation> check_conic(const Instance& inst, const InterimRule& q);

// lhs = sum_{k in G} [sum_{E1} Q_1^k l1 - sum_{E2} Q_2^k l2],
// rhs = lambda(E1 x E2^c).
CutEvaluation eval_cut(const Instance& inst, const InterimRule& q,
                       const CutTriple& triple);

enum class CutMode { First, All };

// Enumerates all (G, E1, E2) triples in counting order of the index masks
// (declared element order, first element = lowest bit) and returns the
// violated ones. With prune set, triples with G or E1 empty are skipped;
// that is only sound once nonnegativity has been verified.
std::vector<CutEvaluation> check_cuts(const Instance& inst,
                                      const InterimRule& q,
                                      CutMode mode = CutMode::First,
                                      bool prune = true);

enum class CheckMode { Full, NecessaryOnly };

// Theorem-level decision. Full mode requires min(|T1|,|T2|) = 2 and returns
// either a witness ex post rule or the first violated condition (conic
// before cuts, cuts in enumeration order). When |T2| = 2 < |T1| the player
// roles are swapped internally and certificates mapped back. NecessaryOnly
// reports only whether the inequalities hold, for any type-space sizes.
Verdict check_implementable(const Instance& inst, const InterimRule& q,
                            CheckMode mode = CheckMode::Full);

// Two-alternative specialization: nu_1(E1) <= nu_2(E2) + lambda(E1 x E2^c)
// for all E1, E2, plus the conic conditions. Requires |K| = 2.
bool check_strassen(const Instance& inst, const InterimRule& q);

// Player-symmetric inequality family with rhs lambda(E1 x E2); equivalent
// to balance plus the cut inequalities.
bool check_symmetric(const Instance& inst, const InterimRule& q);

}  // namespace redform
