#pragma once

#include <optional>

#include "redform/core.hpp"

namespace redform {

// Ground truth by direct feasibility of the definitional system: variables
// q^k(t) for all k in K, equality rows for the K* reduced-form equations
// and the per-profile lottery normalization, q >= 0. Phase-1 simplex with
// Bland's rule over exact rationals; works for any type-space sizes.
std::optional<ExPostRule> lp_feasible(const Instance& inst,
                                      const InterimRule& q);

struct CrossCheck {
  bool agree = false;
  bool one_directional = false;  // necessary-only comparison was used
  Verdict verdict;               // characterization side
  bool lp_ok = false;
  std::optional<ExPostRule> lp_witness;
};

// Runs the characterization and the LP side by side. With
// min(|T1|,|T2|) = 2 the verdicts must match exactly; otherwise only the
// necessity direction (LP feasible implies inequalities hold) is compared.
CrossCheck cross_check(const Instance& inst, const InterimRule& q);

}  // namespace redform
