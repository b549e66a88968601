#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "redform/rational.hpp"

namespace redform {

struct InstanceError : std::runtime_error {
  enum class Code {
    ZeroOrNegativePrior,
    PriorNotNormalized,
    MissingK0,
    EmptyTypeSpace,
  };
  Code code;
  InstanceError(Code c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
};

// Two-player implementation environment: type spaces, independent prior
// marginals, alternatives with a designated slack alternative k0. The joint
// prior is always the product of the marginals.
struct Instance {
  std::vector<std::string> t1, t2;
  std::vector<Rational> lambda1, lambda2;  // aligned with t1 / t2
  std::vector<std::string> alternatives;
  int k0 = 0;  // index into alternatives

  int n1() const { return static_cast<int>(t1.size()); }
  int n2() const { return static_cast<int>(t2.size()); }
  int nk() const { return static_cast<int>(alternatives.size()); }
  Rational joint(int i1, int i2) const { return lambda1[i1] * lambda2[i2]; }

  // Alternative indices other than k0, in declared order.
  std::vector<int> kstar() const;
  int alt_index(const std::string& label) const;  // -1 if absent
};

void validate_instance(const Instance& inst);

// Swaps player roles (types, priors). Alternatives are untouched.
Instance swap_players(const Instance& inst);

// Lottery over alternatives per type profile, q[k][t1][t2].
struct ExPostRule {
  int nk = 0, n1 = 0, n2 = 0;
  std::vector<Rational> q;  // k-major, then t1, then t2

  ExPostRule() = default;
  ExPostRule(int nk_, int n1_, int n2_)
      : nk(nk_), n1(n1_), n2(n2_),
        q(static_cast<size_t>(nk_) * n1_ * n2_, Rational(0)) {}

  Rational& at(int k, int i1, int i2) {
    return q[(static_cast<size_t>(k) * n1 + i1) * n2 + i2];
  }
  const Rational& at(int k, int i1, int i2) const {
    return q[(static_cast<size_t>(k) * n1 + i1) * n2 + i2];
  }
};

ExPostRule transpose(const ExPostRule& q);

// Per-player interim probabilities Q_i^k(t_i). Values may be stored over
// K* only (complete == false, k0 entries meaningless) or over all of K.
// The container does not enforce nonnegativity.
struct InterimRule {
  int nk = 0, n1 = 0, n2 = 0;
  bool complete = false;
  std::vector<Rational> q1;  // [k * n1 + t1]
  std::vector<Rational> q2;  // [k * n2 + t2]

  InterimRule() = default;
  InterimRule(int nk_, int n1_, int n2_, bool complete_ = false)
      : nk(nk_), n1(n1_), n2(n2_), complete(complete_),
        q1(static_cast<size_t>(nk_) * n1_, Rational(0)),
        q2(static_cast<size_t>(nk_) * n2_, Rational(0)) {}

  Rational& at1(int k, int i1) { return q1[static_cast<size_t>(k) * n1 + i1]; }
  const Rational& at1(int k, int i1) const {
    return q1[static_cast<size_t>(k) * n1 + i1];
  }
  Rational& at2(int k, int i2) { return q2[static_cast<size_t>(k) * n2 + i2]; }
  const Rational& at2(int k, int i2) const {
    return q2[static_cast<size_t>(k) * n2 + i2];
  }
};

InterimRule swap_players(const InterimRule& q);

struct InfeasibleExPost : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// q >= 0 and each profile's lottery sums to exactly 1.
bool check_ex_post_feasible(const ExPostRule& q);

// Interim expectation of q against the other player's marginal. The result
// is complete over K and normalized per type.
InterimRule reduce(const Instance& inst, const ExPostRule& q);

// Fills the k0 row from the normalization Q_i^{k0} = 1 - sum_{K*} Q_i^k.
// Total: the completed entries may be negative (caught downstream).
InterimRule complete_with_slack(const Instance& inst, const InterimRule& q);

// One inequality index (G, E1, E2). Bit j of g selects the j-th element of
// inst.kstar(); bits of e1/e2 select types in declared order.
struct CutTriple {
  std::uint32_t g = 0, e1 = 0, e2 = 0;
};

struct Violation {
  enum class Kind { Conic, Negative, Cut };
  Kind kind{};
  int alt = -1;       // Conic, Negative (alternative index)
  int player = 0;     // Negative: 1 or 2
  int type = -1;      // Negative (type index of that player)
  CutTriple triple{};  // Cut
  Rational lhs{0}, rhs{0};  // Cut: sides of Eq; Conic: the two ex ante sums;
                            // Negative: lhs holds the offending value
};

struct Verdict {
  bool implementable = false;  // in necessary-only mode: inequalities hold
  std::optional<ExPostRule> witness;
  std::optional<Violation> certificate;
};

}  // namespace redform
