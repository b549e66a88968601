#include "redform/core.hpp"

namespace redform {

std::vector<int> Instance::kstar() const {
  std::vector<int> ks;
  ks.reserve(alternatives.size());
  for (int k = 0; k < nk(); ++k)
    if (k != k0) ks.push_back(k);
  return ks;
}

int Instance::alt_index(const std::string& label) const {
  for (int k = 0; k < nk(); ++k)
    if (alternatives[k] == label) return k;
  return -1;
}

void validate_instance(const Instance& inst) {
  using Code = InstanceError::Code;
  if (inst.t1.empty() || inst.t2.empty())
    throw InstanceError(Code::EmptyTypeSpace, "empty type space");
  if (inst.lambda1.size() != inst.t1.size() ||
      inst.lambda2.size() != inst.t2.size())
    throw InstanceError(Code::PriorNotNormalized,
                        "prior not aligned with type space");
  if (inst.alternatives.empty() || inst.k0 < 0 || inst.k0 >= inst.nk())
    throw InstanceError(Code::MissingK0, "k0 not among alternatives");
  for (auto* lam : {&inst.lambda1, &inst.lambda2}) {
    Rational sum(0);
    for (const auto& p : *lam) {
      if (p <= 0)
        throw InstanceError(Code::ZeroOrNegativePrior,
                            "prior mass must be positive");
      sum += p;
    }
    if (sum != 1)
      throw InstanceError(Code::PriorNotNormalized,
                          "prior sums to " + rational_str(sum));
  }
}

Instance swap_players(const Instance& inst) {
  Instance s;
  s.t1 = inst.t2;
  s.t2 = inst.t1;
  s.lambda1 = inst.lambda2;
  s.lambda2 = inst.lambda1;
  s.alternatives = inst.alternatives;
  s.k0 = inst.k0;
  return s;
}

ExPostRule transpose(const ExPostRule& q) {
  ExPostRule t(q.nk, q.n2, q.n1);
  for (int k = 0; k < q.nk; ++k)
    for (int i1 = 0; i1 < q.n1; ++i1)
      for (int i2 = 0; i2 < q.n2; ++i2) t.at(k, i2, i1) = q.at(k, i1, i2);
  return t;
}

InterimRule swap_players(const InterimRule& q) {
  InterimRule s(q.nk, q.n2, q.n1, q.complete);
  s.q1 = q.q2;
  s.q2 = q.q1;
  return s;
}

bool check_ex_post_feasible(const ExPostRule& q) {
  for (const auto& v : q.q)
    if (v < 0) return false;
  for (int i1 = 0; i1 < q.n1; ++i1)
    for (int i2 = 0; i2 < q.n2; ++i2) {
      Rational sum(0);
      for (int k = 0; k < q.nk; ++k) sum += q.at(k, i1, i2);
      if (sum != 1) return false;
    }
  return true;
}

InterimRule reduce(const Instance& inst, const ExPostRule& q) {
  if (q.nk != inst.nk() || q.n1 != inst.n1() || q.n2 != inst.n2())
    throw InfeasibleExPost("ex post rule shape mismatch");
  if (!check_ex_post_feasible(q))
    throw InfeasibleExPost("ex post rule violates feasibility");
  InterimRule out(inst.nk(), inst.n1(), inst.n2(), true);
  for (int k = 0; k < inst.nk(); ++k) {
    for (int i1 = 0; i1 < inst.n1(); ++i1) {
      Rational sum(0);
      for (int i2 = 0; i2 < inst.n2(); ++i2)
        sum += q.at(k, i1, i2) * inst.lambda2[i2];
      out.at1(k, i1) = sum;
    }
    for (int i2 = 0; i2 < inst.n2(); ++i2) {
      Rational sum(0);
      for (int i1 = 0; i1 < inst.n1(); ++i1)
        sum += q.at(k, i1, i2) * inst.lambda1[i1];
      out.at2(k, i2) = sum;
    }
  }
  return out;
}

InterimRule complete_with_slack(const Instance& inst, const InterimRule& q) {
  InterimRule out = q;
  out.complete = true;
  for (int i1 = 0; i1 < inst.n1(); ++i1) {
    Rational rest(0);
    for (int k : inst.kstar()) rest += q.at1(k, i1);
    out.at1(inst.k0, i1) = Rational(1) - rest;
  }
  for (int i2 = 0; i2 < inst.n2(); ++i2) {
    Rational rest(0);
    for (int k : inst.kstar()) rest += q.at2(k, i2);
    out.at2(inst.k0, i2) = Rational(1) - rest;
  }
  return out;
}

}  // namespace redform
