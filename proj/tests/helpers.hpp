#pragma once

#include "redform/core.hpp"

namespace redform::testing {

// t1={a,b}, t2={c,d}, uniform priors, K={k0,k1}
inline Instance uniform22() {
  Instance inst;
  inst.t1 = {"a", "b"};
  inst.t2 = {"c", "d"};
  inst.lambda1 = {Rational(1, 2), Rational(1, 2)};
  inst.lambda2 = {Rational(1, 2), Rational(1, 2)};
  inst.alternatives = {"k0", "k1"};
  inst.k0 = 0;
  return inst;
}

inline Instance uniform(int n1, int n2, int nk) {
  Instance inst;
  for (int i = 0; i < n1; ++i) inst.t1.push_back("u" + std::to_string(i + 1));
  for (int i = 0; i < n2; ++i) inst.t2.push_back("v" + std::to_string(i + 1));
  inst.lambda1.assign(n1, Rational(1, n1));
  inst.lambda2.assign(n2, Rational(1, n2));
  for (int k = 0; k < nk; ++k) inst.alternatives.push_back("k" + std::to_string(k));
  inst.k0 = 0;
  return inst;
}

// K*-only interim on uniform22: Q_1^{k1} = (x1, x2), Q_2^{k1} = (y1, y2)
inline InterimRule interim22(const Rational& x1, const Rational& x2,
                             const Rational& y1, const Rational& y2) {
  InterimRule q(2, 2, 2, false);
  q.at1(1, 0) = x1;
  q.at1(1, 1) = x2;
  q.at2(1, 0) = y1;
  q.at2(1, 1) = y2;
  return q;
}

}  // namespace redform::testing
