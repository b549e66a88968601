#include "redform/oracle.hpp"

#include <algorithm>

#include "redform/characterization.hpp"

namespace redform {

namespace {

// Dense phase-1 tableau. Rows are equalities with rhs >= 0, one artificial
// variable per row; minimize the artificial total with Bland's rule.
class Phase1Simplex {
 public:
  Phase1Simplex(std::vector<std::vector<Rational>> rows,
                std::vector<Rational> rhs, int nvars)
      : a_(std::move(rows)), b_(std::move(rhs)),
        m_(static_cast<int>(a_.size())), n_(nvars) {
    for (int i = 0; i < m_; ++i)
      if (b_[i] < 0) {
        for (auto& c : a_[i]) c = -c;
        b_[i] = -b_[i];
      }
    for (int i = 0; i < m_; ++i) {
      a_[i].resize(n_ + m_, Rational(0));
      a_[i][n_ + i] = 1;
    }
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) basis_[i] = n_ + i;
    // reduced costs with the artificial basis priced out
    red_.assign(n_ + m_, Rational(0));
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < m_; ++i) red_[j] -= a_[i][j];
    for (int i = 0; i < m_; ++i) obj_ += b_[i];
  }

  // Returns a solution of the original rows if the artificial total
  // reaches exactly zero.
  std::optional<std::vector<Rational>> solve() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n_ + m_; ++j)
        if (red_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == -1) break;
      int leave = -1;
      for (int i = 0; i < m_; ++i) {
        if (a_[i][enter] <= 0) continue;
        if (leave == -1) {
          leave = i;
          continue;
        }
        Rational cur = b_[i] / a_[i][enter];
        Rational best = b_[leave] / a_[leave][enter];
        if (cur < best || (cur == best && basis_[i] < basis_[leave]))
          leave = i;
      }
      if (leave == -1) break;  // cannot happen: phase 1 is bounded below
      pivot(leave, enter);
    }
    if (obj_ != 0) return std::nullopt;
    std::vector<Rational> x(n_, Rational(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = b_[i];
    return x;
  }

 private:
  void pivot(int leave, int enter) {
    Rational piv = a_[leave][enter];
    for (auto& c : a_[leave]) c /= piv;
    b_[leave] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == leave || a_[i][enter] == 0) continue;
      Rational f = a_[i][enter];
      for (int j = 0; j < n_ + m_; ++j) a_[i][j] -= f * a_[leave][j];
      b_[i] -= f * b_[leave];
    }
    if (red_[enter] != 0) {
      Rational f = red_[enter];
      for (int j = 0; j < n_ + m_; ++j) red_[j] -= f * a_[leave][j];
      obj_ += f * b_[leave];
    }
    basis_[leave] = enter;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_, red_;
  std::vector<int> basis_;
  Rational obj_{0};
  int m_, n_;
};

}  // namespace

std::optional<ExPostRule> lp_feasible(const Instance& inst,
                                      const InterimRule& q) {
  const int nk = inst.nk(), n1 = inst.n1(), n2 = inst.n2();
  const int nv = nk * n1 * n2;
  auto var = [&](int k, int i1, int i2) { return (k * n1 + i1) * n2 + i2; };

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (int k : inst.kstar()) {
    for (int i1 = 0; i1 < n1; ++i1) {
      std::vector<Rational> row(nv, Rational(0));
      for (int i2 = 0; i2 < n2; ++i2) row[var(k, i1, i2)] = inst.lambda2[i2];
      rows.push_back(std::move(row));
      rhs.push_back(q.at1(k, i1));
    }
    for (int i2 = 0; i2 < n2; ++i2) {
      std::vector<Rational> row(nv, Rational(0));
      for (int i1 = 0; i1 < n1; ++i1) row[var(k, i1, i2)] = inst.lambda1[i1];
      rows.push_back(std::move(row));
      rhs.push_back(q.at2(k, i2));
    }
  }
  for (int i1 = 0; i1 < n1; ++i1)
    for (int i2 = 0; i2 < n2; ++i2) {
      std::vector<Rational> row(nv, Rational(0));
      for (int k = 0; k < nk; ++k) row[var(k, i1, i2)] = 1;
      rows.push_back(std::move(row));
      rhs.push_back(Rational(1));
    }

  Phase1Simplex lp(std::move(rows), std::move(rhs), nv);
  auto x = lp.solve();
  if (!x) return std::nullopt;
  ExPostRule out(nk, n1, n2);
  for (int k = 0; k < nk; ++k)
    for (int i1 = 0; i1 < n1; ++i1)
      for (int i2 = 0; i2 < n2; ++i2) out.at(k, i1, i2) = (*x)[var(k, i1, i2)];
  return out;
}

CrossCheck cross_check(const Instance& inst, const InterimRule& q) {
  CrossCheck cc;
  const bool assumption = std::min(inst.n1(), inst.n2()) == 2;
  cc.one_directional = !assumption;
  cc.verdict = check_implementable(
      inst, q, assumption ? CheckMode::Full : CheckMode::NecessaryOnly);
  cc.lp_witness = lp_feasible(inst, q);
  cc.lp_ok = cc.lp_witness.has_value();
  if (assumption)
    cc.agree = cc.verdict.implementable == cc.lp_ok;
  else
    cc.agree = !cc.lp_ok || cc.verdict.implementable;  // necessity only
  return cc;
}

}  // namespace redform
