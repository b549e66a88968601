#include "redform/characterization.hpp"

#include <algorithm>

#include "redform/flow.hpp"

namespace redform {

namespace {

Rational h1(const Instance& inst, const InterimRule& q, int k, int i1) {
  return q.at1(k, i1) * inst.lambda1[i1];
}

Rational h2(const Instance& inst, const InterimRule& q, int k, int i2) {
  return q.at2(k, i2) * inst.lambda2[i2];
}

}  // namespace

std::vector<Violation> check_conic(const Instance& inst,
                                   const InterimRule& q) {
  std::vector<Violation> out;
  for (int k : inst.kstar()) {
    Rational s1(0), s2(0);
    for (int i1 = 0; i1 < inst.n1(); ++i1) s1 += h1(inst, q, k, i1);
    for (int i2 = 0; i2 < inst.n2(); ++i2) s2 += h2(inst, q, k, i2);
    if (s1 != s2) {
      Violation v;
      v.kind = Violation::Kind::Conic;
      v.alt = k;
      v.lhs = s1;
      v.rhs = s2;
      out.push_back(v);
    }
  }
  for (int k : inst.kstar())
    for (int i1 = 0; i1 < inst.n1(); ++i1)
      if (q.at1(k, i1) < 0) {
        Violation v;
        v.kind = Violation::Kind::Negative;
        v.player = 1;
        v.alt = k;
        v.type = i1;
        v.lhs = q.at1(k, i1);
        out.push_back(v);
      }
  for (int k : inst.kstar())
    for (int i2 = 0; i2 < inst.n2(); ++i2)
      if (q.at2(k, i2) < 0) {
        Violation v;
        v.kind = Violation::Kind::Negative;
        v.player = 2;
        v.alt = k;
        v.type = i2;
        v.lhs = q.at2(k, i2);
        out.push_back(v);
      }
  return out;
}

CutEvaluation eval_cut(const Instance& inst, const InterimRule& q,
                       const CutTriple& triple) {
  const auto ks = inst.kstar();
  CutEvaluation ev;
  ev.triple = triple;
  for (size_t j = 0; j < ks.size(); ++j) {
    if (!(triple.g >> j & 1u)) continue;
    int k = ks[j];
    for (int i1 = 0; i1 < inst.n1(); ++i1)
      if (triple.e1 >> i1 & 1u) ev.lhs += h1(inst, q, k, i1);
    for (int i2 = 0; i2 < inst.n2(); ++i2)
      if (triple.e2 >> i2 & 1u) ev.lhs -= h2(inst, q, k, i2);
  }
  Rational m1(0), m2(0);
  for (int i1 = 0; i1 < inst.n1(); ++i1)
    if (triple.e1 >> i1 & 1u) m1 += inst.lambda1[i1];
  for (int i2 = 0; i2 < inst.n2(); ++i2)
    if (!(triple.e2 >> i2 & 1u)) m2 += inst.lambda2[i2];
  ev.rhs = m1 * m2;
  ev.violated = ev.lhs > ev.rhs;
  return ev;
}

std::vector<CutEvaluation> check_cuts(const Instance& inst,
                                      const InterimRule& q, CutMode mode,
                                      bool prune) {
  const std::uint32_t gmax = 1u << inst.kstar().size();
  const std::uint32_t e1max = 1u << inst.n1();
  const std::uint32_t e2max = 1u << inst.n2();
  std::vector<CutEvaluation> out;
  for (std::uint32_t g = 0; g < gmax; ++g) {
    if (prune && g == 0) continue;
    for (std::uint32_t e1 = 0; e1 < e1max; ++e1) {
      if (prune && e1 == 0) continue;
      for (std::uint32_t e2 = 0; e2 < e2max; ++e2) {
        CutEvaluation ev = eval_cut(inst, q, CutTriple{g, e1, e2});
        if (ev.violated) {
          out.push_back(ev);
          if (mode == CutMode::First) return out;
        }
      }
    }
  }
  return out;
}

namespace {

// A cut (G, E1', E2') found on the player-swapped instance equals the cut
// (G, T1 \ E2', T2 \ E1') of the original, provided balance (Eq-4) holds.
Violation map_back_cut(const Instance& orig, const InterimRule& q,
                       const CutTriple& swapped) {
  CutTriple t;
  t.g = swapped.g;
  t.e1 = ~swapped.e2 & ((1u << orig.n1()) - 1u);
  t.e2 = ~swapped.e1 & ((1u << orig.n2()) - 1u);
  CutEvaluation ev = eval_cut(orig, q, t);
  Violation v;
  v.kind = Violation::Kind::Cut;
  v.triple = t;
  v.lhs = ev.lhs;
  v.rhs = ev.rhs;
  return v;
}

}  // namespace

Verdict check_implementable(const Instance& inst, const InterimRule& q,
                            CheckMode mode) {
  const bool assumption = std::min(inst.n1(), inst.n2()) == 2;
  if (mode == CheckMode::Full && !assumption)
    throw AssumptionViolated("full mode requires min(|T1|,|T2|) = 2");

  // Conic conditions are orientation-independent; check on the original.
  auto conic = check_conic(inst, q);
  if (!conic.empty()) {
    Verdict v;
    v.certificate = conic.front();
    return v;
  }

  const bool swap = mode == CheckMode::Full && inst.n1() != 2;
  Instance work = swap ? swap_players(inst) : inst;
  InterimRule wq = swap ? swap_players(q) : q;

  auto cuts = check_cuts(work, wq, CutMode::First, true);
  if (!cuts.empty()) {
    Verdict v;
    if (swap) {
      v.certificate = map_back_cut(inst, q, cuts.front().triple);
    } else {
      Violation viol;
      viol.kind = Violation::Kind::Cut;
      viol.triple = cuts.front().triple;
      viol.lhs = cuts.front().lhs;
      viol.rhs = cuts.front().rhs;
      v.certificate = viol;
    }
    return v;
  }

  Verdict v;
  v.implementable = true;
  if (mode == CheckMode::NecessaryOnly) return v;

  // Theorem direction: conditions hold, so the transportation problem is
  // feasible and yields a witness.
  InterimRule full = complete_with_slack(work, wq);
  auto res = solve_transportation(transform(work, full));
  if (!res.flow)
    throw std::logic_error("transportation infeasible although all "
                           "inequalities hold");
  ExPostRule w = extract_ex_post(work, *res.flow);
  v.witness = swap ? transpose(w) : w;
  return v;
}

bool check_strassen(const Instance& inst, const InterimRule& q) {
  if (inst.nk() != 2)
    throw WrongAlternativeCount("Strassen check requires |K| = 2");
  if (!check_conic(inst, q).empty()) return false;
  const int k1 = inst.kstar()[0];
  const std::uint32_t e1max = 1u << inst.n1();
  const std::uint32_t e2max = 1u << inst.n2();
  for (std::uint32_t e1 = 0; e1 < e1max; ++e1)
    for (std::uint32_t e2 = 0; e2 < e2max; ++e2) {
      Rational nu1(0), nu2(0), mass1(0), mass2c(0);
      for (int i1 = 0; i1 < inst.n1(); ++i1)
        if (e1 >> i1 & 1u) {
          nu1 += h1(inst, q, k1, i1);
          mass1 += inst.lambda1[i1];
        }
      for (int i2 = 0; i2 < inst.n2(); ++i2) {
        if (e2 >> i2 & 1u)
          nu2 += h2(inst, q, k1, i2);
        else
          mass2c += inst.lambda2[i2];
      }
      if (nu1 > nu2 + mass1 * mass2c) return false;
    }
  return true;
}

bool check_symmetric(const Instance& inst, const InterimRule& q) {
  const auto ks = inst.kstar();
  const std::uint32_t gmax = 1u << ks.size();
  const std::uint32_t e1max = 1u << inst.n1();
  const std::uint32_t e2max = 1u << inst.n2();
  for (std::uint32_t g = 0; g < gmax; ++g)
    for (std::uint32_t e1 = 0; e1 < e1max; ++e1)
      for (std::uint32_t e2 = 0; e2 < e2max; ++e2) {
        Rational lhs2(0);  // twice the left-hand side
        for (size_t j = 0; j < ks.size(); ++j) {
          if (!(g >> j & 1u)) continue;
          int k = ks[j];
          for (int i1 = 0; i1 < inst.n1(); ++i1)
            lhs2 += (e1 >> i1 & 1u) ? h1(inst, q, k, i1)
                                    : -h1(inst, q, k, i1);
          for (int i2 = 0; i2 < inst.n2(); ++i2)
            lhs2 += (e2 >> i2 & 1u) ? h2(inst, q, k, i2)
                                    : -h2(inst, q, k, i2);
        }
        Rational m1(0), m2(0);
        for (int i1 = 0; i1 < inst.n1(); ++i1)
          if (e1 >> i1 & 1u) m1 += inst.lambda1[i1];
        for (int i2 = 0; i2 < inst.n2(); ++i2)
          if (e2 >> i2 & 1u) m2 += inst.lambda2[i2];
        if (lhs2 > 2 * m1 * m2) return false;
      }
  return true;
}

}  // namespace redform
