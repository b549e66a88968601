#include "redform/lattice.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

namespace redform {

LatticeElement meet(const LatticeElement& a, const LatticeElement& b) {
  return {a.e1 & b.e1, a.e2 & b.e2, a.g & b.g};
}

LatticeElement join(const LatticeElement& a, const LatticeElement& b) {
  return {a.e1 | b.e1, a.e2 | b.e2, a.g | b.g};
}

bool lattice_leq(const LatticeElement& a, const LatticeElement& b) {
  return (a.e1 & ~b.e1) == 0 && (a.e2 & ~b.e2) == 0 && (a.g & ~b.g) == 0;
}

Rational beta(const Instance& inst, const LatticeElement& a) {
  Rational m1(0), m2c(0);
  for (int i1 = 0; i1 < inst.n1(); ++i1)
    if (a.e1 >> i1 & 1u) m1 += inst.lambda1[i1];
  for (int i2 = 0; i2 < inst.n2(); ++i2)
    if (!(a.e2 >> i2 & 1u)) m2c += inst.lambda2[i2];
  return m1 * m2c;
}

std::vector<Column> columns(const Instance& inst) {
  std::vector<Column> out;
  const int m = static_cast<int>(inst.kstar().size());
  for (int t = 0; t < inst.n1(); ++t)
    for (int k = 0; k < m; ++k) out.push_back({1, t, k});
  for (int t = 0; t < inst.n2(); ++t)
    for (int k = 0; k < m; ++k) out.push_back({2, t, k});
  return out;
}

int coeff(const Column& j, const LatticeElement& a) {
  if (!(a.g >> j.kpos & 1u)) return 0;
  if (j.player == 1) return (a.e1 >> j.type & 1u) ? +1 : 0;
  return (a.e2 >> j.type & 1u) ? -1 : 0;
}

void LatticeReport::fail(const std::string& what) {
  pass = false;
  if (failures.size() < 10) failures.push_back(what);
}

namespace {

struct ElementSpace {
  int n1, n2, m;
  long long size() const { return 1ll << (n1 + n2 + m); }
  LatticeElement at(long long idx) const {
    LatticeElement e;
    e.e1 = idx & ((1u << n1) - 1u);
    e.e2 = (idx >> n1) & ((1u << n2) - 1u);
    e.g = (idx >> (n1 + n2)) & ((1u << m) - 1u);
    return e;
  }
};

ElementSpace space(const Instance& inst) {
  return {inst.n1(), inst.n2(), static_cast<int>(inst.kstar().size())};
}

std::string describe(const LatticeElement& a) {
  std::ostringstream os;
  os << "(e1=" << a.e1 << ",e2=" << a.e2 << ",g=" << a.g << ")";
  return os.str();
}

}  // namespace

LatticeReport check_beta_submodular(const Instance& inst) {
  LatticeReport rep;
  const auto sp = space(inst);
  for (long long i = 0; i < sp.size(); ++i)
    for (long long j = i; j < sp.size(); ++j) {
      LatticeElement a = sp.at(i), b = sp.at(j);
      ++rep.checked;
      if (beta(inst, a) + beta(inst, b) <
          beta(inst, join(a, b)) + beta(inst, meet(a, b)))
        rep.fail("beta not submodular at " + describe(a) + "," + describe(b));
    }
  return rep;
}

LatticeReport check_coeff_conditions(const Instance& inst,
                                     CoeffCondition which) {
  LatticeReport rep;
  const auto sp = space(inst);
  const auto cols = columns(inst);
  auto check_pair = [&](const LatticeElement& a, const LatticeElement& b) {
    for (const auto& j : cols) {
      ++rep.checked;
      switch (which) {
        case CoeffCondition::C1:
          if (std::abs(coeff(j, a) - coeff(j, b)) > 1)
            rep.fail("C1 fails at " + describe(a) + "," + describe(b));
          break;
        case CoeffCondition::C3:
          if (coeff(j, a) + coeff(j, b) >
              coeff(j, join(a, b)) + coeff(j, meet(a, b)))
            rep.fail("C3 fails at " + describe(a) + "," + describe(b));
          break;
        case CoeffCondition::Modular:
          if (coeff(j, a) + coeff(j, b) !=
              coeff(j, join(a, b)) + coeff(j, meet(a, b)))
            rep.fail("modularity fails at " + describe(a) + "," + describe(b));
          break;
        default:
          break;
      }
    }
  };

  if (which == CoeffCondition::C2) {
    for (long long i = 0; i < sp.size(); ++i)
      for (long long j = 0; j < sp.size(); ++j) {
        LatticeElement a = sp.at(i), b = sp.at(j);
        if (!(lattice_leq(a, b) && !(a == b))) continue;
        for (long long l = 0; l < sp.size(); ++l) {
          LatticeElement c = sp.at(l);
          if (!(lattice_leq(b, c) && !(b == c))) continue;
          for (const auto& col : cols) {
            ++rep.checked;
            if (std::abs(coeff(col, a) - coeff(col, b) + coeff(col, c)) > 1)
              rep.fail("C2 fails at " + describe(a) + "," + describe(b) + "," +
                       describe(c));
          }
        }
      }
    return rep;
  }

  for (long long i = 0; i < sp.size(); ++i)
    for (long long j = 0; j < sp.size(); ++j) {
      LatticeElement a = sp.at(i), b = sp.at(j);
      if (which == CoeffCondition::C1 && !(lattice_leq(a, b) && !(a == b)))
        continue;
      check_pair(a, b);
    }
  return rep;
}

LatticeReport verify_lattice_polyhedron(const Instance& inst,
                                        long long budget, std::uint64_t seed) {
  const auto sp = space(inst);
  if (sp.size() > budget)
    throw EnumerationBudgetExceeded("lattice has " + std::to_string(sp.size()) +
                                    " elements, budget " +
                                    std::to_string(budget));
  LatticeReport rep;

  auto axiom_triple = [&](const LatticeElement& a, const LatticeElement& b,
                          const LatticeElement& c) {
    ++rep.checked;
    if (!(join(a, join(b, c)) == join(join(a, b), c)) ||
        !(meet(a, meet(b, c)) == meet(meet(a, b), c)))
      rep.fail("associativity fails");
    if (!(join(a, meet(a, b)) == a) || !(meet(a, join(a, b)) == a))
      rep.fail("absorption fails");
    if (!(meet(a, join(b, c)) == join(meet(a, b), meet(a, c))))
      rep.fail("distributivity fails");
  };

  const bool exhaustive = sp.size() <= (1 << 7);
  if (exhaustive) {
    for (long long i = 0; i < sp.size(); ++i)
      for (long long j = 0; j < sp.size(); ++j)
        for (long long l = 0; l < sp.size(); ++l)
          axiom_triple(sp.at(i), sp.at(j), sp.at(l));
  } else {
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 200000; ++it)
      axiom_triple(sp.at(rng() % sp.size()), sp.at(rng() % sp.size()),
                   sp.at(rng() % sp.size()));
  }

  auto merge = [&](const LatticeReport& sub) {
    rep.checked += sub.checked;
    if (!sub.pass) {
      rep.pass = false;
      for (const auto& f : sub.failures) rep.fail(f);
    }
  };

  if (sp.size() <= (1 << 14)) {
    merge(check_beta_submodular(inst));
    merge(check_coeff_conditions(inst, CoeffCondition::Modular));
    merge(check_coeff_conditions(inst, CoeffCondition::C1));
    if (sp.size() <= (1 << 7))
      merge(check_coeff_conditions(inst, CoeffCondition::C2));
  } else {
    std::mt19937_64 rng(seed + 1);
    const auto cols = columns(inst);
    for (int it = 0; it < 100000; ++it) {
      LatticeElement a = sp.at(rng() % sp.size()), b = sp.at(rng() % sp.size());
      ++rep.checked;
      if (beta(inst, a) + beta(inst, b) <
          beta(inst, join(a, b)) + beta(inst, meet(a, b)))
        rep.fail("beta not submodular (sampled)");
      for (const auto& j : cols)
        if (coeff(j, a) + coeff(j, b) !=
            coeff(j, join(a, b)) + coeff(j, meet(a, b)))
          rep.fail("modularity fails (sampled)");
    }
  }
  return rep;
}

}  // namespace redform
