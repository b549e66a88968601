#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "redform/core.hpp"

namespace redform {

struct EnumerationBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Row index (E1, E2, G) of the inequality system, as bitmasks in declared
// element order. Meet/join are componentwise intersection/union.
struct LatticeElement {
  std::uint32_t e1 = 0, e2 = 0, g = 0;
  bool operator==(const LatticeElement&) const = default;
};

LatticeElement meet(const LatticeElement& a, const LatticeElement& b);
LatticeElement join(const LatticeElement& a, const LatticeElement& b);
bool lattice_leq(const LatticeElement& a, const LatticeElement& b);

// Right-hand side beta(A) = lambda(E1 x E2^c); independent of G.
Rational beta(const Instance& inst, const LatticeElement& a);

// Column index into C = (T1 x K*) u (T2 x K*): player 1 or 2, a type index
// of that player and a position into inst.kstar().
struct Column {
  int player;  // 1 or 2
  int type;
  int kpos;
};

std::vector<Column> columns(const Instance& inst);

// Coefficient h_j(A) in {-1, 0, +1}.
int coeff(const Column& j, const LatticeElement& a);

struct LatticeReport {
  bool pass = true;
  long long checked = 0;
  std::vector<std::string> failures;  // first few, for diagnostics
  void fail(const std::string& what);
};

enum class CoeffCondition { C1, C2, C3, Modular };

LatticeReport check_beta_submodular(const Instance& inst);
LatticeReport check_coeff_conditions(const Instance& inst,
                                     CoeffCondition which);

// Aggregate verification: lattice axioms on triples, beta submodularity on
// pairs, C1/C2 on chains and modularity on all pairs. Exhaustive while the
// element count stays small, seeded sampling above that, and refuses to run
// when |A| exceeds the budget.
LatticeReport verify_lattice_polyhedron(const Instance& inst,
                                        long long budget = 1 << 20,
                                        std::uint64_t seed = 0);

}  // namespace redform
