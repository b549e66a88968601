#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "redform/core.hpp"

namespace redform {

struct UnbalancedProblem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Undirected skeleton of a directed graph; parallel edges are allowed and
// count as a two-arc cycle.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Returns a pivot node whose deletion leaves the (2-connected) graph
// acyclic, or nullopt if the graph is not a suspension. Smallest such node
// index is returned.
std::optional<int> is_suspension(const Graph& g);

// Multi-commodity formulation on the complete bipartite type graph: one
// commodity per alternative in K*, node demands -Q_1^k(t1)l1(t1) /
// +Q_2^k(t2)l2(t2), arc capacities lambda(t). Nodes 0..n1-1 are player-1
// types, n1..n1+n2-1 player-2 types; arc (t1,t2) at index i1*n2+i2.
struct MultiflowProblem {
  int n1 = 0, n2 = 0;
  std::vector<int> commodities;           // alternative indices (K*)
  std::vector<Rational> net_demand;       // [commodity_pos * (n1+n2) + node]
  std::vector<Rational> capacity;         // [i1 * n2 + i2]

  const Rational& demand(int kpos, int node) const {
    return net_demand[static_cast<size_t>(kpos) * (n1 + n2) + node];
  }
};

MultiflowProblem build_multiflow(const Instance& inst, const InterimRule& q);

// True iff every commodity's net demands sum to zero (balance; equivalent
// to the ex ante consistency equalities).
bool multiflow_balanced(const MultiflowProblem& p);

// Bipartite transportation problem obtained by pivoting on the first type
// of player 1 (|T1| = 2 required). Supply nodes are (k, t2) for all k in K,
// indexed k*n2+t2. Demand nodes are (k, t1^b) for all k (index k), then
// (t1^a, t2) for all t2 (index nk+t2). Arcs: (k,t2)->(k,t1^b) and
// (k,t2)->(t1^a,t2), uncapacitated.
struct TransportationProblem {
  int nk = 0, n2 = 0;
  std::vector<Rational> supply;  // nk * n2
  std::vector<Rational> demand;  // nk + n2
};

// Requires q complete over K with nonnegative entries and balance; throws
// AssumptionViolated when |T1| != 2.
TransportationProblem transform(const Instance& inst, const InterimRule& q);

struct TransportSolution {
  // flow on (k,t2)->(k,t1^b) and (k,t2)->(t1^a,t2), both indexed k*n2+t2
  std::vector<Rational> to_b, to_a;
};

// Demand-node subset with d(U) > c(Gamma(U)).
struct HallWitness {
  std::vector<int> demand_nodes;
  Rational demand_total{0}, neighbor_supply{0};
};

struct TransportResult {
  std::optional<TransportSolution> flow;
  std::optional<HallWitness> witness;
};

// Augmenting-path max flow over exact rationals. Either meets every supply
// and demand exactly or returns a Hall witness (the min-cut side of the
// residual graph).
TransportResult solve_transportation(const TransportationProblem& p);

// Change of variables back to a lottery rule: q^k(t) = x^k(t)/lambda(t).
ExPostRule extract_ex_post(const Instance& inst, const TransportSolution& f);

// Maps a failing demand set U = (U1 x {t1^b}) u ({t1^a} x U2) to a violated
// cut triple, branching on whether k0 is in U1. Falls back to a conic or
// negativity certificate when those preconditions fail instead.
Violation hall_witness_to_violation(const Instance& inst, const InterimRule& q,
                                    const HallWitness& u);

// Full constructive pipeline: conic and slack screening, transform, solve,
// then witness extraction or certificate mapping. Swaps players when
// |T1| != 2 = |T2|.
Verdict decide_via_flow(const Instance& inst, const InterimRule& q);

// Human-readable adjacency listing of the transformed network.
std::string dump_transportation(const Instance& inst,
                                const TransportationProblem& p);

}  // namespace redform
