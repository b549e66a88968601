#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "redform/core.hpp"

namespace redform {

struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Correlated lottery over the four item partitions
// ((AB,-), (A,B), (B,A), (-,AB)) induced by independent per-item lotteries,
// with q2S = 1 - q1S. Components sum to exactly 1.
std::array<Rational, 4> independent_to_correlated(const Rational& q1A,
                                                  const Rational& q1B);

// Recovers (q1A, q1B) when the lottery is of product form; the marginals
// are forced, so failure of the back-check proves there is none.
std::optional<std::pair<Rational, Rational>> product_form_decomposition(
    const std::array<Rational, 4>& p);

// Two-item package exchange: K = {(AB,-),(A,B),(B,A),(-,AB)}, k0 the
// no-trade partition (A,B), |T1| = 2, |T2| = t2_size, uniform prior.
Instance gen_package_exchange(int t2_size);

// Compromise setting: K = {k0, k1, k2} with k0 the compromise, two types
// (strong/weak) per player, uniform prior.
Instance gen_compromise();

// |T1| = 2, |T2| = t2_size, n_alts alternatives (k0 first), random positive
// prior masses with small denominators.
Instance gen_random_instance(int t2_size, int n_alts, std::uint64_t seed);

// Deterministic pseudo-random feasible lottery per profile: positive
// integer weights per alternative normalized by their sum.
ExPostRule gen_random_expost(const Instance& inst, std::uint64_t seed);

enum class InterimMode { Free, Cone };

// Free mode: nonnegative entries normalized per type over all of K.
// Cone mode: additionally rescales player 2's K* columns so ex ante sums
// match player 1's, then recomputes the slack row (which may go negative).
InterimRule gen_random_interim(const Instance& inst, std::uint64_t seed,
                               InterimMode mode);

}  // namespace redform
