#include <doctest.h>

#include "helpers.hpp"
#include "redform/characterization.hpp"
#include "redform/generators.hpp"
#include "redform/oracle.hpp"

using namespace redform;
using namespace redform::testing;

TEST_CASE("lp_feasible solves the zero rule with the slack alternative") {
  Instance inst = uniform22();
  auto q = lp_feasible(inst, interim22(0, 0, 0, 0));
  REQUIRE(q);
  CHECK(check_ex_post_feasible(*q));
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2) CHECK(q->at(0, i1, i2) == 1);
}

TEST_CASE("lp_feasible rejects the (1,0)/(1,0) instance") {
  Instance inst = uniform22();
  CHECK_FALSE(lp_feasible(inst, interim22(1, 0, 1, 0)));
}

TEST_CASE("lp_feasible accepts every reduced form") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance inst = gen_random_instance(2 + seed % 3, 2 + seed % 3, seed);
    InterimRule want = reduce(inst, gen_random_expost(inst, seed + 7));
    auto q = lp_feasible(inst, want);
    REQUIRE(q);
    CHECK(check_ex_post_feasible(*q));
    InterimRule got = reduce(inst, *q);
    for (int k : inst.kstar()) {
      for (int t = 0; t < inst.n1(); ++t) CHECK(got.at1(k, t) == want.at1(k, t));
      for (int t = 0; t < inst.n2(); ++t) CHECK(got.at2(k, t) == want.at2(k, t));
    }
  }
}

TEST_CASE("lp_feasible works without the binary-type assumption") {
  Instance inst = uniform(3, 3, 3);
  InterimRule q = reduce(inst, gen_random_expost(inst, 13));
  CHECK(lp_feasible(inst, q));
  Instance big = uniform(4, 3, 2);
  InterimRule qb = reduce(big, gen_random_expost(big, 14));
  CHECK(lp_feasible(big, qb));
}

TEST_CASE("lp feasibility implies the inequalities (necessity, any size)") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = uniform(3, 3, 2 + seed % 2);
    InterimRule q = gen_random_interim(inst, seed, InterimMode::Free);
    if (!lp_feasible(inst, q)) continue;
    CHECK(check_conic(inst, q).empty());
    CHECK(check_cuts(inst, q, CutMode::First).empty());
  }
}

TEST_CASE("cross_check agrees on binary-side instances") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Instance inst = gen_random_instance(2 + seed % 3, 2 + seed % 3, seed);
    InterimRule q;
    switch (seed % 3) {
      case 0: q = reduce(inst, gen_random_expost(inst, seed)); break;
      case 1: q = gen_random_interim(inst, seed, InterimMode::Free); break;
      default: q = gen_random_interim(inst, seed, InterimMode::Cone); break;
    }
    CrossCheck cc = cross_check(inst, q);
    CHECK_FALSE(cc.one_directional);
    CHECK(cc.agree);
    if (cc.verdict.implementable) {
      REQUIRE(cc.lp_witness);
      CHECK(check_ex_post_feasible(*cc.lp_witness));
      CHECK(check_ex_post_feasible(*cc.verdict.witness));
    }
  }
}

TEST_CASE("cross_check degrades to one-directional off the assumption") {
  Instance inst = uniform(3, 3, 2);
  InterimRule q = reduce(inst, gen_random_expost(inst, 3));
  CrossCheck cc = cross_check(inst, q);
  CHECK(cc.one_directional);
  CHECK(cc.agree);
  CHECK(cc.lp_ok);
}
