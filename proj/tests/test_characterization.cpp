#include <doctest.h>

#include "helpers.hpp"
#include "redform/characterization.hpp"
#include "redform/generators.hpp"
#include "redform/oracle.hpp"

using namespace redform;
using namespace redform::testing;

TEST_CASE("check_conic passes every reduced form") {
  Instance inst = uniform(2, 3, 3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    InterimRule q = reduce(inst, gen_random_expost(inst, seed));
    CHECK(check_conic(inst, q).empty());
  }
}

TEST_CASE("check_conic flags an ex ante imbalance") {
  Instance inst = uniform22();
  InterimRule q = interim22(1, 1, 0, 0);
  auto v = check_conic(inst, q);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::Conic);
  CHECK(v[0].alt == 1);
  CHECK(v[0].lhs == 1);
  CHECK(v[0].rhs == 0);
}

TEST_CASE("check_conic flags a negative entry with its location") {
  Instance inst = uniform22();
  InterimRule q = interim22(Rational(1, 2), Rational(1, 2), Rational(5, 8),
                            Rational(3, 8));
  q.at2(1, 0) = Rational(-1, 8);  // Q_2^{k1}(c)
  auto v = check_conic(inst, q);
  REQUIRE(!v.empty());
  bool found = false;
  for (const auto& x : v)
    if (x.kind == Violation::Kind::Negative) {
      CHECK(x.player == 2);
      CHECK(x.alt == 1);
      CHECK(x.type == 0);
      CHECK(x.lhs == Rational(-1, 8));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("check_conic lists balance violations before negativity") {
  Instance inst = uniform22();
  InterimRule q = interim22(1, 1, Rational(-1, 4), 0);
  auto v = check_conic(inst, q);
  REQUIRE(v.size() == 2);
  CHECK(v[0].kind == Violation::Kind::Conic);
  CHECK(v[1].kind == Violation::Kind::Negative);
}

TEST_CASE("eval_cut with empty G is never violated") {
  Instance inst = uniform22();
  InterimRule q = interim22(1, 0, 1, 0);
  CutEvaluation e = eval_cut(inst, q, {0u, 1u, 2u});
  CHECK(e.lhs == 0);
  CHECK(e.rhs == Rational(1, 4));  // lambda({a} x {c})
  CHECK_FALSE(e.violated);
}

TEST_CASE("eval_cut on the (1,0)/(1,0) instance") {
  Instance inst = uniform22();
  InterimRule q = interim22(1, 0, 1, 0);
  // G={k1}, E1={a}, E2={d}
  CutEvaluation e = eval_cut(inst, q, {1u, 1u, 2u});
  CHECK(e.lhs == Rational(1, 2));
  CHECK(e.rhs == Rational(1, 4));
  CHECK(e.violated);
  // G={k1}, E1={a}, E2={c}
  e = eval_cut(inst, q, {1u, 1u, 1u});
  CHECK(e.lhs == 0);
  CHECK(e.rhs == Rational(1, 4));
  CHECK_FALSE(e.violated);
}

TEST_CASE("check_cuts returns the counting-order first violation") {
  Instance inst = uniform22();
  InterimRule q = interim22(1, 0, 1, 0);
  auto first = check_cuts(inst, q, CutMode::First);
  REQUIRE(first.size() == 1);
  CHECK(first[0].triple.g == 1u);
  CHECK(first[0].triple.e1 == 1u);
  CHECK(first[0].triple.e2 == 2u);
  auto all = check_cuts(inst, q, CutMode::All);
  CHECK(all.size() >= 1);
  CHECK(all[0].triple.e2 == 2u);
  for (const auto& e : all) CHECK(e.lhs > e.rhs);
}

TEST_CASE("check_cuts is empty on zero and on reduced forms") {
  Instance inst = uniform22();
  CHECK(check_cuts(inst, interim22(0, 0, 0, 0), CutMode::All).empty());
  Instance big = uniform(2, 4, 3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    InterimRule q = reduce(big, gen_random_expost(big, seed));
    CHECK(check_cuts(big, q, CutMode::All).empty());
  }
}

TEST_CASE("pruned and unpruned enumeration agree once Eq 5 holds") {
  Instance inst = gen_random_instance(3, 3, 77);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    InterimRule q = gen_random_interim(inst, seed, InterimMode::Free);
    if (!check_conic(inst, q).empty()) continue;
    auto a = check_cuts(inst, q, CutMode::All, true);
    auto b = check_cuts(inst, q, CutMode::All, false);
    CHECK(a.size() == b.size());
  }
}

TEST_CASE("check_implementable round-trips a reduced form") {
  Instance inst = uniform(2, 4, 3);
  InterimRule q = reduce(inst, gen_random_expost(inst, 42));
  Verdict v = check_implementable(inst, q);
  REQUIRE(v.implementable);
  REQUIRE(v.witness);
  InterimRule back = reduce(inst, *v.witness);
  CHECK(back.q1 == complete_with_slack(inst, q).q1);
  CHECK(back.q2 == complete_with_slack(inst, q).q2);
}

TEST_CASE("check_implementable rejects the (1,0)/(1,0) instance") {
  Instance inst = uniform22();
  Verdict v = check_implementable(inst, interim22(1, 0, 1, 0));
  REQUIRE_FALSE(v.implementable);
  REQUIRE(v.certificate);
  CHECK(v.certificate->kind == Violation::Kind::Cut);
  CHECK(v.certificate->triple.g == 1u);
  CHECK(v.certificate->triple.e1 == 1u);
  CHECK(v.certificate->triple.e2 == 2u);
  CHECK(v.certificate->lhs == Rational(1, 2));
  CHECK(v.certificate->rhs == Rational(1, 4));
}

TEST_CASE("check_implementable constructs the forced witness") {
  Instance inst = uniform22();
  Verdict v = check_implementable(
      inst, interim22(1, 0, Rational(1, 2), Rational(1, 2)));
  REQUIRE(v.implementable);
  REQUIRE(v.witness);
  for (int i2 = 0; i2 < 2; ++i2) {
    CHECK(v.witness->at(1, 0, i2) == 1);
    CHECK(v.witness->at(1, 1, i2) == 0);
  }
}

TEST_CASE("check_implementable swaps players when only T2 is binary") {
  Instance inst = uniform(3, 2, 2);
  ExPostRule q = gen_random_expost(inst, 8);
  Verdict v = check_implementable(inst, reduce(inst, q));
  REQUIRE(v.implementable);
  REQUIRE(v.witness);
  CHECK(v.witness->n1 == 3);
  CHECK(v.witness->n2 == 2);
  CHECK(check_ex_post_feasible(*v.witness));
}

TEST_CASE("full mode needs a binary side") {
  Instance inst = uniform(3, 3, 2);
  InterimRule q = reduce(inst, gen_random_expost(inst, 1));
  CHECK_THROWS_AS(check_implementable(inst, q, CheckMode::Full),
                  AssumptionViolated);
  Verdict v = check_implementable(inst, q, CheckMode::NecessaryOnly);
  CHECK(v.implementable);  // inequalities hold
  CHECK_FALSE(v.witness);
}

TEST_CASE("check_strassen requires two alternatives") {
  Instance inst = uniform(2, 2, 3);
  InterimRule q(3, 2, 2, false);
  CHECK_THROWS_AS(check_strassen(inst, q), WrongAlternativeCount);
}

TEST_CASE("check_strassen matches the examples") {
  Instance inst = uniform22();
  CHECK(check_strassen(inst, interim22(0, 0, 0, 0)));
  CHECK_FALSE(check_strassen(inst, interim22(1, 0, 1, 0)));
}

TEST_CASE("check_strassen agrees with the cut characterization") {
  Instance inst = gen_random_instance(3, 2, 5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    InterimRule q = gen_random_interim(inst, seed, seed % 2 ? InterimMode::Free
                                                            : InterimMode::Cone);
    bool ineq = check_conic(inst, q).empty() &&
                check_cuts(inst, q, CutMode::First).empty();
    CHECK(check_strassen(inst, q) == ineq);
  }
}

TEST_CASE("check_symmetric matches balance plus cuts") {
  Instance inst = uniform22();
  CHECK(check_symmetric(inst, interim22(0, 0, 0, 0)));
  // violates Eq. 4 only
  CHECK_FALSE(check_symmetric(inst, interim22(1, 1, 0, 0)));
  // violates Eq. 6
  CHECK_FALSE(check_symmetric(inst, interim22(1, 0, 1, 0)));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance r = gen_random_instance(3, 3, seed);
    InterimRule q = gen_random_interim(r, seed, seed % 2 ? InterimMode::Free
                                                         : InterimMode::Cone);
    // Eq. 10 is equivalent to Eq. 4 plus unpruned Eq. 6; Eq. 5 plays no part
    bool balance_ok = true;
    for (const auto& v : check_conic(r, q))
      if (v.kind == Violation::Kind::Conic) balance_ok = false;
    bool cuts_ok = check_cuts(r, q, CutMode::First, false).empty();
    CHECK(check_symmetric(r, q) == (balance_ok && cuts_ok));
  }
}
