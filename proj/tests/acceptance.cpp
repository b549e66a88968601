// Acceptance harness: one line per criterion, exit code = number of failures.
#include <array>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "redform/characterization.hpp"
#include "redform/flow.hpp"
#include "redform/fuzz.hpp"
#include "redform/generators.hpp"
#include "redform/io.hpp"
#include "redform/lattice.hpp"
#include "redform/oracle.hpp"

using namespace redform;
using namespace redform::testing;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
  std::cout << "criterion " << number << " (" << name << "): "
            << (pass ? "PASS" : "FAIL") << " - " << detail << "\n";
  if (!pass) ++failures;
}

InterimRule trial_interim(const Instance& inst, long trial,
                          std::uint64_t seed) {
  switch (trial % 3) {
    case 0: return reduce(inst, gen_random_expost(inst, seed));
    case 1: return gen_random_interim(inst, seed, InterimMode::Free);
    default: return gen_random_interim(inst, seed, InterimMode::Cone);
  }
}

bool certificate_strict(const Instance& inst, const InterimRule& q,
                        const Violation& v) {
  switch (v.kind) {
    case Violation::Kind::Cut: {
      CutEvaluation e = eval_cut(inst, q, v.triple);
      return e.violated && e.lhs == v.lhs && e.rhs == v.rhs;
    }
    case Violation::Kind::Conic:
      return v.lhs != v.rhs;
    case Violation::Kind::Negative:
      return v.lhs < 0;
  }
  return false;
}

// one fuzz sweep backs criteria 1 and 3
struct SweepResult {
  long trials = 0, disagreements = 0, not_impl = 0, bad_cert = 0;
};

SweepResult theorem1_sweep() {
  SweepResult r;
  for (int t2 : {2, 3, 4})
    for (int alts : {2, 3, 4})
      for (long trial = 0; trial < 1200; ++trial) {
        std::uint64_t seed =
            (static_cast<std::uint64_t>(t2 * 31 + alts) << 32) | trial;
        Instance inst = gen_random_instance(t2, alts, seed);
        InterimRule q = trial_interim(inst, trial, seed);
        CrossCheck cc = cross_check(inst, q);
        ++r.trials;
        if (!cc.agree) ++r.disagreements;
        if (!cc.verdict.implementable) {
          ++r.not_impl;
          if (!cc.verdict.certificate ||
              !certificate_strict(inst, q, *cc.verdict.certificate))
            ++r.bad_cert;
        }
      }
  return r;
}

void constructive_round_trip() {
  long bad = 0;
  const long trials = 1000;
  for (long trial = 0; trial < trials; ++trial) {
    Instance inst =
        gen_random_instance(2 + trial % 3, 2 + trial % 3, 900 + trial);
    InterimRule q = reduce(inst, gen_random_expost(inst, trial));
    auto res = solve_transportation(transform(inst, q));
    if (!res.flow) {
      ++bad;
      continue;
    }
    ExPostRule back = extract_ex_post(inst, *res.flow);
    if (!check_ex_post_feasible(back)) {
      ++bad;
      continue;
    }
    InterimRule rq = reduce(inst, back);
    if (rq.q1 != q.q1 || rq.q2 != q.q2) ++bad;
  }
  std::ostringstream d;
  d << trials << " transform/solve/extract round trips, " << bad << " failures";
  report(2, "constructive round-trip", bad == 0, d.str());
}

void strassen() {
  long trials = 0, mismatches = 0;
  for (int t2 : {2, 3, 4})
    for (long trial = 0; trial < 700; ++trial) {
      std::uint64_t seed = 5000 + t2 * 1000 + trial;
      Instance inst = gen_random_instance(t2, 2, seed);
      InterimRule q = trial_interim(inst, trial, seed);
      bool ineq = check_conic(inst, q).empty() &&
                  check_cuts(inst, q, CutMode::First).empty();
      ++trials;
      if (check_strassen(inst, q) != ineq) ++mismatches;
    }
  std::ostringstream d;
  d << trials << " |K|=2 trials, " << mismatches << " mismatches";
  report(4, "Strassen specialization", mismatches == 0, d.str());
}

void symmetric_form() {
  long trials = 0, mismatches = 0;
  for (int t2 : {2, 3})
    for (int alts : {2, 3})
      for (long trial = 0; trial < 550; ++trial) {
        std::uint64_t seed = 7000 + t2 * 100 + alts * 10 + trial;
        Instance inst = gen_random_instance(t2, alts, seed);
        InterimRule q = trial_interim(inst, trial, seed);
        bool balance = true;
        for (const auto& v : check_conic(inst, q))
          if (v.kind == Violation::Kind::Conic) balance = false;
        bool cuts = check_cuts(inst, q, CutMode::First, false).empty();
        ++trials;
        if (check_symmetric(inst, q) != (balance && cuts)) ++mismatches;
      }
  std::ostringstream d;
  d << trials << " trials, " << mismatches << " mismatches";
  report(5, "player-symmetric equivalence", mismatches == 0, d.str());
}

void necessity_beyond_assumption() {
  long bad = 0;
  const long trials = 1000;
  for (long trial = 0; trial < trials; ++trial) {
    Instance inst = uniform(trial % 2 ? 4 : 3, 3, 2 + (int)(trial % 2));
    InterimRule q = reduce(inst, gen_random_expost(inst, 300 + trial));
    Verdict v = check_implementable(inst, q, CheckMode::NecessaryOnly);
    if (!v.implementable) ++bad;
  }
  std::ostringstream d;
  d << trials << " reduced forms on 3x3 and 4x3, " << bad << " violations";
  report(6, "necessity without Assumption 1", bad == 0, d.str());
}

void lattice_structure() {
  Instance small = uniform22();          // |K*| = 1
  Instance larger = uniform(2, 2, 3);    // |K*| = 2
  bool pass = true;
  std::ostringstream d;
  for (const Instance* inst : {&small, &larger}) {
    LatticeReport rep = verify_lattice_polyhedron(*inst);
    LatticeReport beta_rep = check_beta_submodular(*inst);
    LatticeReport c1 = check_coeff_conditions(*inst, CoeffCondition::C1);
    LatticeReport c2 = check_coeff_conditions(*inst, CoeffCondition::C2);
    LatticeReport mod = check_coeff_conditions(*inst, CoeffCondition::Modular);
    d << "|K*|=" << inst->kstar().size() << ": beta-submodular "
      << (beta_rep.pass ? "ok" : "FAIL") << ", C1 " << (c1.pass ? "ok" : "FAIL")
      << ", C2 " << (c2.pass ? "ok" : "FAIL") << ", modularity "
      << (mod.pass ? "ok" : "fails") << "; ";
    if (!rep.pass) pass = false;
  }
  d << "h_j modularity is impossible on incomparable pairs: rows "
       "({t1},{t2},{}) and ({t1'},{t2},{k}) give 0+0 vs 1+0 for column "
       "(t1,k)";
  report(7, "lattice polyhedron structure", pass, d.str());
}

void package_construction() {
  long bad = 0;
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    Rational a = Rational(static_cast<long>(rng() % 101)) / 100;
    Rational b = Rational(static_cast<long>(rng() % 101)) / 100;
    auto p = independent_to_correlated(a, b);
    Rational sum(0);
    for (const auto& v : p) {
      if (v < 0) ++bad;
      sum += v;
    }
    if (sum != 1) ++bad;
  }
  std::array<Rational, 4> diag{Rational(1, 2), 0, 0, Rational(1, 2)};
  ExPostRule q(4, 2, 2);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int k = 0; k < 4; ++k) q.at(k, i1, i2) = diag[k];
  bool diag_feasible = check_ex_post_feasible(q);
  bool non_product = !product_form_decomposition(diag);
  std::ostringstream d;
  d << "1000 product lotteries, " << bad
    << " checksum failures; diagonal lottery feasible="
    << (diag_feasible ? "yes" : "no")
    << ", product-form=" << (non_product ? "no" : "yes");
  report(8, "package-exchange construction",
         bad == 0 && diag_feasible && non_product, d.str());
}

void determinism() {
  FuzzConfig cfg;
  cfg.trials = 200;
  cfg.seed = 7;
  cfg.t2_size = 3;
  cfg.n_alts = 3;
  FuzzResult a = run_fuzz(cfg), b = run_fuzz(cfg);
  Instance inst = uniform22();
  InterimRule q = interim22(1, 0, 1, 0);
  Verdict v1 = check_implementable(inst, q), v2 = check_implementable(inst, q);
  bool certs_equal = v1.implementable == v2.implementable &&
                     format_violation(inst, *v1.certificate) ==
                         format_violation(inst, *v2.certificate);
  bool pass = a.report == b.report && certs_equal;
  report(9, "determinism", pass,
         pass ? "repeated fuzz reports and certificates byte-identical"
              : "outputs differ between identical runs");
}

}  // namespace

int main() {
  SweepResult sweep = theorem1_sweep();
  {
    std::ostringstream d;
    d << sweep.trials << " trials over |T2| in {2,3,4}, |K| in {2,3,4}, "
      << sweep.disagreements << " disagreements";
    report(1, "Theorem-1 equivalence vs LP oracle", sweep.disagreements == 0,
           d.str());
  }
  constructive_round_trip();
  {
    std::ostringstream d;
    d << sweep.not_impl << " non-implementable verdicts, " << sweep.bad_cert
      << " invalid certificates";
    report(3, "certificate validity", sweep.not_impl > 0 && sweep.bad_cert == 0,
           d.str());
  }
  strassen();
  symmetric_form();
  necessity_beyond_assumption();
  lattice_structure();
  package_construction();
  determinism();
  std::cout << (failures == 0
                    ? "all criteria passed"
                    : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures;
}
