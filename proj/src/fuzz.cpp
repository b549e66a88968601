#include "redform/fuzz.hpp"

#include <algorithm>
#include <sstream>

#include "redform/characterization.hpp"
#include "redform/generators.hpp"
#include "redform/io.hpp"
#include "redform/oracle.hpp"

namespace redform {

namespace {

Instance family_instance(const FuzzConfig& cfg, std::uint64_t trial_seed) {
  if (cfg.family == "package") return gen_package_exchange(cfg.t2_size);
  if (cfg.family == "compromise") return gen_compromise();
  if (cfg.family == "random")
    return gen_random_instance(cfg.t2_size, cfg.n_alts, trial_seed);
  throw std::invalid_argument("unknown family '" + cfg.family + "'");
}

InterimRule trial_interim(const Instance& inst, long trial,
                          std::uint64_t trial_seed) {
  switch (trial % 3) {
    case 0:
      return reduce(inst, gen_random_expost(inst, trial_seed));
    case 1:
      return gen_random_interim(inst, trial_seed, InterimMode::Free);
    default:
      return gen_random_interim(inst, trial_seed, InterimMode::Cone);
  }
}

}  // namespace

FuzzResult run_fuzz(const FuzzConfig& cfg) {
  FuzzResult res;
  long violations_min = -1, violations_max = 0;
  std::ostringstream report;

  for (long trial = 0; trial < cfg.trials; ++trial) {
    std::uint64_t trial_seed =
        cfg.seed * 1000003ull + static_cast<std::uint64_t>(trial);
    Instance inst = family_instance(cfg, trial_seed);
    InterimRule q = trial_interim(inst, trial, trial_seed);
    CrossCheck cc = cross_check(inst, q);
    if (cc.verdict.implementable) ++res.implementable;

    long nviol = 0;
    if (!cc.verdict.implementable && !cc.one_directional) {
      nviol = static_cast<long>(check_conic(inst, q).size() +
                                check_cuts(inst, q, CutMode::All).size());
    }
    if (violations_min < 0 || nviol < violations_min) violations_min = nviol;
    violations_max = std::max(violations_max, nviol);

    if (!cc.agree) {
      ++res.disagreements;
      if (res.failure_dump.empty()) {
        InstanceFile f;
        f.inst = inst;
        f.interim = q;
        res.failure_dump = write_instance_file(f);
      }
    }
  }

  res.ok = res.disagreements == 0;
  report << "fuzz family=" << cfg.family << " trials=" << cfg.trials
         << " seed=" << cfg.seed << " t2=" << cfg.t2_size
         << " alts=" << cfg.n_alts << "\n"
         << "implementable=" << res.implementable << "/" << cfg.trials << "\n"
         << "violations min=" << std::max(violations_min, 0l)
         << " max=" << violations_max << "\n"
         << "disagreements=" << res.disagreements << "\n";
  if (!res.failure_dump.empty())
    report << "first disagreement hash="
           << hash_hex(content_hash(res.failure_dump)) << "\n";
  res.report = report.str();
  return res;
}

}  // namespace redform
