#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "redform/characterization.hpp"
#include "redform/flow.hpp"
#include "redform/fuzz.hpp"
#include "redform/generators.hpp"
#include "redform/io.hpp"
#include "redform/lattice.hpp"
#include "redform/oracle.hpp"

namespace {

using namespace redform;

// exit codes: 0 ok / implementable, 1 violated / infeasible, 2 input error,
// 3 enumeration budget exceeded
constexpr int kOk = 0, kViolated = 1, kInputError = 2, kBudget = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

InstanceFile load(const std::string& path) {
  std::string text = slurp(path);
  InstanceFile f = parse_instance_file(text);
  std::cout << "instance hash=" << hash_hex(content_hash(text)) << "\n";
  return f;
}

const InterimRule& need_interim(const InstanceFile& f) {
  if (!f.interim) throw ParseError("instance file has no 'interim' section");
  return *f.interim;
}

int cmd_check(const std::string& path, const std::string& mode,
              bool all_violations) {
  InstanceFile f = load(path);
  const InterimRule& q = need_interim(f);
  CheckMode m =
      mode == "necessary-only" ? CheckMode::NecessaryOnly : CheckMode::Full;
  if (all_violations) {
    auto conic = check_conic(f.inst, q);
    bool negative_free =
        std::none_of(conic.begin(), conic.end(), [](const Violation& v) {
          return v.kind == Violation::Kind::Negative;
        });
    auto cuts = check_cuts(f.inst, q, CutMode::All, negative_free);
    for (const auto& v : conic)
      std::cout << format_violation(f.inst, v) << "\n";
    for (const auto& ev : cuts) {
      Violation v;
      v.kind = Violation::Kind::Cut;
      v.triple = ev.triple;
      v.lhs = ev.lhs;
      v.rhs = ev.rhs;
      std::cout << format_violation(f.inst, v) << "\n";
    }
    if (conic.empty() && cuts.empty()) {
      std::cout << (m == CheckMode::Full ? "IMPLEMENTABLE"
                                         : "INEQUALITIES-PASS")
                << "\n";
      return kOk;
    }
    std::cout << "VIOLATED\n";
    return kViolated;
  }
  Verdict v = check_implementable(f.inst, q, m);
  if (v.implementable) {
    std::cout << (m == CheckMode::Full ? "IMPLEMENTABLE" : "INEQUALITIES-PASS")
              << "\n";
    return kOk;
  }
  std::cout << "NOT-IMPLEMENTABLE\n"
            << format_violation(f.inst, *v.certificate) << "\n";
  return kViolated;
}

int cmd_implement(const std::string& path, const std::string& out_path) {
  InstanceFile f = load(path);
  Verdict v = check_implementable(f.inst, need_interim(f), CheckMode::Full);
  if (!v.implementable) {
    std::cout << "NOT-IMPLEMENTABLE\n"
              << format_violation(f.inst, *v.certificate) << "\n";
    return kViolated;
  }
  InstanceFile out = f;
  out.expost = v.witness;
  std::string text = write_instance_file(out);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path);
    os << text;
    std::cout << "IMPLEMENTABLE witness written to " << out_path << "\n";
  }
  return kOk;
}

int cmd_oracle(const std::string& path) {
  InstanceFile f = load(path);
  auto witness = lp_feasible(f.inst, need_interim(f));
  if (witness) {
    std::cout << "ORACLE-FEASIBLE\n";
    return kOk;
  }
  std::cout << "ORACLE-INFEASIBLE\n";
  return kViolated;
}

int cmd_fuzz(const FuzzConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  FuzzResult res = run_fuzz(cfg);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cout << res.report;
  // timing goes to stderr so the report stays byte-identical across runs
  std::cerr << "wall time " << ms << " ms\n";
  if (!res.failure_dump.empty()) {
    std::ofstream os("fuzz_failure.json");
    os << res.failure_dump;
    std::cerr << "disagreement dumped to fuzz_failure.json\n";
  }
  return res.ok ? kOk : kViolated;
}

int cmd_lattice(const std::string& path, const std::string& generator,
                long long budget) {
  Instance inst;
  if (!generator.empty()) {
    if (generator == "compromise")
      inst = gen_compromise();
    else if (generator.rfind("package", 0) == 0) {
      int sz = generator.size() > 7 ? std::stoi(generator.substr(7)) : 2;
      inst = gen_package_exchange(sz);
    } else
      throw ParseError("unknown generator '" + generator + "'");
    validate_instance(inst);
  } else {
    inst = load(path).inst;
  }
  LatticeReport rep = verify_lattice_polyhedron(inst, budget);
  std::cout << "lattice-polyhedron checks=" << rep.checked
            << (rep.pass ? " PASS" : " FAIL") << "\n";
  for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
  return rep.pass ? kOk : kViolated;
}

int cmd_network(const std::string& path) {
  InstanceFile f = load(path);
  InterimRule full = complete_with_slack(f.inst, need_interim(f));
  std::cout << dump_transportation(f.inst, transform(f.inst, full));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduced-form implementability checker for two-person "
               "bargaining problems"};
  app.require_subcommand(1);

  std::string file, mode = "full", out_path, generator;
  bool all_violations = false;
  long long budget = 1 << 20;
  FuzzConfig fuzz_cfg;

  auto* check = app.add_subcommand("check", "decide implementability");
  check->add_option("file", file)->required();
  check->add_option("--mode", mode)
      ->check(CLI::IsMember({"full", "necessary-only"}));
  check->add_flag("--all-violations", all_violations);

  auto* implement =
      app.add_subcommand("implement", "construct an implementing ex post rule");
  implement->add_option("file", file)->required();
  implement->add_option("--out", out_path);

  auto* oracle = app.add_subcommand("oracle", "LP feasibility ground truth");
  oracle->add_option("file", file)->required();

  auto* fuzz = app.add_subcommand("fuzz", "cross-check random instances");
  fuzz->add_option("--trials", fuzz_cfg.trials);
  fuzz->add_option("--seed", fuzz_cfg.seed);
  fuzz->add_option("--t2", fuzz_cfg.t2_size);
  fuzz->add_option("--alts", fuzz_cfg.n_alts);
  fuzz->add_option("--family", fuzz_cfg.family)
      ->check(CLI::IsMember({"random", "package", "compromise"}));

  auto* lattice =
      app.add_subcommand("lattice-verify", "verify the polyhedral structure");
  lattice->add_option("file", file);
  lattice->add_option("--generator", generator);
  lattice->add_option("--budget", budget);

  auto* network =
      app.add_subcommand("network", "dump the transformed flow network");
  network->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file, mode, all_violations);
    if (implement->parsed()) return cmd_implement(file, out_path);
    if (oracle->parsed()) return cmd_oracle(file);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_cfg);
    if (lattice->parsed()) {
      if (file.empty() && generator.empty())
        throw ParseError("lattice-verify needs a file or --generator");
      return cmd_lattice(file, generator, budget);
    }
    if (network->parsed()) return cmd_network(file);
  } catch (const EnumerationBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
