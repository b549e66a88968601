#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "redform/characterization.hpp"
#include "redform/fuzz.hpp"
#include "redform/generators.hpp"
#include "redform/io.hpp"
#include "redform/lattice.hpp"
#include "redform/oracle.hpp"

namespace py = pybind11;
using namespace redform;

namespace {

InstanceFile load(const std::string& text) { return parse_instance_file(text); }

const InterimRule& need_interim(const InstanceFile& f) {
  if (!f.interim) throw ParseError("instance file has no 'interim' section");
  return *f.interim;
}

py::dict check(const std::string& text, const std::string& mode) {
  InstanceFile f = load(text);
  CheckMode m =
      mode == "necessary-only" ? CheckMode::NecessaryOnly : CheckMode::Full;
  Verdict v = check_implementable(f.inst, need_interim(f), m);
  py::dict out;
  out["implementable"] = v.implementable;
  out["certificate"] = v.certificate
                           ? py::object(py::str(
                                 format_violation(f.inst, *v.certificate)))
                           : py::object(py::none());
  return out;
}

std::string implement(const std::string& text) {
  InstanceFile f = load(text);
  Verdict v = check_implementable(f.inst, need_interim(f), CheckMode::Full);
  if (!v.implementable)
    throw py::value_error("not implementable: " +
                          format_violation(f.inst, *v.certificate));
  InstanceFile out = f;
  out.expost = v.witness;
  return write_instance_file(out);
}

bool oracle(const std::string& text) {
  InstanceFile f = load(text);
  return lp_feasible(f.inst, need_interim(f)).has_value();
}

py::dict lattice_verify(const std::string& text, long long budget) {
  InstanceFile f = load(text);
  LatticeReport rep = verify_lattice_polyhedron(f.inst, budget);
  py::dict out;
  out["pass"] = rep.pass;
  out["checked"] = rep.checked;
  out["failures"] = rep.failures;
  return out;
}

py::dict fuzz(long trials, std::uint64_t seed, int t2, int alts,
              const std::string& family) {
  FuzzConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.t2_size = t2;
  cfg.n_alts = alts;
  cfg.family = family;
  FuzzResult res = run_fuzz(cfg);
  py::dict out;
  out["ok"] = res.ok;
  out["report"] = res.report;
  out["implementable"] = res.implementable;
  out["disagreements"] = res.disagreements;
  out["failure_dump"] = res.failure_dump;
  return out;
}

std::string generate(const std::string& family, int t2_size) {
  InstanceFile f;
  if (family == "package")
    f.inst = gen_package_exchange(t2_size);
  else if (family == "compromise")
    f.inst = gen_compromise();
  else
    throw py::value_error("unknown family '" + family + "'");
  return write_instance_file(f);
}

}  // namespace

PYBIND11_MODULE(_redform, m) {
  m.doc() = "reduced-form implementability checker for two-person bargaining";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InstanceError>(m, "InstanceError", PyExc_ValueError);
  py::register_exception<AssumptionViolated>(m, "AssumptionViolated",
                                             PyExc_ValueError);
  py::register_exception<EnumerationBudgetExceeded>(
      m, "EnumerationBudgetExceeded", PyExc_RuntimeError);

  m.def("check", &check, py::arg("instance_json"), py::arg("mode") = "full",
        "Decide implementability of the file's interim rule.");
  m.def("implement", &implement, py::arg("instance_json"),
        "Return the instance file extended with a witness ex post rule.");
  m.def("oracle", &oracle, py::arg("instance_json"),
        "LP ground truth: is the interim rule implementable?");
  m.def("lattice_verify", &lattice_verify, py::arg("instance_json"),
        py::arg("budget") = (1ll << 20),
        "Verify the lattice-polyhedron structure of the instance.");
  m.def("fuzz", &fuzz, py::arg("trials") = 1000, py::arg("seed") = 0,
        py::arg("t2") = 2, py::arg("alts") = 2, py::arg("family") = "random",
        "Cross-check the characterization against the LP oracle.");
  m.def("generate", &generate, py::arg("family"), py::arg("t2_size") = 2,
        "Serialize a named example instance.");
}
