#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pillowcase/bar.hpp"
#include "pillowcase/corpus.hpp"
#include "pillowcase/io.hpp"
#include "pillowcase/pairing.hpp"
#include "pillowcase/selfcheck.hpp"

namespace py = pybind11;
using namespace pillowcase;

namespace {

std::vector<std::string> issueStrings(const ValidationReport& report) {
  std::vector<std::string> out;
  for (const auto& issue : report.structural) out.push_back(issue.where + ": " + issue.detail);
  for (const auto& issue : report.relation) out.push_back(issue.where + ": " + issue.detail);
  return out;
}

}  // namespace

PYBIND11_MODULE(_pillowcase, m) {
  m.doc() = "immersed-curve modules over the pillowcase algebra and their pairings";

  py::class_<RightModule>(m, "Module")
      .def_property_readonly("generator_count", &RightModule::genCount)
      .def_property_readonly("action_count",
                             [](const RightModule& mod) { return mod.actions.size(); })
      .def_property_readonly("generators",
                             [](const RightModule& mod) { return mod.genNames; })
      .def("serialize", [](const RightModule& mod) { return serializeModule(mod); })
      .def("__repr__", [](const RightModule& mod) {
        return "<Module with " + std::to_string(mod.genCount()) + " generators, " +
               std::to_string(mod.actions.size()) + " actions>";
      });

  py::class_<DDStructure>(m, "DD")
      .def_property_readonly("generator_count", &DDStructure::genCount)
      .def_property_readonly("arrow_count",
                             [](const DDStructure& d) { return d.arrows.size(); })
      .def("serialize", [](const DDStructure& d) { return serializeDD(d); })
      .def("__repr__", [](const DDStructure& d) {
        return "<DD with " + std::to_string(d.genCount()) + " generators, " +
               std::to_string(d.arrows.size()) + " arrows>";
      });

  py::class_<PairingComplex>(m, "Pairing")
      .def_property_readonly("generator_count", &PairingComplex::genCount)
      .def_property_readonly("arrow_count",
                             [](const PairingComplex& c) { return c.arrows.size(); })
      .def_property_readonly("generators",
                             [](const PairingComplex& c) { return c.genNames; })
      .def_property_readonly("arrows",
                             [](const PairingComplex& c) {
                               return std::vector<std::pair<int, int>>(c.arrows.begin(),
                                                                       c.arrows.end());
                             })
      .def("homology", &PairingComplex::homology);

  m.def("parse_module", &parseModule, py::arg("text"));
  m.def(
      "compile_curve",
      [](const std::string& text) { return compileCurve(normalize(parseWord(text))); },
      py::arg("text"), "parse, normalize and compile a curve word");
  m.def("load", [](const std::string& path) { return loadInput(path); }, py::arg("path"),
        "load a module, curve or sum file by path");
  m.def("direct_sum", &directSum, py::arg("parts"));
  m.def(
      "validate",
      [](const RightModule& mod, int maxArity) {
        return issueStrings(validateAinfty(mod, maxArity));
      },
      py::arg("module"), py::arg("max_arity") = 8,
      "structural and relation issues; empty means the module is valid");

  m.def("build_bar", &buildBar);
  m.def("builtin_bar_r", &builtinBarR);
  m.def("parse_dd", &parseDD, py::arg("text"));
  m.def("reduce_dd", [](const DDStructure& d) { return reduceDD(d); }, py::arg("dd"));
  m.def(
      "reduce_dd_seeded", [](const DDStructure& d, uint64_t seed) { return reduceDD(d, seed); },
      py::arg("dd"), py::arg("seed"));

  m.def(
      "pairing",
      [](const RightModule& m1, const RightModule& m0) {
        return buildPairing(m1, dualize(m0));
      },
      py::arg("m1"), py::arg("m0"),
      "pairing complex of two right modules against the reduced bar structure");
  m.def(
      "pair_rank",
      [](const RightModule& m1, const RightModule& m0) { return pairRank(m1, m0); },
      py::arg("m1"), py::arg("m0"));
  m.def("intersection_number", &intersectionNumber, py::arg("m1"), py::arg("m0"),
        py::arg("periodic"));
}
