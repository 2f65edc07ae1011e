#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "boxram/boxdeg.hpp"
#include "boxram/cli.hpp"
#include "boxram/json_io.hpp"
#include "boxram/oracle.hpp"
#include "boxram/structure.hpp"

namespace py = pybind11;
using namespace boxram;

namespace {

// Structures cross the boundary as JSON text; the python side does (de)serialisation.
FinStructure parse(const std::string& text) { return structure_from_json(Json::parse(text)); }

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Box Ramsey degrees, canonical relations and exhaustive Ramsey checks";

  static py::exception<Error> error(m, "BoxramError", PyExc_ValueError);
  static py::exception<BudgetExceeded> budget(m, "BudgetExceededError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      budget(e.what());
    } catch (const Error& e) {
      error(e.what());
    } catch (const Json::exception& e) {
      error(e.what());
    }
  });

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run one CLI command; returns (exit code, stdout, stderr).");

  m.def("surjection_count", [](int d, int k) { return to_py(surjection_count(d, k)); }, py::arg("d"), py::arg("k"));
  m.def("omega_box_degree", [](int d) { return to_py(omega_box_degree(d)); }, py::arg("d"));
  m.def("canonical_relation_count", [](int d) { return to_py(canonical_relation_count(d)); }, py::arg("d"));

  m.def("validate_structure", [](const std::string& s) { return to_json(parse(s)).dump(); }, py::arg("structure"));

  m.def("embeddings", [](const std::string& a, const std::string& b) {
    std::vector<std::vector<int>> maps;
    for (const auto& e : enumerate_embeddings(parse(a), parse(b))) maps.push_back(e.map);
    return maps;
  }, py::arg("a"), py::arg("b"));

  m.def("automorphisms", [](const std::string& s) { return automorphisms(parse(s)); }, py::arg("structure"));

  m.def("sim_classes", [](const std::vector<std::string>& patterns, const std::string& ambient) {
    std::vector<FinStructure> ps;
    for (const auto& p : patterns) ps.push_back(parse(p));
    Json arr = Json::array();
    for (const auto& c : enumerate_sim_classes(ps, parse(ambient))) arr.push_back(to_json(c));
    return arr.dump();
  }, py::arg("patterns"), py::arg("ambient"));

  m.def("ramsey_check", [](const std::string& c, const std::string& b, const std::string& a, int colors,
                           int threshold, std::uint64_t budget_nodes, bool reduce) {
    RamseyResult r;
    {
      py::gil_scoped_release release;
      r = exhaustive_ramsey_check({parse(c), parse(b), parse(a), colors, threshold}, budget_nodes, reduce);
    }
    return to_json(r).dump();
  }, py::arg("c"), py::arg("b"), py::arg("a"), py::arg("colors") = 2, py::arg("threshold") = 1,
        py::arg("budget") = kDefaultBudget, py::arg("reduce") = true);
}
