#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adlv/io.hpp"

namespace py = pybind11;
using namespace adlv;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string invariants(const std::string& group, const std::string& mu, const std::string& b) {
  Group g(preset(group));
  Elem m = parse_coweight(g, mu);
  return to_json(invariant_report(g, m, parse_b(g, b))).dump();
}

std::string bgmu_json(const std::string& group, const std::string& mu) {
  Group g(preset(group));
  Elem m = parse_coweight(g, mu);
  Json classes = Json::array();
  for (const auto& c : bgmu(g, m)) classes.push_back(to_json(c));
  return Json{{"schema", kSchemaVersion}, {"group", g.name()}, {"mu", m}, {"classes", classes}}.dump();
}

std::string stratification(const std::string& group, const std::string& mu) {
  Group g(preset(group));
  return to_json(newton_stratification(g, parse_coweight(g, mu))).dump();
}

std::vector<std::string> strata(const std::string& group, const std::vector<std::string>& mus, Int kappa) {
  Group g(preset(group));
  std::vector<Elem> ms;
  for (const auto& s : mus) ms.push_back(parse_coweight(g, s));
  auto setup = TwistedSetup::standard(g, static_cast<int>(ms.size()), kappa);
  std::vector<std::string> out;
  for (const auto& l : enumerate_strata(setup, ms)) out.push_back(to_json(l).dump());
  return out;
}

Int weight_mult(const std::string& group, const std::string& mu, const std::string& lambda) {
  Group g(preset(group));
  return weight_multiplicity(g, parse_coweight(g, mu), parse_coweight(g, lambda));
}

Int path_count(const std::string& group, const std::string& mu, const std::string& lambda) {
  Group g(preset(group));
  return littelmann_count(g, parse_coweight(g, mu), parse_coweight(g, lambda));
}

}  // namespace

PYBIND11_MODULE(_adlv, m) {
  m.doc() = "Invariants of affine Deligne-Lusztig varieties";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.def("presets", &preset_catalog, py::arg("max_rank") = 4);
  m.def("invariants", &invariants, py::arg("group"), py::arg("mu"), py::arg("b"));
  m.def("bgmu", &bgmu_json, py::arg("group"), py::arg("mu"));
  m.def("stratification", &stratification, py::arg("group"), py::arg("mu"));
  m.def("strata", &strata, py::arg("group"), py::arg("mus"), py::arg("kappa"));
  m.def("weight_multiplicity", &weight_mult, py::arg("group"), py::arg("mu"), py::arg("weight"));
  m.def("littelmann_count", &path_count, py::arg("group"), py::arg("mu"), py::arg("weight"));
}
