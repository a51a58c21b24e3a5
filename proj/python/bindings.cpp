// _tvbkit: thin pybind11 layer over the report commands. Results cross as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <map>

#include "report.hpp"

namespace py = pybind11;
using namespace tvbkit;

namespace {

using Runner = std::function<Report(const tvb::BundleDocument&, const Options&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"validate", [](const auto& d, const auto&) { return run_validate(d); }},
      {"classify", [](const auto& d, const auto&) { return run_classify(d); }},
      {"eff", run_eff},
      {"nef", run_nef},
      {"bpf", run_bpf},
      {"hilbert-nef", run_hilbert_nef},
      {"fujita-scan", run_fujita_scan},
      {"nobody", run_nobody},
      {"anticanonical", run_anticanonical},
      {"kaneyama", [](const auto& d, const auto&) { return run_kaneyama(d); }},
      {"tangent", [](const auto& d, const auto&) { return run_tangent(d); }},
      {"extend", run_extend},
  };
  return table;
}

std::string report(const std::string& command, const std::string& text, bool force,
                   const std::optional<std::string>& cls, const std::optional<std::vector<int>>& flag,
                   const std::string& with) {
  auto it = runners().find(command);
  if (it == runners().end()) throw tvb::InvalidInput("unknown command '" + command + "'");
  Options opt;
  opt.force = force;
  if (cls) opt.cls = tvb::parse_class(*cls);
  opt.flag = flag;
  opt.with = with;
  tvb::BundleDocument doc = tvb::parse_document(text);
  Report r;
  {
    py::gil_scoped_release nogil;
    r = it->second(doc, opt);
  }
  json out{{"schema", kSchema},
           {"command", command},
           {"certificate", r.certificate},
           {"warnings", r.warnings},
           {"result", stringify_numbers(r.result)},
           {"text", r.text}};
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_tvbkit, m) {
  m.doc() = "Exact computations for toric vector bundles";

  // Held by the module; the raw pointers stay valid for its lifetime.
  static PyObject* invalid = py::exception<tvb::InvalidInput>(m, "InvalidInput", PyExc_ValueError).ptr();
  static PyObject* missing = py::exception<tvb::CertificateMissing>(m, "CertificateMissing", PyExc_RuntimeError).ptr();
  static PyObject* parse_error = py::exception<tvb::ParseError>(m, "ParseError", invalid).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tvb::ParseError& e) {
      py::object err = py::handle(parse_error)(e.what());
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      PyErr_SetObject(parse_error, err.ptr());
    } catch (const tvb::InvalidInput& e) {
      PyErr_SetString(invalid, e.what());
    } catch (const tvb::CertificateMissing& e) {
      PyErr_SetString(missing, e.what());
    }
  });

  m.def("commands", [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : runners()) out.push_back(name);
    return out;
  });
  m.def("report", &report, py::arg("command"), py::arg("text"), py::arg("force") = false,
        py::arg("cls") = py::none(), py::arg("flag") = py::none(), py::arg("with_path") = "");
  m.def("normalize", [](const std::string& text) {
    tvb::BundleDocument doc = tvb::parse_document(text);
    return doc.has_bundle() ? tvb::format_document(doc.bundle()) : tvb::format_fan(doc.fan);
  }, "Reformat a document in canonical layout");
  m.attr("SCHEMA") = kSchema;
}
