#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sphclass/catalog.hpp"
#include "sphclass/classifier.hpp"
#include "sphclass/cli.hpp"
#include "sphclass/errors.hpp"
#include "sphclass/groups.hpp"
#include "sphclass/weights.hpp"

namespace py = pybind11;
using namespace sphclass;

namespace {

py::object to_py(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

weights::Weight make_weight(const std::string& type, const std::vector<std::int64_t>& coeffs) {
  return weights::Weight(rootsys::SimpleType::parse(type), coeffs);
}

py::dict bindings_dict(const catalog::Bindings& b) {
  py::dict d;
  for (const auto& [k, v] : b) d[py::str(std::string(1, k))] = v;
  return d;
}

py::dict verdict_dict(const catalog::Verdict& v) {
  py::list matches;
  for (const auto& m : v.matches) {
    py::dict d;
    d["id"] = m.entry ? py::object(py::str(m.entry->id)) : py::object(py::none());
    d["citation"] = m.citation();
    d["bindings"] = bindings_dict(m.bindings);
    d["H"] = m.H_instance;
    d["G"] = m.G_instance;
    d["via_isogeny"] = m.via_isogeny;
    d["conjugacy_classes"] = m.conjugacy_classes;
    d["notes"] = m.notes;
    matches.append(d);
  }
  py::dict d;
  d["status"] = catalog::to_string(v.status);
  d["matches"] = matches;
  d["isogeny_trace"] = v.isogeny_trace;
  d["citations"] = v.citations;
  d["caveat"] = v.caveat;
  d["reason"] = v.reason;
  return d;
}

py::list records_list(const std::vector<report::Record>& rs) {
  py::list out;
  for (const auto& r : rs) {
    py::dict d;
    d["claim_id"] = r.claim_id;
    d["anchor"] = r.anchor;
    d["values"] = r.values;
    d["verdict"] = report::to_string(r.verdict);
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spherical subgroups of simple algebraic groups";

  static py::exception<Error> base(m, "SphclassError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", base.ptr());
  static py::exception<AmbiguousDescriptor> ambiguous(m, "AmbiguousDescriptor", base.ptr());
  static py::exception<DatasetIntegrityError> integrity(m, "DatasetIntegrityError", base.ptr());
  static py::exception<OutOfScope> out_of_scope(m, "OutOfScope", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.annotated().c_str());
    } catch (const AmbiguousDescriptor& e) {
      ambiguous(e.what());
    } catch (const DatasetIntegrityError& e) {
      integrity(e.what());
    } catch (const OutOfScope& e) {
      out_of_scope(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.def("normalize", [](const std::string& s) { return groups::parse(s).to_string(); },
        "Parses a descriptor and returns its canonical spelling.");
  m.def("dim", [](const std::string& s) { return groups::dim(groups::parse(s)); });
  m.def("dim_flag", [](const std::string& s) { return groups::dim_flag(groups::parse(s)); });

  m.def("check_eq2", [](const std::string& G, const std::string& H) {
    const auto r = classifier::check_eq2(groups::parse(G), groups::parse(H));
    py::dict d;
    d["passes"] = r.passes;
    d["dim_H"] = r.dim_H;
    d["dim_G/B"] = r.dim_flag_G;
    return d;
  }, py::arg("G"), py::arg("H"));

  m.def("query", [](const std::string& H, const std::string& G, long long p) {
    return verdict_dict(catalog::query(H, G, p));
  }, py::arg("H"), py::arg("G"), py::arg("p") = 0);

  m.def("weyl_dim", [](const std::string& t, const std::vector<std::int64_t>& c) {
    return to_py(weights::weyl_dim(make_weight(t, c)));
  }, py::arg("type"), py::arg("coeffs"));
  m.def("weyl_orbit_size", [](const std::string& t, const std::vector<std::int64_t>& c) {
    return to_py(weights::weyl_orbit_size(make_weight(t, c)));
  }, py::arg("type"), py::arg("coeffs"));
  m.def("weyl_order", [](const std::string& t) { return to_py(rootsys::weyl_order(rootsys::SimpleType::parse(t))); });
  m.def("orbit_filter", [](const std::string& t) { return classifier::lemma6_filter(rootsys::SimpleType::parse(t)); });

  m.def("audit", [](const std::string& suite) {
    if (suite == "eq4") return records_list(classifier::audit_eq4());
    if (suite == "grid") return records_list(classifier::audit_grid());
    if (suite == "tensor") return records_list(classifier::audit_tensor());
    if (suite == "sosp2") return records_list(classifier::audit_sosp2());
    if (suite == "spin7") return records_list(classifier::audit_spin7());
    if (suite == "g2") return records_list(classifier::audit_g2());
    if (suite == "tables") return records_list(catalog::consistency_audit());
    throw py::value_error("unknown suite " + suite);
  }, py::arg("suite"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one command line; returns (exit status, stdout, stderr).");
}
