#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixedmeans/cli.hpp"
#include "mixedmeans/convexity.hpp"
#include "mixedmeans/error.hpp"
#include "mixedmeans/geometry.hpp"
#include "mixedmeans/verify.hpp"
#include "mixedmeans/weights.hpp"

namespace py = pybind11;
using namespace mixedmeans;

namespace {

PowerSeries to_series(const py::object& f) {
  if (py::isinstance<py::str>(f)) return parse_function_spec(f.cast<std::string>());
  return PowerSeries(f.cast<std::vector<Complex>>());
}

Kind to_kind(const std::string& kind) {
  if (kind == "area") return Kind::Area;
  if (kind == "length") return Kind::Length;
  throw Error(ErrorKind::InvalidInput, "kind must be 'area' or 'length'");
}

py::tuple pair(double value, double error) { return py::make_tuple(value, error); }

py::dict report_dict(const CheckReport& r) {
  py::list ws;
  for (const Witness& w : r.witnesses) {
    py::dict d;
    d["input"] = w.input;
    d["expected"] = w.expected;
    d["got"] = w.got;
    d["tolerance"] = w.tolerance;
    d["relation"] = to_string(w.relation);
    d["violated"] = w.violated();
    ws.append(d);
  }
  py::dict d;
  d["check_id"] = r.check_id;
  d["status"] = to_string(r.status);
  d["witnesses"] = ws;
  d["notes"] = r.notes;
  return d;
}

py::list report_list(const std::vector<CheckReport>& reports) {
  py::list out;
  for (const auto& r : reports) out.append(report_dict(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_mixedmeans, m) {
  m.doc() = "Weighted integral means of mixed areas and lengths of disk images";
  py::register_exception<Error>(m, "MixedMeansError", PyExc_ValueError);
  m.attr("AREA") = "area";
  m.attr("LENGTH") = "length";

  m.def("parse_function", [](const std::string& spec) {
    const PowerSeries s = parse_function_spec(spec);
    return std::vector<Complex>(s.coeffs().begin(), s.coeffs().end());
  });
  m.def("nu_alpha", &nu_alpha, py::arg("alpha"), py::arg("r"));
  m.def("f_lambda", &f_lambda, py::arg("lam"), py::arg("alpha"), py::arg("x"));
  m.def("area", [](const py::object& f, double r) {
    const GeomValue g = area(to_series(f), r);
    return pair(g.value, g.error_bound);
  }, py::arg("f"), py::arg("r"));
  m.def("length", [](const py::object& f, double r) {
    const GeomValue g = length_boundary(to_series(f), r);
    return pair(g.value, g.error_bound);
  }, py::arg("f"), py::arg("r"));
  m.def("mixed_ratio", [](const py::object& f, double r, double beta, const std::string& kind) {
    return mixed_ratio(to_kind(kind), to_series(f), r, beta).value;
  }, py::arg("f"), py::arg("r"), py::arg("beta"), py::arg("kind") = "area");
  m.def("weighted_mean", [](const py::object& f, double alpha, double beta, double r,
                            const std::string& kind, bool quadrature) {
    const MeanValue v = weighted_mean(to_kind(kind), to_series(f), WeightParams(alpha, beta), r, {},
                                      quadrature ? MeanRoute::Quadrature : MeanRoute::Auto);
    return pair(v.value, v.error_bound);
  }, py::arg("f"), py::arg("alpha"), py::arg("beta"), py::arg("r"), py::arg("kind") = "area",
     py::arg("quadrature") = false);
  m.def("weighted_mean_monomial", [](int n, double alpha, double beta, double r, const std::string& kind) {
    const MeanValue v = weighted_mean_monomial(to_kind(kind), n, WeightParams(alpha, beta), r);
    return pair(v.value, v.error_bound);
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("r"), py::arg("kind") = "area");
  m.def("mean_at_one", [](const py::object& f, double alpha, double beta, const std::string& kind) {
    const MeanValue v = mean_at_one(to_kind(kind), to_series(f), WeightParams(alpha, beta));
    return pair(v.value, v.error_bound);
  }, py::arg("f"), py::arg("alpha"), py::arg("beta"), py::arg("kind") = "area");
  m.def("delta", &delta, py::arg("lam"), py::arg("alpha"), py::arg("x"));
  m.def("delta_limit", &delta_limit, py::arg("lam"), py::arg("alpha"));
  m.def("mean_indicator", [](const py::object& f, double alpha, double beta, double x,
                             const std::string& kind) {
    return mean_indicator(to_kind(kind), to_series(f), WeightParams(alpha, beta), x);
  }, py::arg("f"), py::arg("alpha"), py::arg("beta"), py::arg("x"), py::arg("kind") = "area");
  m.def("scan", [](const py::object& f, double alpha, double beta, const std::string& kind, double tol) {
    const PowerSeries s = to_series(f);
    const Kind k = to_kind(kind);
    const WeightParams p(alpha, beta);
    const ConvexityReport rep = scan_indicator(
        [&](double x) { return mean_indicator(k, s, p, x); }, default_scan_grid(), tol);
    py::list grid;
    for (const GridSample& g : rep.grid) grid.append(py::make_tuple(g.x, g.indicator, g.certified_sign));
    py::dict d;
    d["grid"] = grid;
    d["verdict"] = to_string(rep.verdict);
    return d;
  }, py::arg("f"), py::arg("alpha"), py::arg("beta"), py::arg("kind") = "area", py::arg("tol") = 1e-8);
  m.def("univalence", [](const py::object& f, const std::string& criterion, int samples) {
    if (criterion != "wedge" && criterion != "nehari") {
      throw Error(ErrorKind::InvalidInput, "criterion must be 'wedge' or 'nehari'");
    }
    return report_dict(check_univalence(
        criterion == "wedge" ? UnivalenceCriterion::Wedge : UnivalenceCriterion::Nehari, to_series(f),
        samples));
  }, py::arg("f"), py::arg("criterion") = "nehari", py::arg("samples") = 10000);
  m.def("means_table", [](const std::string& f, double alpha, double beta, double r_min, double r_max,
                          int grid) {
    RunConfig c;
    c.command = Command::Means;
    c.function_spec = f;
    c.alpha = alpha;
    c.beta = beta;
    c.r_min = r_min;
    c.r_max = r_max;
    c.grid_points = grid;
    std::ostringstream out, err;
    if (dispatch(c, out, err) != kExitOk) throw Error(ErrorKind::InvalidInput, err.str());
    return out.str();
  }, py::arg("f"), py::arg("alpha"), py::arg("beta"), py::arg("r_min") = 0.01, py::arg("r_max") = 0.99,
     py::arg("grid") = 50);
  m.def("examples", [] {
    std::vector<CheckReport> reports;
    {
      py::gil_scoped_release release;
      reports = reproduce_examples();
    }
    return report_list(reports);
  });
  m.def("verify", [] {
    std::vector<CheckReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_default_suite();
    }
    return report_list(reports);
  });
}
