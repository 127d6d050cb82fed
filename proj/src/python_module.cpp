#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geodex/io.hpp"

namespace py = pybind11;
using namespace geodex;
using io::json;

namespace {

GeodesicModel model_of(const std::string& s) { return io::model_from(json::parse(s)); }
io::Config config_of(const std::string& s) { return io::config_from(json::parse(s)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact index iteration and case elimination; JSON strings in and out";

  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<io::FormatError>(m, "FormatError", PyExc_ValueError);

  m.attr("SCHEMA") = io::kSchema;
  m.attr("__version__") = io::kToolVersion;
  m.def("backend", &io::backend_id);

  m.def("betti", [](int n, const std::string& q) { return betti(n, Int(q)); }, py::arg("n"), py::arg("q"));
  m.def("alternating_sum", [](int n, const std::string& q) { return alternating_sum(n, Int(q)).get_str(); },
        py::arg("n"), py::arg("q_max"));
  m.def("constant_B", [](int n) { return rat_str(constant_B(n)); }, py::arg("n"));

  m.def("validate", [](const std::string& model) { return validate(model_of(model).decomposition); });
  m.def("index_at", [](const std::string& model, const std::string& k) {
    return index_at(model_of(model), Int(k)).get_str();
  });
  m.def("nullity_at", [](const std::string& model, const std::string& k) { return nullity_at(model_of(model), Int(k)); });
  m.def("mean_index", [](const std::string& model) { return mean_index(model_of(model)).str(); });
  m.def("minimal_period", [](const std::string& model) { return minimal_period(model_of(model)).get_str(); });
  m.def("index_profile", [](const std::string& model, long m_max) {
    return io::to_json(index_profile(model_of(model), m_max)).dump();
  });
  m.def("classify_case", [](const std::string& model) { return classify_case(model_of(model)); });

  m.def("mean_index_identity", [](const std::string& config) {
    io::Config c = config_of(config);
    return io::to_json(mean_index_identity(c.geodesics, c.n)).dump();
  });

  m.def(
      "find_jump",
      [](const std::string& config, const std::string& eps, const std::string& n_bound) {
        io::Config c = config_of(config);
        JumpOptions jo;
        if (!eps.empty()) jo.eps = io::rat_from(json(eps));
        jo.N_bound = Int(n_bound);
        JumpSearch js;
        {
          py::gil_scoped_release release;
          js = find_jump(c.models(), c.n, jo);
        }
        json out = {{"found", js.cert.has_value()}};
        if (js.cert) {
          out["certificate"] = io::to_json(*js.cert);
          out["verified"] = verify_jump(c.models(), c.n, *js.cert).ok;
        }
        return out.dump();
      },
      py::arg("config"), py::arg("eps") = "", py::arg("n_bound") = "1000000");

  m.def(
      "eliminate",
      [](const std::string& c1, const std::string& c2, const std::string& eps) {
        GeodesicModel g1 = model_of(c1), g2 = model_of(c2);
        EliminateOptions opt;
        if (!eps.empty()) opt.eps = io::rat_from(json(eps));
        EliminationReport rep;
        {
          py::gil_scoped_release release;
          rep = eliminate(g1, g2, opt);
        }
        return io::to_json(rep).dump();
      },
      py::arg("c1"), py::arg("c2"), py::arg("eps") = "");

  m.def(
      "sweep",
      [](const std::string& grid_toml, unsigned jobs, bool details) {
        SweepGrid grid = io::grid_from_toml(grid_toml);
        grid.jobs = jobs;
        SweepSummary s;
        {
          py::gil_scoped_release release;
          s = sweep(grid);
        }
        return io::to_json(s, details).dump();
      },
      py::arg("grid_toml"), py::arg("jobs") = 1, py::arg("details") = false);
}
