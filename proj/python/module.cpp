#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphsq/certify.hpp"
#include "graphsq/enumerate.hpp"
#include "graphsq/families.hpp"
#include "graphsq/iso.hpp"
#include "graphsq/verify.hpp"

namespace py = pybind11;
using namespace graphsq;

namespace {

std::vector<std::string> graph6_list(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(to_graph6(g));
  return out;
}

py::dict radius_dict(const RadiusEvaluation& r) {
  py::dict d;
  d["radius"] = r.radius();
  d["residual"] = r.iterative.residual;
  d["iterations"] = r.iterative.iterations;
  d["lower"] = r.lower();
  d["upper"] = r.upper();
  d["vector"] = r.iterative.vector;
  if (r.exact) {
    std::vector<std::string> poly;
    for (const auto& c : r.exact->charpoly) poly.push_back(c.str());
    d["charpoly"] = poly;
    d["exact_lo"] = r.exact->lo.str();
    d["exact_hi"] = r.exact->hi.str();
    d["integer_value"] = r.exact->integer_value ? py::object(py::int_(r.exact->integer_value->convert_to<long long>()))
                                                : py::object(py::none());
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral radii of graph squares";

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def("power", &power, py::arg("g"), py::arg("k"));
  m.def("diameter", [](const Graph& g) { return diameter(g); });
  m.def("girth", [](const Graph& g) { return girth(g); });
  m.def("degree_sequence", &degree_sequence);

  m.def(
      "spectral_radius",
      [](const Graph& g, double tol, bool exact) {
        EvaluationOptions o;
        o.tolerance = tol;
        o.use_exact = exact;
        return radius_dict(evaluate(g, o));
      },
      py::arg("g"), py::arg("tol") = kDefaultTolerance, py::arg("exact") = false,
      "Spectral radius by power iteration; exact=True adds the isolating interval (order <= 12).");
  m.def(
      "compare_radii",
      [](const Graph& a, const Graph& b) { return std::string(to_string(compare(evaluate(a), evaluate(b)))); },
      "Certified comparison of rho(a) and rho(b): 'less', 'equal', 'greater' or 'unknown'.");

  m.def("path", &path);
  m.def("cycle", &cycle);
  m.def("star", &star);
  m.def("complete", &complete);
  m.def("star_plus", &star_plus);
  m.def("tadpole", &tadpole);
  m.def("cycle_star", &cycle_star, py::arg("n"), py::arg("g"));
  m.def("broom", &broom, py::arg("n"), py::arg("d"), py::arg("i"));
  m.def("spider", &spider, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("family", [](const std::string& spec) { return FamilySpec::parse(spec).build(); });

  m.def("canonical_form", [](const Graph& g) { return py::bytes(canonical_form(g).bytes); });
  m.def("is_isomorphic", &is_isomorphic);
  m.def("contains_subgraph", &contains_subgraph, py::arg("g"), py::arg("h"));

  m.def("all_trees", [](std::size_t n) { return graph6_list(all_trees(n)); });
  m.def(
      "all_unicyclic", [](std::size_t n, std::optional<std::size_t> g) { return graph6_list(all_unicyclic(n, g)); },
      py::arg("n"), py::arg("girth") = py::none());
  m.def("all_trees_with_diameter", [](std::size_t n, std::size_t d) { return graph6_list(all_trees_with_diameter(n, d)); });
  m.def("all_connected", [](std::size_t n) { return graph6_list(all_connected(n)); });

  m.def(
      "minimal_forbidden",
      [](const std::string& cls, const std::string& threshold, std::size_t n_max, bool proper) {
        GraphClass c;
        if (cls == "tree") c = GraphClass::tree;
        else if (cls == "unicyclic") c = GraphClass::unicyclic;
        else throw std::invalid_argument("class must be 'tree' or 'unicyclic'");
        auto f = minimal_forbidden(c, parse_rational(threshold), n_max, proper ? ForbiddenMode::proper : ForbiddenMode::strict);
        return graph6_list(f.graphs);
      },
      py::arg("cls"), py::arg("threshold"), py::arg("n_max"), py::arg("proper") = false);

  m.def("claim_ids", &claim_ids);
  m.def(
      "run_claim",
      [](const std::string& claim, std::optional<std::size_t> n_min, std::optional<std::size_t> n_max,
         std::uint64_t seed, unsigned jobs, std::size_t trials) {
        ClaimRequest q;
        q.claim = claim;
        q.n_min = n_min;
        q.n_max = n_max;
        q.options.seed = seed;
        q.options.jobs = jobs;
        q.options.trials = trials;
        py::gil_scoped_release release;
        return run_claim(q).to_json();
      },
      py::arg("claim"), py::arg("n_min") = py::none(), py::arg("n_max") = py::none(), py::arg("seed") = 1,
      py::arg("jobs") = 1, py::arg("trials") = 500, "Runs a claim check and returns the JSON report text.");
}
