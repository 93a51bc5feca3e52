#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnm/alpha.hpp"
#include "gnm/errors.hpp"
#include "gnm/extended.hpp"
#include "gnm/graph.hpp"
#include "gnm/prediction.hpp"
#include "gnm/pw_enum.hpp"
#include "gnm/reports.hpp"
#include "gnm/sampling.hpp"
#include "gnm/verify.hpp"

namespace py = pybind11;
using namespace gnm;

namespace {

// Reports already have a stable JSON form; hand Python the parsed dict.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

CandidatePair make_pair_arg(std::vector<int> K, std::vector<Edge> M) {
  for (auto& [u, v] : M)
    if (u > v) std::swap(u, v);
  return {std::move(K), std::move(M)};
}

py::dict pair_dict(const CandidatePair& c) {
  py::dict d;
  d["K"] = c.K;
  d["M"] = c.M;
  d["order"] = c.order();
  return d;
}

}  // namespace

PYBIND11_MODULE(_gnm, m) {
  m.doc() = "Exact independence numbers and first-moment predictions for G(n, m)";

  static py::exception<BudgetExceeded> budget_exc(m, "BudgetExceeded", PyExc_RuntimeError);
  static py::exception<NotMaximum> not_max_exc(m, "NotMaximum", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const BudgetExceeded& e) {
      py::object err = py::reinterpret_borrow<py::object>(budget_exc.ptr())(e.what());
      err.attr("best_found") = e.best_found();
      PyErr_SetObject(budget_exc.ptr(), err.ptr());
    } catch (const NotMaximum& e) {
      py::object err = py::reinterpret_borrow<py::object>(not_max_exc.ptr())(e.what());
      err.attr("larger_set") = e.larger_set();
      PyErr_SetObject(not_max_exc.ptr(), err.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return make_graph(n, edges); }), py::arg("n"),
           py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")"; });

  m.def("complement", &complement);
  m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& s) { return induced_subgraph(g, s); });
  m.def("is_independent", [](const Graph& g, const std::vector<int>& s) { return is_independent(g, s); });

  m.def("sample_gnm", [](int n, std::int64_t edges, std::uint64_t seed, std::uint64_t stream) {
    return sample_gnm(n, edges, {seed, stream});
  }, py::arg("n"), py::arg("m"), py::arg("seed") = 0, py::arg("stream") = 0);
  m.def("sample_gnp", [](int n, double p, std::uint64_t seed, std::uint64_t stream) {
    return sample_gnp(n, p, {seed, stream});
  }, py::arg("n"), py::arg("p"), py::arg("seed") = 0, py::arg("stream") = 0);

  m.def("alpha_exact", [](const Graph& g, std::uint64_t budget) {
    AlphaResult r;
    {
      py::gil_scoped_release release;
      r = alpha_exact(g, {budget});
    }
    return to_python(to_json(r));
  }, py::arg("graph"), py::arg("budget") = AlphaOptions{}.node_budget);
  m.def("alpha_bruteforce", [](const Graph& g) { return to_python(to_json(alpha_bruteforce(g))); });

  m.def("is_extended_ind_set", [](const Graph& g, std::vector<int> K, std::vector<Edge> M) {
    return is_extended_ind_set(g, make_pair_arg(std::move(K), std::move(M)));
  }, py::arg("graph"), py::arg("K"), py::arg("M") = std::vector<Edge>{});
  m.def("classify_pair", [](const Graph& g, std::vector<int> K, std::vector<Edge> M) {
    const VariableFlags f = classify_pair(g, make_pair_arg(std::move(K), std::move(M)));
    py::dict d;
    d["U"] = f.U;
    d["W"] = f.W;
    d["X"] = f.X;
    d["Y"] = f.Y;
    d["Z"] = f.Z;
    return d;
  }, py::arg("graph"), py::arg("K"), py::arg("M") = std::vector<Edge>{});
  m.def("extend_from_mis", [](const Graph& g, const std::vector<int>& S) { return pair_dict(extend_from_mis(g, S)); });
  m.def("max_extended_order", [](const Graph& g, const std::string& mode) {
    if (mode != "brute" && mode != "construct") throw InputError("mode must be brute or construct");
    const auto r = max_extended_order(g, mode == "brute" ? ExtendedMode::brute : ExtendedMode::construct);
    return pair_dict(r.witness);
  }, py::arg("graph"), py::arg("mode") = "construct");
  m.def("is_augmented_ind_set", [](const Graph& g, const std::vector<int>& K) { return is_augmented_ind_set(g, K); });
  m.def("count_variables", [](const Graph& g, int k, int r) { return to_python(to_json(count_variables(g, k, r))); });

  m.def("predict", [](std::int64_t n, std::int64_t edges, double eps) {
    return to_python(to_json(predict(Params(n, edges, eps))));
  }, py::arg("n"), py::arg("m"), py::arg("eps") = 0.1);
  m.def("log_expected_ind_sets", [](std::int64_t n, std::int64_t edges, std::int64_t k) {
    return static_cast<double>(expected_ind_sets(Params(n, edges), k).log_value());
  });
  m.def("log_x_prime", [](std::int64_t n, std::int64_t edges, std::int64_t k, std::int64_t r) {
    return static_cast<double>(x_prime(Params(n, edges), k, r).log_value());
  });
  m.def("k_vanilla", [](std::int64_t n, std::int64_t edges, double eps) { return k_vanilla(Params(n, edges, eps)); },
        py::arg("n"), py::arg("m"), py::arg("eps") = 0.1);
  m.def("k_zero", [](std::int64_t n, std::int64_t edges, double eps) { return k_zero(Params(n, edges, eps)); },
        py::arg("n"), py::arg("m"), py::arg("eps") = 0.1);
  m.def("phi", &phi);

  m.def("trunc_pmf", &trunc_pmf);
  m.def("solve_lambda_c", &solve_lambda_c);
  m.def("eta_bar", &eta_bar);
  m.def("count_min2_matrices", [](std::int64_t beta, std::int64_t gamma, std::int64_t kappa, std::uint64_t budget) {
    return to_python(to_json(count_min2_matrices(beta, gamma, kappa, {budget})));
  }, py::arg("beta"), py::arg("gamma"), py::arg("kappa"), py::arg("exact_budget") = EnumOptions{}.exact_budget);
  m.def("phi_exact_mixture", [](std::int64_t n, std::int64_t edges, std::int64_t k, std::int64_t r) {
    return phi_exact_mixture(n, edges, k, r);
  });

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, std::uint64_t seed) {
    SuiteReport rep;
    {
      py::gil_scoped_release release;
      rep = run_suite(name, seed);
    }
    return to_python(to_json(rep));
  }, py::arg("name"), py::arg("seed") = 0);
}
