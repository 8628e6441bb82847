#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lacost/beta_engine.hpp"
#include "lacost/cost_models.hpp"
#include "lacost/error.hpp"
#include "lacost/grid_topology.hpp"
#include "lacost/mc_validator.hpp"
#include "lacost/savings_analyzer.hpp"
#include "lacost/scenario.hpp"

namespace py = pybind11;
using namespace lacost;

namespace {

Partition partition_for(const CellGrid& grid, const std::string& scheme) {
  return make_partition(grid, PartitionScheme::parse(scheme));
}

py::dict tally_dict(const BoundaryTally& t) {
  const BetaSet b = betas_from_tally(t);
  py::dict d;
  d["algorithm"] = to_string(t.algorithm);
  d["x_total"] = t.x_total;
  d["dot_total"] = t.dot_total;
  d["beta1"] = b.beta1;
  d["beta2"] = b.beta2;
  d["beta21"] = b.beta21;
  d["beta22"] = b.beta22;
  return d;
}

Scenario scenario_from(const std::string& text) {
  std::istringstream in(text);
  Scenario s = Scenario::parse(in);
  s.validate();
  return s;
}

}  // namespace

PYBIND11_MODULE(_lacost, m) {
  m.doc() = "Location management signaling cost models";

  static py::exception<Error> error(m, "LacostError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::setattr(error, "kind", py::str(to_string(e.kind())));
      error(e.what());
    }
  });

  py::enum_<Geometry>(m, "Geometry")
      .value("SQUARE", Geometry::Square)
      .value("HEXAGONAL", Geometry::Hexagonal);

  py::class_<BetaSet>(m, "BetaSet")
      .def_readonly("beta1", &BetaSet::beta1)
      .def_readonly("beta2", &BetaSet::beta2)
      .def_readonly("beta21", &BetaSet::beta21)
      .def_readonly("beta22", &BetaSet::beta22);

  py::class_<NetworkParams>(m, "NetworkParams")
      .def(py::init<>())
      .def_readwrite("v", &NetworkParams::v)
      .def_readwrite("R", &NetworkParams::R)
      .def_readwrite("lambda_t1", &NetworkParams::lambda_t1)
      .def_readwrite("lambda_t2", &NetworkParams::lambda_t2)
      .def_readwrite("lambda_mo", &NetworkParams::lambda_mo)
      .def_readwrite("calls_per_list_update", &NetworkParams::calls_per_list_update)
      .def_readwrite("cost_list_unit", &NetworkParams::cost_list_unit);

  py::class_<SavingsParams>(m, "SavingsParams")
      .def(py::init<>())
      .def_readwrite("cost_update", &SavingsParams::cost_update)
      .def_readwrite("cost_paging_area", &SavingsParams::cost_paging_area)
      .def_readwrite("rate_update", &SavingsParams::rate_update)
      .def_readwrite("rate_paging", &SavingsParams::rate_paging)
      .def_readwrite("cost_next_paging", &SavingsParams::cost_next_paging)
      .def_readwrite("p_inside", &SavingsParams::p_inside)
      .def_readwrite("k", &SavingsParams::k)
      .def_readwrite("e_n", &SavingsParams::e_n)
      .def_readwrite("rc", &SavingsParams::rc)
      .def_readwrite("lambda_sum", &SavingsParams::lambda_sum)
      .def_readwrite("calls_per_list_update", &SavingsParams::calls_per_list_update)
      .def_readwrite("include_list_cost", &SavingsParams::include_list_cost);

  m.def("boundary_adjacency_count",
        [](Geometry g, int size) { return boundary_adjacency_count(build_grid(g, size)); },
        py::arg("geometry"), py::arg("m"));

  m.def("tally",
        [](Geometry g, int size, const std::string& scheme, const std::string& algorithm) {
          const CellGrid grid = build_grid(g, size);
          return tally_dict(tally(grid, partition_for(grid, scheme), parse_algorithm(algorithm)));
        },
        py::arg("geometry"), py::arg("m"), py::arg("scheme") = "quadrants",
        py::arg("algorithm") = "advanced");

  m.def("betas_from_counts", &betas_from_counts, py::arg("x_total"), py::arg("dot_total"));

  m.def("update_cost_cs",
        [](double n, const BetaSet& betas, const NetworkParams& p) {
          return update_cost_cs(p, ByteTable::defaults(), kRadioInterface, n, betas);
        },
        py::arg("N"), py::arg("betas"), py::arg("params") = NetworkParams{});

  m.def("update_cost_as",
        [](double cs, std::vector<double> alphas) { return update_cost_as(cs, ProbabilityList(std::move(alphas))); },
        py::arg("cs_cost"), py::arg("alphas"));

  m.def("paging_cost_cs",
        [](double n, const NetworkParams& p) { return paging_cost_cs(p, ByteTable::defaults(), kRadioInterface, n); },
        py::arg("N"), py::arg("params") = NetworkParams{});

  m.def("paging_cost_as",
        [](double n, std::vector<double> alphas, const std::string& reading, const NetworkParams& p) {
          return paging_cost_as(p, ByteTable::defaults(), kRadioInterface, n, ProbabilityList(std::move(alphas)),
                                parse_reading(reading));
        },
        py::arg("N"), py::arg("alphas"), py::arg("reading") = "principled", py::arg("params") = NetworkParams{});

  m.def("expected_las_paged",
        [](std::vector<double> alphas) { return expected_las_paged(ProbabilityList(std::move(alphas))); },
        py::arg("alphas"));

  m.def("savings", &savings, py::arg("params"));

  m.def("optimum_k",
        [](const SavingsParams& tmpl, int first, int last) {
          const Optimum o = optimum_k(tmpl, {first, last}, Distribution::uniform());
          return py::make_tuple(o.k, o.savings);
        },
        py::arg("params"), py::arg("k_min") = 1, py::arg("k_max") = 30);

  m.def("savings_zero_crossing",
        [](const SavingsParams& tmpl, int first, int last) {
          return savings_zero_crossing(tmpl, {first, last}, Distribution::uniform());
        },
        py::arg("params"), py::arg("k_min") = 1, py::arg("k_max") = 200);

  m.def("walk_beta1",
        [](Geometry g, int size, const std::string& scheme, std::uint64_t steps, std::uint64_t seed) {
          const CellGrid grid = build_grid(g, size);
          CrossingStats s;
          {
            py::gil_scoped_release release;
            s = walk_crossing_stats({grid, partition_for(grid, scheme), steps, seed});
          }
          py::dict d;
          d["moves_total"] = s.moves_total;
          d["crossings_same_vlr"] = s.crossings_same_vlr;
          d["crossings_other_vlr"] = s.crossings_other_vlr;
          d["empirical_beta1"] = s.empirical_beta1;
          d["std_error"] = s.std_error;
          return d;
        },
        py::arg("geometry"), py::arg("m"), py::arg("scheme") = "quadrants", py::arg("steps") = 1'000'000,
        py::arg("seed") = 1);

  m.def("simulate_paging",
        [](double n, std::vector<double> alphas, std::uint64_t trials, std::uint64_t seed) {
          const ProbabilityList list(std::move(alphas));
          PagingSimResult r;
          {
            py::gil_scoped_release release;
            r = simulate_paging(list, NetworkParams{}, ByteTable::defaults(), kRadioInterface, n, trials, seed);
          }
          return py::make_tuple(r.mean, r.std_error);
        },
        py::arg("N"), py::arg("alphas"), py::arg("trials") = 100'000, py::arg("seed") = 1);

  // Scenario-driven commands return the CSV text the CLI would write.
  m.def("run_betas", [](const std::string& scenario) { return cmd_betas(scenario_from(scenario)).str(); },
        py::arg("scenario") = "");
  m.def("run_costs", [](const std::string& scenario) { return cmd_costs(scenario_from(scenario)).str(); },
        py::arg("scenario") = "");
  m.def("run_figure",
        [](int id, const std::string& scenario) { return cmd_figure(scenario_from(scenario), id).str(); },
        py::arg("figure_id"), py::arg("scenario") = "");
  m.def("default_scenario", [] { return Scenario::defaults().dump(); });
}
