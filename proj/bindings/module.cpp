#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnpwalk/experiments.hpp"
#include "gnpwalk/oracle.hpp"

namespace py = pybind11;
using namespace gnpwalk;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Random-walk hitting-time statistics on G(n,p) graphs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<EmptyGraphError>(m, "EmptyGraphError", base);
  py::register_exception<IsolatedVertexError>(m, "IsolatedVertexError", base);
  py::register_exception<DisconnectedError>(m, "DisconnectedError", base);
  py::register_exception<SameVertexError>(m, "SameVertexError", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<RangeError>(m, "RangeError", base);
  py::register_exception<DuplicateEdgeError>(m, "DuplicateEdgeError", base);
  py::register_exception<SelfLoopError>(m, "SelfLoopError", base);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
  py::register_exception<SingularSystemError>(m, "SingularSystemError", base);
  py::register_exception<GapZeroDivergenceError>(m, "GapZeroDivergenceError", base);
  py::register_exception<DegenerateScalingError>(m, "DegenerateScalingError", base);
  py::register_exception<CRangeError>(m, "CRangeError", base);
  py::register_exception<NumericalError>(m, "NumericalError", base);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edges(n, edges);
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("connected", &Graph::connected)
      .def_property_readonly("degrees", [](const Graph& g) { return g.degrees(); })
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors",
           [](const Graph& g, int v) {
             const auto nbrs = g.neighbors(v);
             return std::vector<int>(nbrs.begin(), nbrs.end());
           },
           py::arg("v"))
      .def("edges", &Graph::edges)
      .def("min_degree", &Graph::min_degree)
      .def("max_degree", &Graph::max_degree)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def(
      "sample_gnp",
      [](int n, double p, std::uint64_t seed) { return sample_gnp({n, p, seed}); },
      py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("is_connected", &is_connected, py::arg("g"));
  m.def("stationary_distribution", &stationary_distribution, py::arg("g"));
  m.def("read_edge_list", &read_edge_list, py::arg("text"));
  m.def("read_edge_list_file", &read_edge_list_file, py::arg("path"));
  m.def("write_edge_list", &write_edge_list, py::arg("g"));

  py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
      .def_readonly("eigenvalues", &SpectralDecomposition::eigenvalues)
      .def_readonly("eigenvectors", &SpectralDecomposition::eigenvectors)
      .def_readonly("perron_aligned", &SpectralDecomposition::perron_aligned)
      .def("subdominant_modulus", &SpectralDecomposition::subdominant_modulus);

  py::class_<AdjacencySpectrum>(m, "AdjacencySpectrum")
      .def_property_readonly("nu", &AdjacencySpectrum::nu)
      .def_property_readonly("has_mu_scaled", &AdjacencySpectrum::has_mu_scaled)
      .def_property_readonly("mu_scaled", &AdjacencySpectrum::mu_scaled);

  py::class_<Lambda2Relation>(m, "Lambda2Relation")
      .def_readonly("lhs", &Lambda2Relation::lhs)
      .def_readonly("rhs", &Lambda2Relation::rhs)
      .def_readonly("complete_graph", &Lambda2Relation::complete_graph);

  py::class_<SpectralIdentities>(m, "SpectralIdentities")
      .def_readonly("perron_orthogonality", &SpectralIdentities::perron_orthogonality)
      .def_readonly("column_mass", &SpectralIdentities::column_mass)
      .def_readonly("tail_mass", &SpectralIdentities::tail_mass)
      .def_readonly("weighted_tail_mass", &SpectralIdentities::weighted_tail_mass)
      .def_readonly("perron_entry", &SpectralIdentities::perron_entry);

  m.def("build_normalized_adjacency", &build_normalized_adjacency, py::arg("g"));
  m.def("eigendecompose", &eigendecompose, py::arg("b"));
  m.def("perron_vector_check", &perron_vector_check, py::arg("g"), py::arg("d"));
  m.def("spectral_gap", &spectral_gap, py::arg("d"));
  m.def("remainder_norm", &remainder_norm, py::arg("g"), py::arg("p"));
  m.def("lambda2_relation", &lambda2_relation, py::arg("g"), py::arg("p"));
  m.def("adjacency_spectrum", &adjacency_spectrum, py::arg("g"), py::arg("p"));
  m.def("check_spectral_identities", &check_spectral_identities, py::arg("g"), py::arg("d"));

  py::class_<Bounds>(m, "Bounds")
      .def_readonly("lower", &Bounds::lower)
      .def_readonly("upper", &Bounds::upper);

  m.def("hitting_time_spectral", &hitting_time_spectral, py::arg("g"), py::arg("d"), py::arg("i"),
        py::arg("j"));
  m.def("random_target_time", &random_target_time, py::arg("g"), py::arg("d"), py::arg("j"));
  m.def("random_target_times", &random_target_times, py::arg("g"), py::arg("d"));
  m.def("random_start_time", &random_start_time, py::arg("d"));
  m.def("commute_time", &commute_time, py::arg("g"), py::arg("d"), py::arg("i"), py::arg("j"));
  m.def("target_time_bounds", &target_time_bounds, py::arg("g"), py::arg("d"), py::arg("j"));
  m.def("commute_time_bounds", &commute_time_bounds, py::arg("g"), py::arg("d"), py::arg("i"),
        py::arg("j"));

  py::class_<WalkEstimate>(m, "WalkEstimate")
      .def_readonly("mean", &WalkEstimate::mean)
      .def_readonly("std_error", &WalkEstimate::std_error)
      .def_readonly("samples", &WalkEstimate::samples)
      .def_readonly("max_steps_hit", &WalkEstimate::max_steps_hit);

  m.def("hitting_times_linear", &hitting_times_linear, py::arg("g"), py::arg("j"));
  m.def("random_target_time_oracle", &random_target_time_oracle, py::arg("g"), py::arg("j"));
  m.def("default_max_steps", &default_max_steps, py::arg("n"));
  m.def("simulate_walk", &simulate_walk, py::arg("g"), py::arg("i"), py::arg("j"),
        py::arg("samples"), py::arg("seed"), py::arg("max_steps"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());

  py::class_<PRule>(m, "PRule")
      .def_static("constant", &PRule::constant, py::arg("p"))
      .def_static("threshold", &PRule::threshold, py::arg("kappa"))
      .def_static("polylog", &PRule::polylog, py::arg("beta"))
      .def_static("parse", &PRule::parse, py::arg("text"))
      .def("__call__", &PRule::operator(), py::arg("n"))
      .def("__repr__", [](const PRule& r) { return "PRule(" + r.str() + ")"; });

  py::class_<SweepPlan>(m, "SweepPlan")
      .def(py::init([](std::vector<int> n_grid, const PRule& p_rule, int replicates,
                       std::uint64_t base_seed, int resample_limit) {
             SweepPlan plan{std::move(n_grid), p_rule, replicates, base_seed, resample_limit};
             plan.validate();
             return plan;
           }),
           py::arg("n_grid"), py::arg("p_rule"), py::arg("replicates"), py::arg("base_seed"),
           py::arg("resample_limit") = 100)
      .def_readonly("n_grid", &SweepPlan::n_grid)
      .def_readonly("replicates", &SweepPlan::replicates)
      .def_readonly("base_seed", &SweepPlan::base_seed)
      .def_readonly("resample_limit", &SweepPlan::resample_limit);

  py::class_<SweepRecord>(m, "SweepRecord")
      .def_readonly("n", &SweepRecord::n)
      .def_readonly("p", &SweepRecord::p)
      .def_readonly("seed", &SweepRecord::seed)
      .def_readonly("replicate", &SweepRecord::replicate)
      .def_readonly("connected", &SweepRecord::connected)
      .def_readonly("edge_count", &SweepRecord::edge_count)
      .def_readonly("min_degree", &SweepRecord::min_degree)
      .def_readonly("max_degree", &SweepRecord::max_degree)
      .def_readonly("ratio_max_dev", &SweepRecord::ratio_max_dev)
      .def_readonly("lambda2_abs", &SweepRecord::lambda2_abs)
      .def_readonly("lambdaN_abs", &SweepRecord::lambdaN_abs)
      .def_readonly("gap", &SweepRecord::gap)
      .def_readonly("nu2_over_Np", &SweepRecord::nu2_over_np)
      .def_readonly("remainder_norm", &SweepRecord::remainder_norm)
      .def_readonly("H_target_min_over_n", &SweepRecord::h_target_min_over_n)
      .def_readonly("H_target_mean_over_n", &SweepRecord::h_target_mean_over_n)
      .def_readonly("H_target_max_over_n", &SweepRecord::h_target_max_over_n)
      .def_readonly("H_start_over_n", &SweepRecord::h_start_over_n)
      .def_readonly("resamples_used", &SweepRecord::resamples_used);

  py::class_<DegreeConcentrationResult>(m, "DegreeConcentrationResult")
      .def_readonly("lower_fail_rate", &DegreeConcentrationResult::lower_fail_rate)
      .def_readonly("upper_fail_rate", &DegreeConcentrationResult::upper_fail_rate)
      .def_readonly("bound_lower", &DegreeConcentrationResult::bound_lower)
      .def_readonly("bound_upper", &DegreeConcentrationResult::bound_upper)
      .def_readonly("observations", &DegreeConcentrationResult::observations)
      .def_readonly("passed", &DegreeConcentrationResult::pass);

  py::class_<EdgeConcentrationResult>(m, "EdgeConcentrationResult")
      .def_readonly("fail_rate", &EdgeConcentrationResult::fail_rate)
      .def_readonly("bound", &EdgeConcentrationResult::bound)
      .def_readonly("replicates", &EdgeConcentrationResult::replicates)
      .def_readonly("passed", &EdgeConcentrationResult::pass);

  py::class_<GapTrendResult>(m, "GapTrendResult")
      .def_readonly("n_values", &GapTrendResult::n_values)
      .def_readonly("median_lambda2", &GapTrendResult::median_lambda2)
      .def_readonly("envelope", &GapTrendResult::envelope)
      .def_readonly("passed", &GapTrendResult::pass)
      .def_readonly("all_disconnected", &GapTrendResult::all_disconnected);

  py::class_<CommutePairStats>(m, "CommutePairStats")
      .def_readonly("min_over_n", &CommutePairStats::min_over_n)
      .def_readonly("max_over_n", &CommutePairStats::max_over_n)
      .def_readonly("bounds_hold", &CommutePairStats::bounds_hold);

  m.def("degree_concentration_check", &degree_concentration_check, py::arg("n"), py::arg("p"),
        py::arg("c"), py::arg("replicates"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());
  m.def("edge_concentration_check", &edge_concentration_check, py::arg("n"), py::arg("p"),
        py::arg("c"), py::arg("replicates"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());
  m.def("ratio_check", &ratio_check, py::arg("g"));
  m.def(
      "run_sweep",
      [](const SweepPlan& plan, unsigned threads) { return run_sweep(plan, threads); },
      py::arg("plan"), py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("gap_trend_check", &gap_trend_check, py::arg("records"));
  m.def("commute_pair_stats", &commute_pair_stats, py::arg("g"), py::arg("d"), py::arg("pairs"),
        py::arg("seed"));
  m.def("sweep_csv", [](const std::vector<SweepRecord>& records) {
    std::string out = sweep_csv_header() + "\n";
    for (const auto& rec : records) out += sweep_record_csv(rec) + "\n";
    return out;
  });

#ifdef GNPWALK_VERSION
  m.attr("__version__") = GNPWALK_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
