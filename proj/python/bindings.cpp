#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kitnet/freefermion.hpp"
#include "kitnet/measures.hpp"
#include "kitnet/network.hpp"
#include "kitnet/rdm.hpp"
#include "kitnet/scan.hpp"
#include "kitnet/solver.hpp"
#include "kitnet/theory.hpp"

namespace py = pybind11;
using namespace kitnet;

namespace {

Boundary boundary_from_string(const std::string& name) {
  if (name == "periodic") return Boundary::periodic;
  if (name == "open") return Boundary::open;
  throw DomainError("boundary must be 'periodic' or 'open'");
}

ChainSpec make_spec(int n_sites, double hopping, double chemical_potential,
                    double pairing, const std::string& boundary) {
  ChainSpec spec;
  spec.n_sites = n_sites;
  spec.hopping = hopping;
  spec.chemical_potential = chemical_potential;
  spec.pairing = pairing;
  spec.boundary = boundary_from_string(boundary);
  spec.validate();
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quantum correlation networks for the finite Kitaev chain";

  py::register_exception<CapacityError>(m, "CapacityError");
  py::register_exception<ConvergenceError>(m, "ConvergenceError");
  py::register_exception<SymmetryViolationError>(m, "SymmetryViolationError");
  py::register_exception<InvalidStateError>(m, "InvalidStateError");
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedBoundaryError>(m, "UnsupportedBoundaryError",
                                                   PyExc_ValueError);

  py::class_<ChainSpec>(m, "ChainSpec")
      .def(py::init(&make_spec), py::arg("n_sites"), py::arg("hopping") = 1.0,
           py::arg("chemical_potential") = 0.0, py::arg("pairing") = 0.0,
           py::arg("boundary") = "periodic")
      .def_readonly("n_sites", &ChainSpec::n_sites)
      .def_readonly("hopping", &ChainSpec::hopping)
      .def_readonly("chemical_potential", &ChainSpec::chemical_potential)
      .def_readonly("pairing", &ChainSpec::pairing)
      .def_property_readonly(
          "boundary", [](const ChainSpec& s) { return to_string(s.boundary); })
      .def("__repr__", [](const ChainSpec& s) {
        return "ChainSpec(n_sites=" + std::to_string(s.n_sites) +
               ", mu=" + std::to_string(s.chemical_potential) +
               ", delta=" + std::to_string(s.pairing) + ", " +
               to_string(s.boundary) + ")";
      });

  py::class_<QuantumState>(m, "QuantumState")
      .def_readonly("amplitudes", &QuantumState::amplitudes)
      .def_readonly("energy", &QuantumState::energy)
      .def_readonly("parity_expectation", &QuantumState::parity_expectation)
      .def_readonly("degenerate", &QuantumState::degenerate)
      .def_property_readonly("n_sites", &QuantumState::n_sites)
      .def_property_readonly(
          "parity", [](const QuantumState& s) { return s.parity_expectation >= 0 ? 1 : -1; });

  py::class_<CorrelationNetwork>(m, "CorrelationNetwork")
      .def_readonly("weights", &CorrelationNetwork::weights)
      .def_property_readonly(
          "measure", [](const CorrelationNetwork& n) { return to_string(n.measure); })
      .def_property_readonly("n_nodes", &CorrelationNetwork::n_nodes)
      .def("node_density", &node_density, py::arg("i"))
      .def("densities",
           [](const CorrelationNetwork& n) { return network_report(n).densities; })
      .def("mean_density",
           [](const CorrelationNetwork& n) { return network_report(n).mean_density; })
      .def("clustering", [](const CorrelationNetwork& n) -> py::object {
        const auto c = clustering(n);
        return c ? py::cast(*c) : py::none();
      });

  m.def("ground_state", [](const ChainSpec& spec) { return ground_state(spec); },
        py::arg("spec"), py::call_guard<py::gil_scoped_release>());
  m.def("ground_energy_analytic", &ground_energy_analytic, py::arg("spec"));
  m.def("quasiparticle_spectrum",
        [](const ChainSpec& spec) { return quasiparticle_spectrum(spec).lambdas; },
        py::arg("spec"));
  m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));

  m.def("reduce_to_pair",
        [](const QuantumState& state, int i, int j, const std::string& convention) {
          const auto conv = convention == "fermionic" ? RdmConvention::fermionic_mode
                                                      : RdmConvention::spin_picture;
          return Matrix4cd(reduce_to_pair(state, i, j, conv).entries);
        },
        py::arg("state"), py::arg("i"), py::arg("j"),
        py::arg("convention") = "spin");
  m.def("reduce_to_site",
        [](const QuantumState& state, int i) {
          return Matrix2cd(reduce_to_site(state, i).entries);
        },
        py::arg("state"), py::arg("i"));

  m.def("von_neumann_entropy",
        [](const MatrixXcd& rho, const std::string& base) {
          return von_neumann_entropy(
              rho, base == "base2" ? LogBase::base2 : LogBase::natural);
        },
        py::arg("rho"), py::arg("log_base") = "natural");
  m.def("mutual_information",
        [](const QuantumState& s, int i, int j) { return mutual_information(s, i, j); },
        py::arg("state"), py::arg("i"), py::arg("j"));
  m.def("concurrence", [](const Matrix4cd& rho) { return concurrence(rho); },
        py::arg("rho"));
  m.def("l1_coherence", [](const MatrixXcd& rho) { return l1_coherence(rho); },
        py::arg("rho"));

  m.def("build_network",
        [](const QuantumState& state, const std::string& measure,
           const std::string& normalization) {
          NetworkBuildOptions opts;
          opts.normalization = normalization == "raw" ? Normalization::raw
                                                      : Normalization::max_normalized;
          return build_network(state, measure_from_string(measure), opts);
        },
        py::arg("state"), py::arg("measure") = "concurrence",
        py::arg("normalization") = "max_normalized",
        py::call_guard<py::gil_scoped_release>());

  m.def("zero_mode_potentials",
        [](int n_sites, double hopping, double pairing) {
          const auto zm = majorana_zero_mode_potentials(n_sites, hopping, pairing);
          return py::make_tuple(zm.values, zm.real_domain);
        },
        py::arg("n_sites"), py::arg("hopping") = 1.0, py::arg("pairing") = 0.0);
  m.def("min_bdg_gap", &min_bdg_gap, py::arg("spec"));

  m.def("factorization_potential", &factorization_potential, py::arg("hopping"),
        py::arg("pairing"));
  m.def("factorization_angle", &factorization_angle, py::arg("coupling_sum"),
        py::arg("anisotropy"));
  m.def("factorized_odd_state",
        [](int n_sites, double theta) {
          return jw_image(build_factorized_odd_state(n_sites, theta));
        },
        py::arg("n_sites"), py::arg("theta"));
  m.def("permutation_invariance_deviation", &permutation_invariance_deviation,
        py::arg("state"), py::call_guard<py::gil_scoped_release>());

  m.def("detect_parity_switches",
        [](const ChainSpec& chain, double mu_lo, double mu_hi, int points,
           double resolution) {
          SweepSpec spec;
          spec.chain = chain;
          spec.mu_lo = mu_lo;
          spec.mu_hi = mu_hi;
          spec.base_points = points;
          spec.resolution = resolution;
          spec.measures = {MeasureKind::mutual_information};
          const auto records = run_sweep(spec);
          const auto report = detect_discontinuities(records, spec);
          std::vector<double> locations;
          for (const auto& d : report.discontinuities)
            if (d.parity_switch &&
                (locations.empty() ||
                 std::abs(locations.back() - d.mu_location) > resolution))
              locations.push_back(d.mu_location);
          return locations;
        },
        py::arg("chain"), py::arg("mu_lo"), py::arg("mu_hi"),
        py::arg("points") = 121, py::arg("resolution") = 1e-3,
        py::call_guard<py::gil_scoped_release>());

  m.def("locate_c1_point",
        [](const ChainSpec& chain, double pairing, const std::string& measure) {
          const C1Point p =
              locate_c1_point(chain, pairing, measure_from_string(measure));
          py::dict d;
          d["found"] = p.found;
          d["mu_location"] = p.mu_location;
          d["clustering"] = p.clustering;
          d["predicted_mu_star"] = p.predicted_mu_star;
          return d;
        },
        py::arg("chain"), py::arg("pairing"), py::arg("measure") = "concurrence");
}
