#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kitnet/network.hpp"
#include "kitnet/solver.hpp"

namespace kitnet {

// One mu-sweep over a fixed chain template.
struct SweepSpec {
  ChainSpec chain;  // chemical_potential ignored; replaced per grid point
  double mu_lo = 0.0;
  double mu_hi = 3.0;
  int base_points = 121;
  double resolution = 1e-3;  // bisection target for detected switches
  std::vector<MeasureKind> measures = {MeasureKind::concurrence};
  NetworkBuildOptions network_options;
  SolverConfig solver;
  unsigned workers = 0;  // 0: default_worker_count()
};

struct MeasureMetrics {
  MeasureKind measure = MeasureKind::concurrence;
  std::optional<double> clustering;
  double mean_density = 0.0;
  std::vector<double> densities;
};

struct SweepRecord {
  double mu = 0.0;
  int parity = 0;
  double energy = 0.0;
  bool degenerate = false;
  std::vector<MeasureMetrics> metrics;
  std::string error;  // per-point solver failure, point flagged not fatal

  bool ok() const { return error.empty(); }
};

std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

// A located ground-state symmetry change (or advisory metric anomaly).
struct Discontinuity {
  double mu_location = 0.0;
  double resolution = 0.0;
  int parity_before = 0;
  int parity_after = 0;
  bool parity_switch = true;   // false: metric anomaly without parity data
  std::string metric;          // "<measure>:clustering" or "<measure>:mean_density"
  double jump_size = 0.0;      // metric change across the bracketing grid interval
  std::optional<double> matched_prediction;
};

struct PredictionStatus {
  std::string label;  // "mu_c", "mu_star", "mu_1", ...
  double value = 0.0;
  bool matched = false;
};

struct CriticalPointReport {
  std::vector<Discontinuity> discontinuities;
  std::vector<PredictionStatus> predictions;
};

// Primary detector: parity sign changes between adjacent grid points, refined
// by bisection to spec.resolution. Secondary: metric jumps above jump_factor
// times the median adjacent change, reported as non-parity anomalies.
CriticalPointReport detect_discontinuities(const std::vector<SweepRecord>& records,
                                           const SweepSpec& spec,
                                           double jump_factor = 10.0);

struct C1Point {
  bool found = false;
  double mu_location = 0.0;
  double clustering = 0.0;
  double predicted_mu_star = 0.0;  // 2 sqrt(w^2 - delta^2) when real
};

// Locates the clustering maximum over mu in (0, 2w); reports not-found when
// the refined maximum stays below 1 - 1e-3.
C1Point locate_c1_point(const ChainSpec& chain_template, double pairing,
                        MeasureKind measure, const SweepSpec& scan_defaults = {});

struct FidelityPoint {
  double mu = 0.0;
  double fidelity = 0.0;
};

std::vector<FidelityPoint> fidelity_sweep(double reference_mu, double mu_lo,
                                          double mu_hi, int points,
                                          const ChainSpec& chain_template,
                                          unsigned workers = 0);

}  // namespace kitnet
