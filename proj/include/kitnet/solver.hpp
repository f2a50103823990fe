#pragma once

#include <vector>

#include "kitnet/operators.hpp"
#include "kitnet/state.hpp"

namespace kitnet {

struct LanczosOptions {
  int max_iterations = 600;
  double eigenvalue_shift_tol = 1e-13;
  double residual_tol = 1e-10;
  // Sector dimensions at or below this are solved densely.
  int dense_cutoff = 128;
};

struct SolverConfig {
  LanczosOptions lanczos;
  // Two sector energies closer than this (times max(1,|E|)) are reported as a
  // degenerate ground state; the odd sector wins the tie deterministically.
  double degeneracy_tol = 1e-10;
};

// Lowest eigenpair of one parity sector.
struct SectorGround {
  double energy = 0.0;
  VectorXd vector;  // sector coordinates
  int iterations = 0;
};

SectorGround solve_sector_ground(const SectorOperator& sector,
                                 const LanczosOptions& opts = {});

// Global ground state: both parity sectors solved independently, lower energy
// wins, odd sector wins ties. The result is cross-checked against the
// quadratic-form ground energy and retried with a perturbed Krylov seed if
// the check fails.
QuantumState ground_state(const ChainSpec& spec, const SolverConfig& cfg = {});

// Analytic quasiparticle energies of the periodic chain.
struct QuasiparticleSpectrum {
  std::vector<double> lambdas;   // Lambda_k
  std::vector<double> epsilons;  // epsilon_k
  std::vector<double> deltas;    // |Delta_k|
};

QuasiparticleSpectrum quasiparticle_spectrum(const ChainSpec& spec);

// -1/2 sum_k Lambda_k (periodic boundary only).
double ground_energy_analytic(const ChainSpec& spec);

// |<a|b>|, symmetric, gauge-free.
double fidelity(const QuantumState& a, const QuantumState& b);

// Dense oracles for small chains (independent verification path).
std::vector<double> dense_full_spectrum(const ManyBodyOperator& op,
                                        int max_sites = 10);
QuantumState dense_ground_state(const ChainSpec& spec, int max_sites = 10);

}  // namespace kitnet
