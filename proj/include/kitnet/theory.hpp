#pragma once

#include "kitnet/state.hpp"

namespace kitnet {

// mu* = 2 sqrt(w^2 - delta^2), the potential where the periodic chain's
// ground state becomes permutation-homogeneous.
double factorization_potential(double hopping, double pairing);

// theta = arctan sqrt(tan phi), phi = arcsin(gamma/J)/2; the single-site
// rotation angle of the factorized product state.
double factorization_angle(double coupling_sum, double anisotropy);

// Odd-parity projection of the factorized product state, expanded over the
// spin basis. Spin-up corresponds to an occupied site throughout this
// project, so basis labels coincide with occupation labels.
struct FactorizedState {
  VectorXcd amplitudes;  // over the 2^N spin basis, bit = 1 means spin-up
  int n_sites = 0;
  double theta = 0.0;
  // Norm of the literal weight formula before any renormalization; the
  // construction is expected to land on 1 and deviations are reported.
  double raw_norm = 0.0;
};

FactorizedState build_factorized_odd_state(int n_sites, double theta);

// Fermionic image of the spin state under the Jordan-Wigner identification:
// basis labels are preserved, strings act on operators only.
QuantumState jw_image(const FactorizedState& state);

// max over pairs (i,j) of the entrywise max-norm difference between the pair
// reduced matrix and the (0,1) pair's. Zero for pairwise-homogeneous states.
double permutation_invariance_deviation(const QuantumState& state);

}  // namespace kitnet
