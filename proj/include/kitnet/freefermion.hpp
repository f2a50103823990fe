#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kitnet/chain.hpp"

namespace kitnet {

// Quadratic (Bogoliubov-de Gennes) form of the chain Hamiltonian:
// H = 1/2 Psi^dag M Psi with Psi = (a_1..a_N, a_1^dag..a_N^dag). For the
// Kitaev chain the constant works out to zero, so the many-body spectrum is
// generated by the eigenvalues of M alone.
struct BdGMatrix {
  Eigen::MatrixXd matrix;  // 2N x 2N, real symmetric
  int n_sites = 0;
};

BdGMatrix bdg_matrix(const ChainSpec& spec);

// The N nonnegative quasiparticle energies (upper half of the +-lambda
// spectrum), ascending.
std::vector<double> bdg_positive_eigenvalues(const BdGMatrix& bdg);

// Unconstrained quadratic ground energy -1/2 sum lambda_m. The two
// parity-sector minima of the same Hamiltonian are this value and this value
// plus the smallest lambda_m.
double bdg_ground_energy(const BdGMatrix& bdg);

// Smallest nonnegative quasiparticle energy.
double min_bdg_gap(const ChainSpec& spec);

// Closed-form chemical potentials of the open chain's single-particle zero
// modes, mu_n = 2 sqrt(w^2 - delta^2) cos(pi n / (N+1)), n = 1..N, sorted
// ascending. For |delta| > |w| the values turn complex: the list is empty and
// real_domain is false.
struct ZeroModePotentials {
  std::vector<double> values;
  bool real_domain = true;
};

ZeroModePotentials majorana_zero_mode_potentials(int n_sites, double hopping,
                                                 double pairing);

}  // namespace kitnet
