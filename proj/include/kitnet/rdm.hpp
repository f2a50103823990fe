#pragma once

#include <Eigen/Dense>

#include "kitnet/state.hpp"

namespace kitnet {

using Matrix2cd = Eigen::Matrix2cd;
using Matrix4cd = Eigen::Matrix4cd;

// Two-site reduced density matrix in the ordered basis
// {|0_i 0_j>, |0_i 1_j>, |1_i 0_j>, |1_i 1_j>}, i < j.
struct PairDensityMatrix {
  Matrix4cd entries;
  int site_i = 0;
  int site_j = 0;
};

struct SiteDensityMatrix {
  Matrix2cd entries;
  int site = 0;
};

// Off-diagonal convention for the pair reduction. The default traces the
// amplitude vector qubit-style in the occupation basis; the fermionic-mode
// variant fills the X entries with string-free correlators <a_i^dag a_j> and
// <a_j a_i> instead, which differ for non-adjacent pairs.
enum class RdmConvention { spin_picture, fermionic_mode };

PairDensityMatrix reduce_to_pair(const QuantumState& state, int i, int j,
                                 RdmConvention convention = RdmConvention::spin_picture);

SiteDensityMatrix reduce_to_site(const QuantumState& state, int i);

// The five independent numbers of the X-shaped pair matrix of a
// definite-parity state. offdiag_hop is entry (2,3) and offdiag_pair entry
// (1,4) of the qubit partial trace (1-based row, column).
struct PairCorrelators {
  double n_i = 0.0;
  double n_j = 0.0;
  double n_ij = 0.0;
  Complex offdiag_hop;
  Complex offdiag_pair;

  Matrix4cd assemble() const;
};

// Fast path for definite-parity states; falls back to the full reduction
// internally when |<P>| is not 1 within tolerance.
PairCorrelators pair_correlators(const QuantumState& state, int i, int j);

// Literal oracle: forms the full 2^N x 2^N density matrix and traces it,
// independent of the amplitude-loop implementation above. Small chains only.
PairDensityMatrix brute_force_pair_rdm(const QuantumState& state, int i, int j,
                                       int max_sites = 10);

}  // namespace kitnet
