#pragma once

#include <Eigen/Dense>
#include <complex>

#include "kitnet/chain.hpp"

namespace kitnet {

using Complex = std::complex<double>;
using VectorXd = Eigen::VectorXd;
using VectorXcd = Eigen::VectorXcd;
using MatrixXd = Eigen::MatrixXd;
using MatrixXcd = Eigen::MatrixXcd;

// Normalized amplitude vector over the 2^N occupation basis, together with
// the eigenpair metadata attached by the solver.
struct QuantumState {
  Eigen::VectorXcd amplitudes;
  double energy = 0.0;
  double parity_expectation = 0.0;
  bool degenerate = false;
  ChainSpec spec;

  int n_sites() const { return spec.n_sites; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
  bool definite_parity(double tol = 1e-8) const {
    return std::abs(std::abs(parity_expectation) - 1.0) < tol;
  }
};

}  // namespace kitnet
