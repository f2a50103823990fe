#include "kitnet/freefermion.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "kitnet/errors.hpp"

namespace kitnet {

BdGMatrix bdg_matrix(const ChainSpec& spec) {
  spec.validate(64);  // single-particle level: no 2^N blowup
  const int n = spec.n_sites;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);  // hopping block
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);  // pairing block, antisymmetric
  for (int j = 0; j < n; ++j) a(j, j) = -spec.chemical_potential;
  const int bonds = spec.boundary == Boundary::periodic ? n : n - 1;
  for (int j = 0; j < bonds; ++j) {
    const int jp = (j + 1) % n;
    a(j, jp) += -spec.hopping;
    a(jp, j) += -spec.hopping;
    // delta (a_j a_{j+1} + a_{j+1}^dag a_j^dag): B_{j+1,j} = +delta.
    b(jp, j) += spec.pairing;
    b(j, jp) += -spec.pairing;
  }
  BdGMatrix out;
  out.n_sites = n;
  out.matrix.resize(2 * n, 2 * n);
  out.matrix.topLeftCorner(n, n) = a;
  out.matrix.topRightCorner(n, n) = b;
  out.matrix.bottomLeftCorner(n, n) = b.transpose();
  out.matrix.bottomRightCorner(n, n) = -a.transpose();
  return out;
}

std::vector<double> bdg_positive_eigenvalues(const BdGMatrix& bdg) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(bdg.matrix,
                                                    Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending, symmetric about zero
  std::vector<double> upper(ev.data() + bdg.n_sites, ev.data() + 2 * bdg.n_sites);
  return upper;
}

double bdg_ground_energy(const BdGMatrix& bdg) {
  double sum = 0.0;
  for (double lam : bdg_positive_eigenvalues(bdg)) sum += lam;
  return -0.5 * sum;
}

double min_bdg_gap(const ChainSpec& spec) {
  const auto upper = bdg_positive_eigenvalues(bdg_matrix(spec));
  return std::max(0.0, upper.front());
}

ZeroModePotentials majorana_zero_mode_potentials(int n_sites, double hopping,
                                                 double pairing) {
  if (n_sites < 2) throw DomainError("majorana_zero_mode_potentials: n_sites >= 2");
  ZeroModePotentials out;
  const double disc = hopping * hopping - pairing * pairing;
  if (disc < 0.0) {
    out.real_domain = false;
    return out;
  }
  const double scale = 2.0 * std::sqrt(disc);
  out.values.reserve(n_sites);
  for (int n = 1; n <= n_sites; ++n) {
    // cos(pi/2) must come out exactly zero (odd chains have a mid root).
    const double c = 2 * n == n_sites + 1 ? 0.0 : std::cos(M_PI * n / (n_sites + 1));
    out.values.push_back(scale * c);
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

}  // namespace kitnet
