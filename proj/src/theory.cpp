#include "kitnet/theory.hpp"

#include <bit>
#include <cmath>

#include "kitnet/errors.hpp"
#include "kitnet/operators.hpp"
#include "kitnet/rdm.hpp"

namespace kitnet {

double factorization_potential(double hopping, double pairing) {
  const double disc = hopping * hopping - pairing * pairing;
  if (disc < 0.0)
    throw DomainError("factorization_potential: requires |pairing| <= |hopping|");
  return 2.0 * std::sqrt(disc);
}

double factorization_angle(double coupling_sum, double anisotropy) {
  if (coupling_sum <= 0.0)
    throw DomainError("factorization_angle: coupling_sum must be positive");
  if (anisotropy < 0.0 || anisotropy > coupling_sum)
    throw DomainError("factorization_angle: requires 0 <= anisotropy <= coupling_sum");
  const double phi = 0.5 * std::asin(anisotropy / coupling_sum);
  return std::atan(std::sqrt(std::tan(phi)));
}

FactorizedState build_factorized_odd_state(int n_sites, double theta) {
  if (n_sites < 2) throw DomainError("build_factorized_odd_state: n_sites >= 2");
  if (n_sites > kDefaultMaxSites)
    throw CapacityError("build_factorized_odd_state: chain too long");
  if (!(theta > 0.0) || theta > M_PI / 4.0 + 1e-12)
    throw DomainError(
        "build_factorized_odd_state: theta must lie in (0, pi/4]; theta = 0 "
        "leaves the odd sector weightless");

  const double c = std::cos(theta), s = std::sin(theta);
  const double cos2t = std::cos(2.0 * theta);
  const double norm_factor = std::sqrt(1.0 - std::pow(cos2t, n_sites));

  // Weight of a basis state with k lowered spins: (S^-)^k reaches each
  // k-subset k! times, cancelling the k! in f_{N,k}. Only odd k contribute.
  std::vector<double> layer(n_sites + 1, 0.0);
  for (int k = 1; k <= n_sites; k += 2)
    layer[k] = std::sqrt(2.0) * std::pow(s, k) * std::pow(c, n_sites - k) / norm_factor;

  FactorizedState out;
  out.n_sites = n_sites;
  out.theta = theta;
  const std::size_t dim = std::size_t{1} << n_sites;
  out.amplitudes = VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    const int flipped = n_sites - std::popcount(b);  // lowered from all-up
    out.amplitudes[b] = layer[flipped];
  }
  out.raw_norm = out.amplitudes.norm();
  if (std::abs(out.raw_norm - 1.0) > 1e-10) out.amplitudes /= out.raw_norm;
  return out;
}

QuantumState jw_image(const FactorizedState& state) {
  QuantumState out;
  out.spec.n_sites = state.n_sites;
  out.amplitudes = state.amplitudes;
  const ManyBodyOperator p = build_parity_operator(state.n_sites);
  out.parity_expectation = out.amplitudes.dot(p.apply(out.amplitudes)).real();
  return out;
}

double permutation_invariance_deviation(const QuantumState& state) {
  const int n = state.n_sites();
  const Matrix4cd ref = reduce_to_pair(state, 0, 1).entries;
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Matrix4cd rho = reduce_to_pair(state, i, j).entries;
      dev = std::max(dev, (rho - ref).cwiseAbs().maxCoeff());
    }
  return dev;
}

}  // namespace kitnet
