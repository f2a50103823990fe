#pragma once

#include <bit>
#include <random>

#include "kitnet/operators.hpp"

namespace kitnet::testing {

inline VectorXcd random_complex_vector(std::size_t dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  VectorXcd v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

inline VectorXd random_real_vector(std::size_t dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  VectorXd v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) v[i] = gauss(rng);
  v.normalize();
  return v;
}

// Max |<u|Ov> - conj(<v|Ou>)| over random probes.
inline double hermiticity_defect(const ManyBodyOperator& op, int probes = 10,
                                 unsigned seed = 7u) {
  std::mt19937 rng(seed);
  double defect = 0.0;
  for (int t = 0; t < probes; ++t) {
    const VectorXcd u = random_complex_vector(op.dimension(), rng);
    const VectorXcd v = random_complex_vector(op.dimension(), rng);
    const Complex a = u.dot(op.apply(v));
    const Complex b = v.dot(op.apply(u));
    defect = std::max(defect, std::abs(a - std::conj(b)));
  }
  return defect;
}

// Max ||O(au+bv) - aOu - bOv|| over random probes.
inline double linearity_defect(const ManyBodyOperator& op, int probes = 5,
                               unsigned seed = 11u) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double defect = 0.0;
  for (int t = 0; t < probes; ++t) {
    const VectorXcd u = random_complex_vector(op.dimension(), rng);
    const VectorXcd v = random_complex_vector(op.dimension(), rng);
    const Complex a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
    const VectorXcd combo = a * u + b * v;
    const VectorXcd lhs = op.apply(combo);
    const VectorXcd rhs = a * op.apply(u) + b * op.apply(v);
    defect = std::max(defect, (lhs - rhs).norm());
  }
  return defect;
}

// Max ||[A,B] v|| over random unit probes.
inline double commutator_defect(const ManyBodyOperator& a, const ManyBodyOperator& b,
                                int probes = 10, unsigned seed = 3u) {
  std::mt19937 rng(seed);
  double defect = 0.0;
  for (int t = 0; t < probes; ++t) {
    const VectorXcd v = random_complex_vector(a.dimension(), rng);
    defect = std::max(defect, (a.apply(b.apply(v)) - b.apply(a.apply(v))).norm());
  }
  return defect;
}

// Fermionic translation a_j -> a_{j+1 mod N} as a signed permutation of basis
// labels: |n> -> (-1)^(n_{N-1} (F-1)) |shifted>, F the total occupation.
inline VectorXcd fermionic_translation(const VectorXcd& v, int n_sites) {
  const std::size_t dim = std::size_t{1} << n_sites;
  VectorXcd out = VectorXcd::Zero(v.size());
  for (std::size_t b = 0; b < dim; ++b) {
    const int top = static_cast<int>((b >> (n_sites - 1)) & 1);
    const int f = std::popcount(b);
    const std::uint64_t shifted =
        ((b << 1) & (dim - 1)) | static_cast<std::uint64_t>(top);
    const double sign = (top && ((f - 1) & 1)) ? -1.0 : 1.0;
    out[shifted] += sign * v[b];
  }
  return out;
}

inline std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace kitnet::testing
