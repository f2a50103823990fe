#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kitnet/errors.hpp"
#include "kitnet/rdm.hpp"
#include "kitnet/solver.hpp"

using namespace kitnet;
using namespace kitnet::testing;

namespace {

QuantumState basis_state(int n, std::uint64_t b) {
  QuantumState s;
  s.spec.n_sites = n;
  s.amplitudes = VectorXcd::Zero(Eigen::Index{1} << n);
  s.amplitudes[b] = 1.0;
  s.parity_expectation = (std::popcount(b) & 1) ? -1.0 : 1.0;
  return s;
}

ChainSpec spec(int n, double mu, double delta, Boundary b = Boundary::periodic) {
  ChainSpec s;
  s.n_sites = n;
  s.chemical_potential = mu;
  s.pairing = delta;
  s.boundary = b;
  return s;
}

}  // namespace

TEST_CASE("pair reduction of product and GHZ states") {
  // occupations (1,0,1,0): site 0 occupied, site 1 empty
  const QuantumState s = basis_state(4, 0b0101);
  const Matrix4cd rho = reduce_to_pair(s, 0, 1).entries;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(std::abs(rho(a, b) - (a == 2 && b == 2 ? 1.0 : 0.0)) < 1e-15);

  QuantumState ghz;
  ghz.spec.n_sites = 4;
  ghz.amplitudes = VectorXcd::Zero(16);
  ghz.amplitudes[0b0000] = 1.0 / std::sqrt(2.0);
  ghz.amplitudes[0b1111] = 1.0 / std::sqrt(2.0);
  ghz.parity_expectation = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Matrix4cd r = reduce_to_pair(ghz, i, j).entries;
      CHECK(std::abs(r(0, 0) - 0.5) < 1e-15);
      CHECK(std::abs(r(3, 3) - 0.5) < 1e-15);
      CHECK(std::abs(r(0, 3)) < 1e-15);  // coherence killed by traced factors
      CHECK(std::abs(r(1, 1)) + std::abs(r(2, 2)) < 1e-15);
    }
}

TEST_CASE("qubit partial trace equals the brute-force oracle") {
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> mu(-3.0, 3.0), dl(-2.0, 2.0);
  for (int t = 0; t < 6; ++t) {
    const auto bc = t % 2 ? Boundary::open : Boundary::periodic;
    const ChainSpec c = spec(t % 2 ? 7 : 8, mu(rng), dl(rng), bc);
    const QuantumState g = ground_state(c);
    for (int i = 0; i < c.n_sites; ++i)
      for (int j = i + 1; j < c.n_sites; ++j) {
        const Matrix4cd fast = reduce_to_pair(g, i, j).entries;
        const Matrix4cd oracle = brute_force_pair_rdm(g, i, j).entries;
        CHECK((fast - oracle).cwiseAbs().maxCoeff() < 1e-12);
      }
  }
}

TEST_CASE("pair matrices are valid states with X structure") {
  const QuantumState g = ground_state(spec(8, 1.1, 0.7));
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      const Matrix4cd rho = reduce_to_pair(g, i, j).entries;
      CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
      CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
      CHECK(es.eigenvalues()[0] > -1e-10);
      // definite parity kills the odd-coherence entries
      CHECK(std::abs(rho(0, 1)) < 1e-10);
      CHECK(std::abs(rho(0, 2)) < 1e-10);
      CHECK(std::abs(rho(1, 3)) < 1e-10);
      CHECK(std::abs(rho(2, 3)) < 1e-10);
    }
}

TEST_CASE("site reduction basics") {
  const QuantumState s = basis_state(2, 0b01);
  const Matrix2cd r = reduce_to_site(s, 0).entries;
  CHECK(std::abs(r(0, 0)) < 1e-15);
  CHECK(std::abs(r(1, 1) - 1.0) < 1e-15);

  // ring symmetry: site matrices identical
  const QuantumState g = ground_state(spec(8, 0.9, 0.6));
  const Matrix2cd ref = reduce_to_site(g, 0).entries;
  for (int i = 1; i < 8; ++i)
    CHECK((reduce_to_site(g, i).entries - ref).cwiseAbs().maxCoeff() < 1e-10);
  // diagonal for definite parity
  CHECK(std::abs(ref(0, 1)) < 1e-10);

  // tracing the pair matrix over j reproduces the site matrix
  for (int j : {1, 3, 6}) {
    const Matrix4cd pair = reduce_to_pair(g, 0, j).entries;
    Matrix2cd from_pair = Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        from_pair(a, b) = pair(2 * a, 2 * b) + pair(2 * a + 1, 2 * b + 1);
    CHECK((from_pair - ref).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("fast-path correlators reassemble the pair matrix") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> mu(-2.0, 2.0), dl(-1.5, 1.5);
  for (int t = 0; t < 5; ++t) {
    const ChainSpec c = spec(8, mu(rng), dl(rng));
    const QuantumState g = ground_state(c);
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        const Matrix4cd fast = pair_correlators(g, i, j).assemble();
        const Matrix4cd full = reduce_to_pair(g, i, j).entries;
        CHECK((fast - full).cwiseAbs().maxCoeff() < 1e-12);
      }
  }

  // vacuum: all correlators vanish
  const QuantumState vac = basis_state(6, 0);
  const PairCorrelators pc = pair_correlators(vac, 1, 4);
  CHECK(pc.n_i == 0.0);
  CHECK(pc.n_j == 0.0);
  CHECK(pc.n_ij == 0.0);
  CHECK(std::abs(pc.offdiag_hop) == 0.0);
  CHECK(std::abs(pc.offdiag_pair) == 0.0);
}

TEST_CASE("correlator record is pair-independent at the factorization point") {
  const double mu_star = std::sqrt(3.0);  // w = 1, delta = 0.5
  const QuantumState g = ground_state(spec(10, mu_star, 0.5));
  const PairCorrelators ref = pair_correlators(g, 0, 1);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      const PairCorrelators pc = pair_correlators(g, i, j);
      CHECK(std::abs(pc.n_i - ref.n_i) < 1e-10);
      CHECK(std::abs(pc.n_j - ref.n_j) < 1e-10);
      CHECK(std::abs(pc.n_ij - ref.n_ij) < 1e-10);
      CHECK(std::abs(pc.offdiag_hop - ref.offdiag_hop) < 1e-10);
      CHECK(std::abs(pc.offdiag_pair - ref.offdiag_pair) < 1e-10);
    }
}

TEST_CASE("fermionic-mode convention differs only by the string") {
  const QuantumState g = ground_state(spec(8, 1.3, 0.6, Boundary::open));
  // adjacent pairs: empty string, conventions coincide
  for (int i = 0; i < 7; ++i) {
    const Matrix4cd spin = reduce_to_pair(g, i, i + 1).entries;
    const Matrix4cd ferm =
        reduce_to_pair(g, i, i + 1, RdmConvention::fermionic_mode).entries;
    CHECK((spin - ferm).cwiseAbs().maxCoeff() < 1e-12);
  }
  // distant pairs generally differ off the diagonal, never on it
  const Matrix4cd spin = reduce_to_pair(g, 0, 5).entries;
  const Matrix4cd ferm = reduce_to_pair(g, 0, 5, RdmConvention::fermionic_mode).entries;
  for (int a = 0; a < 4; ++a)
    CHECK(std::abs(spin(a, a) - ferm(a, a)) < 1e-14);
}

TEST_CASE("index errors") {
  const QuantumState g = ground_state(spec(4, 0.4, 0.3));
  CHECK_THROWS_AS(reduce_to_pair(g, 0, 4), DomainError);
  CHECK_THROWS_AS(reduce_to_pair(g, 2, 2), DomainError);
  CHECK_THROWS_AS(reduce_to_site(g, -1), DomainError);
  const QuantumState big = ground_state(spec(12, 0.4, 0.3));
  CHECK_THROWS_AS(brute_force_pair_rdm(big, 0, 1), CapacityError);
}
