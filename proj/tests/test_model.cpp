#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "helpers.hpp"
#include "kitnet/errors.hpp"
#include "kitnet/operators.hpp"
#include "kitnet/solver.hpp"

using namespace kitnet;
using namespace kitnet::testing;

namespace {

ChainSpec spec(int n, double mu, double delta, Boundary b = Boundary::periodic,
               double w = 1.0) {
  ChainSpec s;
  s.n_sites = n;
  s.hopping = w;
  s.chemical_potential = mu;
  s.pairing = delta;
  s.boundary = b;
  return s;
}

}  // namespace

TEST_CASE("kitaev dimer spectra match hand values") {
  // open, w=1, mu=0, delta=0: hopping dimer
  auto ev = sorted(dense_full_spectrum(build_kitaev_hamiltonian(
      spec(2, 0.0, 0.0, Boundary::open))));
  REQUIRE(ev.size() == 4);
  CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(1.0).epsilon(1e-12));

  // open, w=0, mu=2: pure number operator, eigenvalue -mu(F - N/2)
  auto evn = sorted(dense_full_spectrum(build_kitaev_hamiltonian(
      spec(2, 2.0, 0.0, Boundary::open, 0.0))));
  CHECK(evn[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(evn[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(evn[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(evn[3] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("hamiltonians are hermitian, linear and parity-commuting") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> mu(-3.0, 3.0), dl(-2.0, 2.0);
  for (int trial = 0; trial < 6; ++trial) {
    const auto b = trial % 2 ? Boundary::open : Boundary::periodic;
    const ManyBodyOperator h =
        build_kitaev_hamiltonian(spec(5 + trial % 3, mu(rng), dl(rng), b));
    const ManyBodyOperator p = build_parity_operator(h.n_sites());
    CHECK(hermiticity_defect(h) < 1e-12);
    CHECK(linearity_defect(h) < 1e-12);
    CHECK(commutator_defect(h, p) < 1e-12);
  }
}

TEST_CASE("parity operator diagonal and involutive") {
  const ManyBodyOperator p = build_parity_operator(3);
  VectorXcd e = VectorXcd::Zero(8);
  e[0b000] = 1.0;
  CHECK(p.apply(e)[0b000].real() == doctest::Approx(1.0));
  e.setZero();
  e[0b101] = 1.0;
  CHECK(p.apply(e)[0b101].real() == doctest::Approx(1.0));
  e.setZero();
  e[0b001] = 1.0;
  CHECK(p.apply(e)[0b001].real() == doctest::Approx(-1.0));

  std::mt19937 rng(5);
  for (int t = 0; t < 5; ++t) {
    const VectorXcd v = random_complex_vector(8, rng);
    CHECK((p.apply(p.apply(v)) - v).norm() < 1e-15);
  }
}

TEST_CASE("xy dimer spectrum and U(1) symmetry at zero anisotropy") {
  XYSpec xy;
  xy.n_sites = 2;
  xy.coupling_sum = 1.0;
  xy.anisotropy = 0.0;
  xy.field = 0.0;
  auto ev = sorted(dense_full_spectrum(build_xy_hamiltonian(xy)));
  CHECK(ev[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(2.0).epsilon(1e-12));

  // gamma = 0: total sz conserved
  XYSpec xy6;
  xy6.n_sites = 6;
  xy6.coupling_sum = 1.0;
  xy6.anisotropy = 0.0;
  xy6.field = 0.7;
  const ManyBodyOperator h = build_xy_hamiltonian(xy6);
  std::vector<Term> sz_terms;
  for (int i = 0; i < 6; ++i) sz_terms.push_back({Term::Kind::spin_z, i, i, 1.0});
  const ManyBodyOperator total_sz(6, sz_terms);
  CHECK(commutator_defect(h, total_sz) < 1e-12);
}

TEST_CASE("jw boundary term completes the cyclic xy image") {
  XYSpec xy;
  xy.n_sites = 4;
  xy.coupling_sum = 0.9;
  xy.anisotropy = 0.4;
  xy.field = 1.3;

  const MatrixXd full = build_xy_hamiltonian(xy).to_dense();
  const MatrixXd image = build_jw_open_image(xy).to_dense() +
                         build_jw_boundary_term(xy).to_dense();
  CHECK((full - image).cwiseAbs().maxCoeff() < 1e-12);

  // gamma = J = 0: boundary term vanishes
  XYSpec zero = xy;
  zero.coupling_sum = 0.0;
  zero.anisotropy = 0.0;
  const MatrixXd z = build_jw_boundary_term(zero).to_dense();
  CHECK(z.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("xy odd sector equals periodic-chain odd sector") {
  for (int n : {4, 6, 8}) {
    XYSpec xy;
    xy.n_sites = n;
    xy.coupling_sum = 1.0;
    xy.anisotropy = 0.5;
    xy.field = 0.8;
    ChainSpec c = spec(n, xy.field, xy.anisotropy);
    c.hopping = xy.coupling_sum;

    const MatrixXd mx = sector_project(build_xy_hamiltonian(xy), -1).to_dense();
    const MatrixXd mk = sector_project(build_kitaev_hamiltonian(c), -1).to_dense();
    Eigen::SelfAdjointEigenSolver<MatrixXd> ex(mx, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<MatrixXd> ek(mk, Eigen::EigenvaluesOnly);
    CHECK((ex.eigenvalues() - ek.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("sector projection splits the spectrum") {
  const ChainSpec c = spec(4, 0.83, -0.7);
  const ManyBodyOperator h = build_kitaev_hamiltonian(c);
  const SectorOperator even(h, +1), odd(h, -1);
  CHECK(even.dimension() == 8);
  CHECK(odd.dimension() == 8);

  // N=2: each sector has dimension 2
  const ManyBodyOperator h2 = build_kitaev_hamiltonian(spec(2, 0.3, 0.1));
  CHECK(SectorOperator(h2, +1).dimension() == 2);
  CHECK(SectorOperator(h2, -1).dimension() == 2);

  // union of sector spectra = full spectrum
  Eigen::SelfAdjointEigenSolver<MatrixXd> ee(even.to_dense(), Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<MatrixXd> eo(odd.to_dense(), Eigen::EigenvaluesOnly);
  std::vector<double> merged(ee.eigenvalues().data(), ee.eigenvalues().data() + 8);
  merged.insert(merged.end(), eo.eigenvalues().data(), eo.eigenvalues().data() + 8);
  const auto full = sorted(dense_full_spectrum(h));
  const auto ms = sorted(merged);
  for (std::size_t i = 0; i < full.size(); ++i)
    CHECK(full[i] == doctest::Approx(ms[i]).epsilon(1e-11));

  // every sector basis state has the requested parity
  for (auto b : odd.basis()) CHECK((std::popcount(b) & 1) == 1);
  for (auto b : even.basis()) CHECK((std::popcount(b) & 1) == 0);

  CHECK_NOTHROW(sector_project(h, -1));
  CHECK_THROWS_AS(sector_project(h, 0), DomainError);
}

TEST_CASE("spectrum symmetric under mu -> -mu (periodic, even N)") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> mu(-2.5, 2.5), dl(-1.5, 1.5);
  for (int n : {4, 6, 8}) {
    const double m = mu(rng), d = dl(rng);
    const auto plus = sorted(dense_full_spectrum(build_kitaev_hamiltonian(spec(n, m, d))));
    const auto minus =
        sorted(dense_full_spectrum(build_kitaev_hamiltonian(spec(n, -m, d))));
    for (std::size_t i = 0; i < plus.size(); ++i)
      CHECK(plus[i] == doctest::Approx(minus[i]).epsilon(1e-10));
  }
}

TEST_CASE("fermionic translation commutes with the periodic chain") {
  const ChainSpec c = spec(6, 1.1, 0.6);
  const ManyBodyOperator h = build_kitaev_hamiltonian(c);
  std::mt19937 rng(21);
  for (int t = 0; t < 6; ++t) {
    const VectorXcd v = random_complex_vector(h.dimension(), rng);
    const VectorXcd lhs = fermionic_translation(h.apply(v), 6);
    const VectorXcd rhs = h.apply(fermionic_translation(v, 6));
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("sparse storage agrees with the matrix-free action") {
  const ChainSpec c = spec(6, 0.4, 1.2, Boundary::open);
  const ManyBodyOperator h = build_kitaev_hamiltonian(c);
  const auto sp = h.to_sparse();
  std::mt19937 rng(33);
  for (int t = 0; t < 4; ++t) {
    const VectorXd v = random_real_vector(h.dimension(), rng);
    CHECK((sp * v - h.apply(v)).norm() < 1e-13);
  }
}

TEST_CASE("capacity and validation errors") {
  ChainSpec c = spec(17, 0.0, 0.0);
  CHECK_THROWS_AS(build_kitaev_hamiltonian(c), CapacityError);
  c.n_sites = 1;
  CHECK_THROWS_AS(build_kitaev_hamiltonian(c), DomainError);
  c.n_sites = 4;
  c.pairing = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(build_kitaev_hamiltonian(c), DomainError);
}
