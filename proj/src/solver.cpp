#include "kitnet/solver.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "kitnet/errors.hpp"
#include "kitnet/freefermion.hpp"

namespace kitnet {

namespace {

// Deterministic Krylov seed: all-equal amplitudes, wiggled on retries (an
// all-equal vector can be exactly orthogonal to the target eigenvector in
// symmetric sectors).
VectorXd seed_vector(Eigen::Index dim, int attempt) {
  VectorXd v = VectorXd::Constant(dim, 1.0);
  if (attempt > 0) {
    for (Eigen::Index i = 0; i < dim; ++i)
      v[i] += 0.37 * std::sin(0.7131 * static_cast<double>(i) + 0.4 * attempt);
  }
  v.normalize();
  return v;
}

SectorGround dense_sector_ground(const SectorOperator& sector) {
  const MatrixXd m = sector.to_dense(kDefaultMaxSites);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  SectorGround out;
  out.energy = es.eigenvalues()[0];
  out.vector = es.eigenvectors().col(0);
  return out;
}

SectorGround lanczos_sector_ground(const SectorOperator& sector,
                                   const LanczosOptions& opts, int attempt) {
  const Eigen::Index dim = static_cast<Eigen::Index>(sector.dimension());
  const int max_iter =
      static_cast<int>(std::min<Eigen::Index>(opts.max_iterations, dim));

  MatrixXd q(dim, max_iter + 1);  // Krylov basis, kept for full reorthogonalization
  q.col(0) = seed_vector(dim, attempt);

  VectorXd alpha(max_iter), beta(max_iter);
  Eigen::SelfAdjointEigenSolver<MatrixXd> tri;
  Eigen::VectorXd ritz;
  double theta = 0.0, prev_theta = 0.0;
  bool have_prev = false, exhausted = false;
  int m = 0;

  for (int j = 0; j < max_iter; ++j) {
    VectorXd w = sector.apply(q.col(j));
    alpha[j] = q.col(j).dot(w);
    // Classical Gram-Schmidt against the whole basis, twice; subsumes the
    // three-term recurrence.
    auto qj = q.leftCols(j + 1);
    for (int pass = 0; pass < 2; ++pass) w.noalias() -= qj * (qj.transpose() * w);

    m = j + 1;
    tri.computeFromTridiagonal(alpha.head(m), beta.head(std::max(0, m - 1)));
    theta = tri.eigenvalues()[0];
    ritz = tri.eigenvectors().col(0);

    const double b = w.norm();
    const double residual_est = b * std::abs(ritz[m - 1]);
    const bool shift_ok =
        have_prev && std::abs(theta - prev_theta) <
                         opts.eigenvalue_shift_tol * std::max(1.0, std::abs(theta));
    prev_theta = theta;
    have_prev = true;

    if (b <= 1e-13) {  // Krylov space exhausted: the tridiagonal block is exact
      exhausted = true;
      break;
    }
    if (shift_ok && residual_est <= opts.residual_tol) break;

    beta[j] = b;
    q.col(j + 1) = w / b;
  }

  SectorGround out;
  out.iterations = m;
  out.energy = theta;
  out.vector.noalias() = q.leftCols(m) * ritz;
  out.vector.normalize();

  const double residual = (sector.apply(out.vector) - out.energy * out.vector).norm();
  if (!exhausted && residual > std::max(opts.residual_tol * 10.0,
                                        1e-9 * std::max(1.0, std::abs(out.energy))))
    throw ConvergenceError("Lanczos did not reach residual tolerance", residual);
  return out;
}

SectorGround solve_sector(const SectorOperator& sector, const LanczosOptions& opts,
                          int attempt) {
  if (sector.dimension() <= static_cast<std::size_t>(opts.dense_cutoff))
    return dense_sector_ground(sector);
  return lanczos_sector_ground(sector, opts, attempt);
}

}  // namespace

SectorGround solve_sector_ground(const SectorOperator& sector,
                                 const LanczosOptions& opts) {
  return solve_sector(sector, opts, 0);
}

QuantumState ground_state(const ChainSpec& spec, const SolverConfig& cfg) {
  spec.validate();
  const ManyBodyOperator h = build_kitaev_hamiltonian(spec);
  const SectorOperator even(h, +1);
  const SectorOperator odd(h, -1);

  // Independent check value: the Hamiltonian is quadratic, so the global
  // ground energy equals the unconstrained quadratic minimum exactly.
  const double e_quad = bdg_ground_energy(bdg_matrix(spec));

  SectorGround ge, go;
  for (int attempt = 0;; ++attempt) {
    ge = solve_sector(even, cfg.lanczos, attempt);
    go = solve_sector(odd, cfg.lanczos, attempt);
    const double e_min = std::min(ge.energy, go.energy);
    if (std::abs(e_min - e_quad) <= 1e-8 * std::max(1.0, std::abs(e_quad))) break;
    if (attempt >= 3)
      throw ConvergenceError(
          "ground_state: sector minima inconsistent with quadratic-form energy",
          std::abs(e_min - e_quad));
  }

  const double e_min = std::min(ge.energy, go.energy);
  const bool degenerate =
      std::abs(ge.energy - go.energy) < cfg.degeneracy_tol * std::max(1.0, std::abs(e_min));
  const bool pick_odd = degenerate || go.energy <= ge.energy;
  const SectorGround& win = pick_odd ? go : ge;
  const SectorOperator& sec = pick_odd ? odd : even;

  QuantumState state;
  state.spec = spec;
  state.amplitudes = sec.lift(win.vector);
  state.energy = win.energy;
  state.degenerate = degenerate;

  const ManyBodyOperator p = build_parity_operator(spec.n_sites);
  state.parity_expectation = state.amplitudes.dot(p.apply(state.amplitudes)).real();

  const double residual =
      (h.apply(state.amplitudes) - Complex(state.energy) * state.amplitudes).norm();
  if (residual > 1e-8 * std::max(1.0, std::abs(state.energy)))
    throw ConvergenceError("ground_state: residual check failed", residual);
  return state;
}

QuasiparticleSpectrum quasiparticle_spectrum(const ChainSpec& spec) {
  spec.validate(64);
  if (spec.boundary != Boundary::periodic)
    throw UnsupportedBoundaryError(
        "quasiparticle_spectrum: defined for periodic chains; use the BdG "
        "spectrum for open boundaries");
  QuasiparticleSpectrum out;
  const int n = spec.n_sites;
  out.lambdas.reserve(n);
  out.epsilons.reserve(n);
  out.deltas.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * M_PI * k / n;
    const double eps = -spec.chemical_potential - 2.0 * spec.hopping * std::cos(theta);
    const double dk = std::abs(2.0 * spec.pairing * std::sin(theta));
    out.epsilons.push_back(eps);
    out.deltas.push_back(dk);
    out.lambdas.push_back(std::hypot(eps, dk));
  }
  return out;
}

double ground_energy_analytic(const ChainSpec& spec) {
  const QuasiparticleSpectrum qp = quasiparticle_spectrum(spec);
  double sum = 0.0;
  for (double lam : qp.lambdas) sum += lam;
  return -0.5 * sum;
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  if (a.amplitudes.size() != b.amplitudes.size())
    throw DomainError("fidelity: dimension mismatch");
  return std::min(1.0, std::abs(a.amplitudes.dot(b.amplitudes)));
}

std::vector<double> dense_full_spectrum(const ManyBodyOperator& op, int max_sites) {
  const MatrixXd m = op.to_dense(max_sites);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return std::vector<double>(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
}

QuantumState dense_ground_state(const ChainSpec& spec, int max_sites) {
  spec.validate(max_sites);
  const ManyBodyOperator h = build_kitaev_hamiltonian(spec);
  const MatrixXd m = h.to_dense(max_sites);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  QuantumState state;
  state.spec = spec;
  state.energy = es.eigenvalues()[0];
  state.amplitudes = es.eigenvectors().col(0).cast<Complex>();
  const ManyBodyOperator p = build_parity_operator(spec.n_sites);
  state.parity_expectation = state.amplitudes.dot(p.apply(state.amplitudes)).real();
  state.degenerate =
      es.eigenvalues().size() > 1 &&
      std::abs(es.eigenvalues()[1] - es.eigenvalues()[0]) <
          1e-10 * std::max(1.0, std::abs(state.energy));
  return state;
}

}  // namespace kitnet
