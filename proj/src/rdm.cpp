#include "kitnet/rdm.hpp"

#include <bit>

#include "kitnet/errors.hpp"
#include "kitnet/operators.hpp"

namespace kitnet {

namespace {

void check_pair(const QuantumState& state, int i, int j) {
  const int n = state.n_sites();
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw DomainError("pair reduction: site index out of range");
  if (i == j) throw DomainError("pair reduction: sites must differ");
}

// Insert the pair bits (bi at site i, bj at site j) into a configuration of
// the remaining N-2 sites, indexed by r.
struct PairEmbedding {
  int i, j, n;
  std::uint64_t low_mask, mid_mask;
  int mid_shift, high_shift;

  PairEmbedding(int i_, int j_, int n_) : i(i_), j(j_), n(n_) {
    low_mask = (std::uint64_t{1} << i) - 1;
    mid_mask = ((std::uint64_t{1} << (j - 1)) - 1) & ~low_mask;
    mid_shift = 1;   // rest bits at positions >= i shift up past site i
    high_shift = 2;  // rest bits at positions >= j-1 shift up past both sites
  }

  std::uint64_t embed(std::uint64_t r, int bi, int bj) const {
    const std::uint64_t low = r & low_mask;
    const std::uint64_t mid = (r & mid_mask) << mid_shift;
    const std::uint64_t high = (r & ~(low_mask | mid_mask)) << high_shift;
    return low | mid | high | (static_cast<std::uint64_t>(bi) << i) |
           (static_cast<std::uint64_t>(bj) << j);
  }
};

// <a_i^dag a_j> without the intervening string (ordered-mode signs only).
Complex bare_hop_correlator(const QuantumState& state, int i, int j) {
  VectorXcd out = VectorXcd::Zero(state.amplitudes.size());
  const std::size_t dim = state.dimension();
  for (std::size_t b = 0; b < dim; ++b) {
    const Complex x = state.amplitudes[b];
    if (x == Complex{}) continue;
    if (!((b >> j) & 1) || ((b >> i) & 1)) continue;
    double s = (std::popcount(b & ((std::uint64_t{1} << j) - 1)) & 1) ? -1.0 : 1.0;
    const std::uint64_t b1 = b ^ (std::uint64_t{1} << j);
    s *= (std::popcount(b1 & ((std::uint64_t{1} << i) - 1)) & 1) ? -1.0 : 1.0;
    out[b1 | (std::uint64_t{1} << i)] += s * x;
  }
  return state.amplitudes.dot(out);
}

// <a_j a_i> without the intervening string.
Complex bare_pair_correlator(const QuantumState& state, int i, int j) {
  VectorXcd out = VectorXcd::Zero(state.amplitudes.size());
  const std::size_t dim = state.dimension();
  for (std::size_t b = 0; b < dim; ++b) {
    const Complex x = state.amplitudes[b];
    if (x == Complex{}) continue;
    if (!((b >> i) & 1) || !((b >> j) & 1)) continue;
    // a_j a_i: a_i acts first.
    double s = (std::popcount(b & ((std::uint64_t{1} << i) - 1)) & 1) ? -1.0 : 1.0;
    const std::uint64_t b1 = b ^ (std::uint64_t{1} << i);
    s *= (std::popcount(b1 & ((std::uint64_t{1} << j) - 1)) & 1) ? -1.0 : 1.0;
    out[b1 ^ (std::uint64_t{1} << j)] += s * x;
  }
  return state.amplitudes.dot(out);
}

}  // namespace

PairDensityMatrix reduce_to_pair(const QuantumState& state, int i, int j,
                                 RdmConvention convention) {
  check_pair(state, i, j);
  const int lo = std::min(i, j), hi = std::max(i, j);

  PairDensityMatrix out;
  out.site_i = lo;
  out.site_j = hi;
  out.entries.setZero();

  const PairEmbedding emb(lo, hi, state.n_sites());
  const std::uint64_t rest_dim = std::uint64_t{1} << (state.n_sites() - 2);
  Complex amps[4];
  for (std::uint64_t r = 0; r < rest_dim; ++r) {
    for (int bi = 0; bi < 2; ++bi)
      for (int bj = 0; bj < 2; ++bj)
        amps[2 * bi + bj] = state.amplitudes[emb.embed(r, bi, bj)];
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) out.entries(a, c) += amps[a] * std::conj(amps[c]);
  }

  if (convention == RdmConvention::fermionic_mode) {
    // Replace the X off-diagonals by string-free mode correlators.
    const Complex t = bare_hop_correlator(state, lo, hi);   // <a_lo^dag a_hi>
    const Complex u = bare_pair_correlator(state, lo, hi);  // <a_hi a_lo>
    out.entries(1, 2) = t;
    out.entries(2, 1) = std::conj(t);
    out.entries(3, 0) = u;
    out.entries(0, 3) = std::conj(u);
  }
  return out;
}

SiteDensityMatrix reduce_to_site(const QuantumState& state, int i) {
  const int n = state.n_sites();
  if (i < 0 || i >= n) throw DomainError("reduce_to_site: index out of range");
  SiteDensityMatrix out;
  out.site = i;
  out.entries.setZero();
  const std::uint64_t low_mask = (std::uint64_t{1} << i) - 1;
  const std::uint64_t rest_dim = std::uint64_t{1} << (n - 1);
  for (std::uint64_t r = 0; r < rest_dim; ++r) {
    const std::uint64_t base = (r & low_mask) | ((r & ~low_mask) << 1);
    const Complex a0 = state.amplitudes[base];
    const Complex a1 = state.amplitudes[base | (std::uint64_t{1} << i)];
    out.entries(0, 0) += a0 * std::conj(a0);
    out.entries(0, 1) += a0 * std::conj(a1);
    out.entries(1, 0) += a1 * std::conj(a0);
    out.entries(1, 1) += a1 * std::conj(a1);
  }
  return out;
}

Matrix4cd PairCorrelators::assemble() const {
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 0) = 1.0 - n_i - n_j + n_ij;
  m(1, 1) = n_j - n_ij;
  m(2, 2) = n_i - n_ij;
  m(3, 3) = n_ij;
  m(1, 2) = offdiag_hop;
  m(2, 1) = std::conj(offdiag_hop);
  m(0, 3) = offdiag_pair;
  m(3, 0) = std::conj(offdiag_pair);
  return m;
}

PairCorrelators pair_correlators(const QuantumState& state, int i, int j) {
  check_pair(state, i, j);
  const int lo = std::min(i, j), hi = std::max(i, j);
  if (!state.definite_parity()) {
    // Structure theorem does not apply: fall back to the full reduction.
    const PairDensityMatrix full = reduce_to_pair(state, lo, hi);
    PairCorrelators c;
    c.n_i = full.entries(2, 2).real() + full.entries(3, 3).real();
    c.n_j = full.entries(1, 1).real() + full.entries(3, 3).real();
    c.n_ij = full.entries(3, 3).real();
    c.offdiag_hop = full.entries(1, 2);
    c.offdiag_pair = full.entries(0, 3);
    return c;
  }

  PairCorrelators c;
  const PairEmbedding emb(lo, hi, state.n_sites());
  const std::uint64_t rest_dim = std::uint64_t{1} << (state.n_sites() - 2);
  for (std::uint64_t r = 0; r < rest_dim; ++r) {
    const Complex a00 = state.amplitudes[emb.embed(r, 0, 0)];
    const Complex a01 = state.amplitudes[emb.embed(r, 0, 1)];
    const Complex a10 = state.amplitudes[emb.embed(r, 1, 0)];
    const Complex a11 = state.amplitudes[emb.embed(r, 1, 1)];
    c.n_i += std::norm(a10) + std::norm(a11);
    c.n_j += std::norm(a01) + std::norm(a11);
    c.n_ij += std::norm(a11);
    c.offdiag_hop += a01 * std::conj(a10);
    c.offdiag_pair += a00 * std::conj(a11);
  }
  return c;
}

PairDensityMatrix brute_force_pair_rdm(const QuantumState& state, int i, int j,
                                       int max_sites) {
  check_pair(state, i, j);
  if (state.n_sites() > max_sites)
    throw CapacityError("brute_force_pair_rdm: chain too long for the full density matrix");
  const int lo = std::min(i, j), hi = std::max(i, j);
  const Eigen::Index dim = state.amplitudes.size();
  const MatrixXcd rho = state.amplitudes * state.amplitudes.adjoint();

  PairDensityMatrix out;
  out.site_i = lo;
  out.site_j = hi;
  out.entries.setZero();
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      // Keep only elements diagonal in every traced-out site.
      const std::uint64_t mask_pair =
          (std::uint64_t{1} << lo) | (std::uint64_t{1} << hi);
      if ((static_cast<std::uint64_t>(b) & ~mask_pair) !=
          (static_cast<std::uint64_t>(c) & ~mask_pair))
        continue;
      const int row = 2 * ((b >> lo) & 1) + ((b >> hi) & 1);
      const int col = 2 * ((c >> lo) & 1) + ((c >> hi) & 1);
      out.entries(row, col) += rho(b, c);
    }
  }
  return out;
}

}  // namespace kitnet
