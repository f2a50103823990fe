#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <vector>

#include "kitnet/chain.hpp"
#include "kitnet/state.hpp"

namespace kitnet {

// One Hermitian summand of a many-body operator. Fermionic site ordering and
// signs follow the global convention: site j occupies bit j of the basis
// index, and a_j acting on a basis state picks up (-1)^(number of occupied
// sites with index < j).
struct Term {
  enum class Kind {
    onsite,       // c * (n_i - 1/2)
    hop,          // c * (a_i^dag a_j + a_j^dag a_i)
    pair,         // c * (a_i a_j + a_j^dag a_i^dag), order as written
    parity_hop,   // P * hop
    parity_pair,  // P * pair
    parity_diag,  // c * P
    spin_xx,      // c * sx_i sx_j
    spin_yy,      // c * sy_i sy_j
    spin_z,       // c * sz_i, with sz = 2n - 1 (spin-up == occupied)
  };
  Kind kind;
  int i = 0;
  int j = 0;
  double coeff = 0.0;
};

// Hermitian operator on the 2^N occupation basis, stored as a term list and
// applied matrix-free. Diagonal contributions are folded into a cached vector
// at construction.
class ManyBodyOperator {
 public:
  ManyBodyOperator(int n_sites, std::vector<Term> terms);

  int n_sites() const { return n_sites_; }
  std::size_t dimension() const { return std::size_t{1} << n_sites_; }
  const std::vector<Term>& terms() const { return terms_; }

  VectorXcd apply(const VectorXcd& v) const;
  // All builders in this project produce real matrix elements; the real apply
  // path is what the eigensolver iterates.
  VectorXd apply(const VectorXd& v) const;

  // Explicit storage, for small chains only.
  Eigen::SparseMatrix<double> to_sparse(int max_sites = 12) const;
  MatrixXd to_dense(int max_sites = 10) const;

  // True if every term either preserves occupation parity (all fermionic
  // bilinears and spin bond terms do) -- used as a cheap structural check.
  bool parity_preserving() const;

 private:
  template <typename Scalar>
  void apply_into(const Scalar* in, Scalar* out) const;

  int n_sites_;
  std::vector<Term> terms_;
  std::vector<Term> offdiag_terms_;
  VectorXd diagonal_;
};

ManyBodyOperator build_kitaev_hamiltonian(const ChainSpec& spec);
ManyBodyOperator build_parity_operator(int n_sites);
// Cyclic XY chain -sum_i (Jx sx sx + Jy sy sy) - (h/2) sum_i sz, built from
// spin bond terms in the occupation basis with sz = 2n - 1.
ManyBodyOperator build_xy_hamiltonian(const XYSpec& spec);
// Parity-dressed boundary correction P (J a_N^dag a_1 + gamma a_N^dag a_1^dag
// + h.c.). Added to the open-chain fermion image of the XY model it restores
// the full cyclic XY spectrum.
ManyBodyOperator build_jw_boundary_term(const XYSpec& spec);
// Open-chain fermion image of the cyclic XY model (the bulk part): an open
// Kitaev chain with w = J, delta = gamma, mu = h.
ManyBodyOperator build_jw_open_image(const XYSpec& spec);

// Restriction of a parity-commuting operator to one parity sector, with the
// index maps between the 2^(N-1)-dimensional sector basis and the full basis.
class SectorOperator {
 public:
  SectorOperator(const ManyBodyOperator& op, int parity);

  int parity() const { return parity_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::uint32_t>& basis() const { return basis_; }

  VectorXd apply(const VectorXd& v) const;
  MatrixXd to_dense(int max_sites = 12) const;

  // Embed a sector vector into the full 2^N space.
  VectorXcd lift(const VectorXd& v) const;

 private:
  const ManyBodyOperator* op_;
  int parity_;
  std::vector<std::uint32_t> basis_;        // sector index -> full index
  std::vector<std::int32_t> rank_;          // full index -> sector index (or -1)
  mutable VectorXd full_in_, full_out_;     // scratch, single-owner use
};

// Checks [op, P] = 0 stochastically, then restricts. Throws
// SymmetryViolationError if the commutator exceeds tolerance on deterministic
// pseudo-random probes.
SectorOperator sector_project(const ManyBodyOperator& op, int parity,
                              double tol = 1e-12);

}  // namespace kitnet
