#include "kitnet/operators.hpp"

#include <bit>
#include <random>

#include "kitnet/errors.hpp"

namespace kitnet {

namespace {

// Sign of a_j (or a_j^dag) acting past the occupied modes below j.
inline double jw_sign(std::uint64_t b, int j) {
  const std::uint64_t below = b & ((std::uint64_t{1} << j) - 1);
  return (std::popcount(below) & 1) ? -1.0 : 1.0;
}

inline bool occupied(std::uint64_t b, int j) { return (b >> j) & 1; }

}  // namespace

ManyBodyOperator::ManyBodyOperator(int n_sites, std::vector<Term> terms)
    : n_sites_(n_sites), terms_(std::move(terms)) {
  if (n_sites < 1 || n_sites > kDefaultMaxSites)
    throw CapacityError("ManyBodyOperator: n_sites out of range");
  const std::size_t dim = dimension();
  diagonal_ = VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const Term& t : terms_) {
    switch (t.kind) {
      case Term::Kind::onsite:
        for (std::size_t b = 0; b < dim; ++b)
          diagonal_[b] += t.coeff * ((occupied(b, t.i) ? 1.0 : 0.0) - 0.5);
        break;
      case Term::Kind::spin_z:
        for (std::size_t b = 0; b < dim; ++b)
          diagonal_[b] += t.coeff * (occupied(b, t.i) ? 1.0 : -1.0);
        break;
      case Term::Kind::parity_diag:
        for (std::size_t b = 0; b < dim; ++b)
          diagonal_[b] += t.coeff * ((std::popcount(b) & 1) ? -1.0 : 1.0);
        break;
      default:
        offdiag_terms_.push_back(t);
        break;
    }
  }
}

template <typename Scalar>
void ManyBodyOperator::apply_into(const Scalar* in, Scalar* out) const {
  const std::size_t dim = dimension();
  for (std::size_t b = 0; b < dim; ++b) out[b] = diagonal_[b] * in[b];

  for (const Term& t : offdiag_terms_) {
    const bool dressed =
        t.kind == Term::Kind::parity_hop || t.kind == Term::Kind::parity_pair;
    switch (t.kind) {
      case Term::Kind::hop:
      case Term::Kind::parity_hop:
        // c * (a_i^dag a_j + a_j^dag a_i), optionally parity-dressed.
        for (std::size_t b = 0; b < dim; ++b) {
          const Scalar x = in[b];
          if (x == Scalar{}) continue;
          for (int dir = 0; dir < 2; ++dir) {
            const int src = dir == 0 ? t.j : t.i;
            const int dst = dir == 0 ? t.i : t.j;
            if (!occupied(b, src) || occupied(b, dst)) continue;
            double s = jw_sign(b, src);
            const std::uint64_t b1 = b ^ (std::uint64_t{1} << src);
            s *= jw_sign(b1, dst);
            const std::uint64_t b2 = b1 | (std::uint64_t{1} << dst);
            if (dressed && (std::popcount(b2) & 1)) s = -s;
            out[b2] += t.coeff * s * x;
          }
        }
        break;
      case Term::Kind::pair:
      case Term::Kind::parity_pair:
        // c * (a_i a_j + a_j^dag a_i^dag), optionally parity-dressed.
        for (std::size_t b = 0; b < dim; ++b) {
          const Scalar x = in[b];
          if (x == Scalar{}) continue;
          if (occupied(b, t.i) && occupied(b, t.j)) {
            // a_i a_j: a_j acts first.
            double s = jw_sign(b, t.j);
            const std::uint64_t b1 = b ^ (std::uint64_t{1} << t.j);
            s *= jw_sign(b1, t.i);
            const std::uint64_t b2 = b1 ^ (std::uint64_t{1} << t.i);
            if (dressed && (std::popcount(b2) & 1)) s = -s;
            out[b2] += t.coeff * s * x;
          }
          if (!occupied(b, t.i) && !occupied(b, t.j)) {
            // a_j^dag a_i^dag: a_i^dag acts first.
            double s = jw_sign(b, t.i);
            const std::uint64_t b1 = b | (std::uint64_t{1} << t.i);
            s *= jw_sign(b1, t.j);
            const std::uint64_t b2 = b1 | (std::uint64_t{1} << t.j);
            if (dressed && (std::popcount(b2) & 1)) s = -s;
            out[b2] += t.coeff * s * x;
          }
        }
        break;
      case Term::Kind::spin_xx:
        for (std::size_t b = 0; b < dim; ++b) {
          const Scalar x = in[b];
          if (x == Scalar{}) continue;
          const std::uint64_t b2 =
              b ^ (std::uint64_t{1} << t.i) ^ (std::uint64_t{1} << t.j);
          out[b2] += t.coeff * x;
        }
        break;
      case Term::Kind::spin_yy:
        // Matrix element -1 when the two bits agree, +1 when they differ.
        for (std::size_t b = 0; b < dim; ++b) {
          const Scalar x = in[b];
          if (x == Scalar{}) continue;
          const double s = occupied(b, t.i) == occupied(b, t.j) ? -1.0 : 1.0;
          const std::uint64_t b2 =
              b ^ (std::uint64_t{1} << t.i) ^ (std::uint64_t{1} << t.j);
          out[b2] += t.coeff * s * x;
        }
        break;
      default:
        break;  // diagonal kinds already folded
    }
  }
}

VectorXcd ManyBodyOperator::apply(const VectorXcd& v) const {
  if (static_cast<std::size_t>(v.size()) != dimension())
    throw DomainError("ManyBodyOperator::apply: dimension mismatch");
  VectorXcd out(v.size());
  apply_into(v.data(), out.data());
  return out;
}

VectorXd ManyBodyOperator::apply(const VectorXd& v) const {
  if (static_cast<std::size_t>(v.size()) != dimension())
    throw DomainError("ManyBodyOperator::apply: dimension mismatch");
  VectorXd out(v.size());
  apply_into(v.data(), out.data());
  return out;
}

Eigen::SparseMatrix<double> ManyBodyOperator::to_sparse(int max_sites) const {
  if (n_sites_ > max_sites)
    throw CapacityError("to_sparse: chain too long for explicit storage");
  const Eigen::Index dim = static_cast<Eigen::Index>(dimension());
  std::vector<Eigen::Triplet<double>> trips;
  VectorXd e = VectorXd::Zero(dim), col(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    e[c] = 1.0;
    col = apply(e);
    e[c] = 0.0;
    for (Eigen::Index r = 0; r < dim; ++r)
      if (col[r] != 0.0) trips.emplace_back(r, c, col[r]);
  }
  Eigen::SparseMatrix<double> m(dim, dim);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

MatrixXd ManyBodyOperator::to_dense(int max_sites) const {
  if (n_sites_ > max_sites)
    throw CapacityError("to_dense: chain too long for dense storage");
  const Eigen::Index dim = static_cast<Eigen::Index>(dimension());
  MatrixXd m(dim, dim);
  VectorXd e = VectorXd::Zero(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    e[c] = 1.0;
    m.col(c) = apply(e);
    e[c] = 0.0;
  }
  return m;
}

bool ManyBodyOperator::parity_preserving() const {
  return true;  // every supported term kind changes occupation by 0 or 2
}

ManyBodyOperator build_kitaev_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n_sites;
  std::vector<Term> terms;
  terms.reserve(3 * n);
  for (int j = 0; j < n; ++j)
    terms.push_back({Term::Kind::onsite, j, j, -spec.chemical_potential});
  const int bonds = spec.boundary == Boundary::periodic ? n : n - 1;
  for (int j = 0; j < bonds; ++j) {
    const int jp = (j + 1) % n;
    terms.push_back({Term::Kind::hop, j, jp, -spec.hopping});
    terms.push_back({Term::Kind::pair, j, jp, spec.pairing});
  }
  return ManyBodyOperator(n, std::move(terms));
}

ManyBodyOperator build_parity_operator(int n_sites) {
  if (n_sites < 1) throw DomainError("build_parity_operator: n_sites must be >= 1");
  return ManyBodyOperator(n_sites, {{Term::Kind::parity_diag, 0, 0, 1.0}});
}

ManyBodyOperator build_xy_hamiltonian(const XYSpec& spec) {
  spec.validate();
  const int n = spec.n_sites;
  const double jx = 0.5 * (spec.coupling_sum + spec.anisotropy);
  const double jy = 0.5 * (spec.coupling_sum - spec.anisotropy);
  std::vector<Term> terms;
  terms.reserve(3 * n);
  for (int i = 0; i < n; ++i) {
    const int ip = (i + 1) % n;
    terms.push_back({Term::Kind::spin_xx, i, ip, -jx});
    terms.push_back({Term::Kind::spin_yy, i, ip, -jy});
    terms.push_back({Term::Kind::spin_z, i, i, -0.5 * spec.field});
  }
  return ManyBodyOperator(n, std::move(terms));
}

ManyBodyOperator build_jw_boundary_term(const XYSpec& spec) {
  spec.validate();
  const int n = spec.n_sites;
  std::vector<Term> terms;
  // P * (J a_N^dag a_1 + h.c.)  and  P * (gamma a_N^dag a_1^dag + h.c.).
  // The pair kind c*(a_i a_j + a_j^dag a_i^dag) matches the h.c. written out:
  // gamma (a_1 a_N + a_N^dag a_1^dag) with (i, j) = (0, n-1).
  if (spec.coupling_sum != 0.0)
    terms.push_back({Term::Kind::parity_hop, n - 1, 0, spec.coupling_sum});
  if (spec.anisotropy != 0.0)
    terms.push_back({Term::Kind::parity_pair, 0, n - 1, spec.anisotropy});
  return ManyBodyOperator(n, std::move(terms));
}

ManyBodyOperator build_jw_open_image(const XYSpec& spec) {
  spec.validate();
  ChainSpec chain;
  chain.n_sites = spec.n_sites;
  chain.hopping = spec.coupling_sum;
  chain.pairing = spec.anisotropy;
  chain.chemical_potential = spec.field;
  chain.boundary = Boundary::open;
  return build_kitaev_hamiltonian(chain);
}

SectorOperator::SectorOperator(const ManyBodyOperator& op, int parity)
    : op_(&op), parity_(parity) {
  if (parity != 1 && parity != -1)
    throw DomainError("SectorOperator: parity must be +1 or -1");
  const std::size_t dim = op.dimension();
  const int want = parity == -1 ? 1 : 0;
  rank_.assign(dim, -1);
  basis_.reserve(dim / 2);
  for (std::size_t b = 0; b < dim; ++b) {
    if ((std::popcount(b) & 1) == want) {
      rank_[b] = static_cast<std::int32_t>(basis_.size());
      basis_.push_back(static_cast<std::uint32_t>(b));
    }
  }
  full_in_ = VectorXd::Zero(static_cast<Eigen::Index>(dim));
  full_out_ = VectorXd::Zero(static_cast<Eigen::Index>(dim));
}

VectorXd SectorOperator::apply(const VectorXd& v) const {
  if (static_cast<std::size_t>(v.size()) != basis_.size())
    throw DomainError("SectorOperator::apply: dimension mismatch");
  for (std::size_t s = 0; s < basis_.size(); ++s) full_in_[basis_[s]] = v[s];
  full_out_ = op_->apply(full_in_);
  VectorXd out(v.size());
  for (std::size_t s = 0; s < basis_.size(); ++s) out[s] = full_out_[basis_[s]];
  return out;
}

MatrixXd SectorOperator::to_dense(int max_sites) const {
  if (op_->n_sites() > max_sites)
    throw CapacityError("SectorOperator::to_dense: chain too long");
  const Eigen::Index dim = static_cast<Eigen::Index>(basis_.size());
  MatrixXd m(dim, dim);
  VectorXd e = VectorXd::Zero(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    e[c] = 1.0;
    m.col(c) = apply(e);
    e[c] = 0.0;
  }
  return m;
}

VectorXcd SectorOperator::lift(const VectorXd& v) const {
  VectorXcd full = VectorXcd::Zero(static_cast<Eigen::Index>(op_->dimension()));
  for (std::size_t s = 0; s < basis_.size(); ++s)
    full[basis_[s]] = Complex(v[s], 0.0);
  return full;
}

SectorOperator sector_project(const ManyBodyOperator& op, int parity, double tol) {
  const std::size_t dim = op.dimension();
  std::mt19937 rng(0x5ec7u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const ManyBodyOperator p = build_parity_operator(op.n_sites());
  for (int probe = 0; probe < 5; ++probe) {
    VectorXd v(static_cast<Eigen::Index>(dim));
    for (std::size_t b = 0; b < dim; ++b) v[b] = gauss(rng);
    v.normalize();
    const VectorXd comm = op.apply(p.apply(v)) - p.apply(op.apply(v));
    const double scale = std::max(1.0, op.apply(v).norm());
    if (comm.norm() > tol * scale)
      throw SymmetryViolationError(
          "sector_project: operator does not commute with parity");
  }
  return SectorOperator(op, parity);
}

}  // namespace kitnet
