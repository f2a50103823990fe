#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "kitnet/measures.hpp"
#include "kitnet/state.hpp"

namespace kitnet {

enum class Normalization { max_normalized, raw };

std::string to_string(Normalization n);

// Symmetric nonnegative weight matrix over the chain sites, one weight per
// unordered pair, tagged by the measure that produced it.
struct CorrelationNetwork {
  MatrixXd weights;  // N x N, zero diagonal
  MeasureKind measure = MeasureKind::concurrence;
  Normalization normalization = Normalization::max_normalized;

  int n_nodes() const { return static_cast<int>(weights.rows()); }
};

struct NetworkBuildOptions {
  LogBase log_base = LogBase::natural;
  RdmConvention rdm_convention = RdmConvention::spin_picture;
  Normalization normalization = Normalization::max_normalized;
};

CorrelationNetwork build_network(const QuantumState& state, MeasureKind measure,
                                 const NetworkBuildOptions& opts = {});

// d_i = sum_j e_ij / (N-1), on raw weights.
double node_density(const CorrelationNetwork& net, int i);

// Weighted clustering: sum over ordered triples of pairwise-distinct nodes of
// e_ij e_jk e_ki over the open-triplet sum sum_k sum_{i!=j!=k} e_ik e_jk.
// Weights are divided by the maximum first unless normalization is raw.
// Undefined (no value) when the network has no weight at all.
std::optional<double> clustering(const CorrelationNetwork& net);

// Literal O(N^3) triple loop, kept as the independent reference for the
// vectorized implementation.
std::optional<double> clustering_reference(const CorrelationNetwork& net);

struct NetworkReport {
  std::vector<double> densities;
  double mean_density = 0.0;
  std::optional<double> clustering;
};

NetworkReport network_report(const CorrelationNetwork& net);

}  // namespace kitnet
