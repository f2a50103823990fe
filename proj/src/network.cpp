#include "kitnet/network.hpp"

#include "kitnet/errors.hpp"

namespace kitnet {

std::string to_string(Normalization n) {
  return n == Normalization::max_normalized ? "max_normalized" : "raw";
}

CorrelationNetwork build_network(const QuantumState& state, MeasureKind measure,
                                 const NetworkBuildOptions& opts) {
  const int n = state.n_sites();
  CorrelationNetwork net;
  net.measure = measure;
  net.normalization = opts.normalization;
  net.weights = MatrixXd::Zero(n, n);

  const bool fast = state.definite_parity() &&
                    opts.rdm_convention == RdmConvention::spin_picture;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Matrix4cd rho = fast ? pair_correlators(state, i, j).assemble()
                           : reduce_to_pair(state, i, j, opts.rdm_convention).entries;
      double w = evaluate_measure(measure, rho, opts.log_base);
      if (w < 1e-14) w = 0.0;  // suppress noise before max-normalization
      net.weights(i, j) = net.weights(j, i) = w;
    }
  }
  return net;
}

double node_density(const CorrelationNetwork& net, int i) {
  const int n = net.n_nodes();
  if (i < 0 || i >= n) throw DomainError("node_density: index out of range");
  return net.weights.row(i).sum() / (n - 1);
}

namespace {

std::optional<MatrixXd> normalized_weights(const CorrelationNetwork& net) {
  const double wmax = net.weights.maxCoeff();
  if (wmax <= 0.0) return std::nullopt;  // no weight anywhere: undefined
  if (net.normalization == Normalization::raw) return net.weights;
  return net.weights / wmax;
}

}  // namespace

std::optional<double> clustering(const CorrelationNetwork& net) {
  const int n = net.n_nodes();
  if (n < 3) throw DomainError("clustering: at least 3 nodes required");
  const auto e = normalized_weights(net);
  if (!e) return std::nullopt;
  const double numerator = (*e * *e * *e).trace();
  double denominator = 0.0;
  for (int k = 0; k < n; ++k) {
    const double s = e->col(k).sum();
    const double q = e->col(k).squaredNorm();
    denominator += s * s - q;
  }
  if (denominator <= 0.0) return std::nullopt;
  return numerator / denominator;
}

std::optional<double> clustering_reference(const CorrelationNetwork& net) {
  const int n = net.n_nodes();
  if (n < 3) throw DomainError("clustering: at least 3 nodes required");
  const auto e = normalized_weights(net);
  if (!e) return std::nullopt;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        num += (*e)(i, j) * (*e)(j, k) * (*e)(k, i);
        den += (*e)(i, k) * (*e)(j, k);
      }
  if (den <= 0.0) return std::nullopt;
  return num / den;
}

NetworkReport network_report(const CorrelationNetwork& net) {
  const int n = net.n_nodes();
  NetworkReport rep;
  rep.densities.reserve(n);
  for (int i = 0; i < n; ++i) rep.densities.push_back(node_density(net, i));
  rep.mean_density = net.weights.sum() / (static_cast<double>(n) * (n - 1));
  rep.clustering = clustering(net);
  return rep;
}

}  // namespace kitnet
