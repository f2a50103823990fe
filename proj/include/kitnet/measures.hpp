#pragma once

#include <Eigen/Dense>
#include <string>

#include "kitnet/rdm.hpp"
#include "kitnet/state.hpp"

namespace kitnet {

enum class MeasureKind { mutual_information, concurrence, l1_coherence };
enum class LogBase { natural, base2 };

std::string to_string(MeasureKind m);
MeasureKind measure_from_string(const std::string& name);

// -sum lambda log lambda over eigenvalues above 1e-14; validates trace,
// hermiticity and positivity within tolerance first.
double von_neumann_entropy(const Eigen::Ref<const MatrixXcd>& rho,
                           LogBase base = LogBase::natural);

// S(rho_i) + S(rho_j) - S(rho_ij), clamped at zero.
double mutual_information(const QuantumState& state, int i, int j,
                          LogBase base = LogBase::natural,
                          RdmConvention convention = RdmConvention::spin_picture);

// Wootters concurrence via the Hermitian R-matrix route.
double concurrence(const Matrix4cd& rho);

// Closed form for X-shaped states: 2 max(0, |rho23|-sqrt(rho11 rho44),
//                                         |rho14|-sqrt(rho22 rho33)).
double concurrence_x_state(const Matrix4cd& rho);

// Sum of |rho_ab|, a != b, in the occupation basis.
double l1_coherence(const Eigen::Ref<const MatrixXcd>& rho);

// Dispatch used by the network builder.
double evaluate_measure(MeasureKind kind, const Matrix4cd& rho_pair,
                        LogBase base = LogBase::natural);

}  // namespace kitnet
