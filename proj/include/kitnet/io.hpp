#pragma once

#include <string>
#include <vector>

#include "kitnet/network.hpp"
#include "kitnet/scan.hpp"

namespace kitnet {

// Shortest round-trip decimal form of a double (to_chars); re-parsing yields
// the identical bits.
std::string format_double(double v);

// Fixed "%.17g" form used by the network matrix export.
std::string format_g17(double v);

// Sweep table with the fixed column schema
// mu,N,delta,w,boundary,parity,energy,degenerate,measure,clustering,
// mean_density,d_0,...,d_{N-1}; one row per (grid point, measure); missing
// clustering serialized as an empty field.
std::string sweep_csv(const std::vector<SweepRecord>& records, const SweepSpec& spec);

// Square weight matrix, one row per node, %.17g entries.
std::string network_matrix_csv(const CorrelationNetwork& net);
// Sidecar {n, measure, normalization}.
std::string network_sidecar_json(const CorrelationNetwork& net);

std::string report_json(const CriticalPointReport& report, const SweepSpec& spec);
std::string c1_point_json(const C1Point& point, MeasureKind measure);
std::string fidelity_csv(const std::vector<FidelityPoint>& series);

void write_file(const std::string& path, const std::string& contents);

}  // namespace kitnet
