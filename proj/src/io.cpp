#include "kitnet/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

#include "kitnet/errors.hpp"

namespace kitnet {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string sweep_csv(const std::vector<SweepRecord>& records, const SweepSpec& spec) {
  std::string out = "mu,N,delta,w,boundary,parity,energy,degenerate,measure,"
                    "clustering,mean_density";
  for (int i = 0; i < spec.chain.n_sites; ++i) out += ",d_" + std::to_string(i);
  out += "\n";

  const std::string chain_cols = std::to_string(spec.chain.n_sites) + "," +
                                 format_double(spec.chain.pairing) + "," +
                                 format_double(spec.chain.hopping) + "," +
                                 to_string(spec.chain.boundary);
  for (const SweepRecord& r : records) {
    for (const MeasureMetrics& m : r.metrics) {
      out += format_double(r.mu) + "," + chain_cols + ",";
      if (r.ok()) {
        out += std::to_string(r.parity) + "," + format_double(r.energy) + "," +
               (r.degenerate ? "1" : "0");
      } else {
        out += ",,";
      }
      out += "," + to_string(m.measure) + ",";
      if (m.clustering) out += format_double(*m.clustering);
      out += "," + format_double(m.mean_density);
      for (double d : m.densities) out += "," + format_double(d);
      out += "\n";
    }
    if (r.metrics.empty()) {  // failed point without metrics: keep the row
      out += format_double(r.mu) + "," + chain_cols + ",,,,,,";
      for (int i = 0; i < spec.chain.n_sites; ++i) out += ",";
      out += "\n";
    }
  }
  return out;
}

std::string network_matrix_csv(const CorrelationNetwork& net) {
  std::string out;
  const int n = net.n_nodes();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ",";
      out += format_g17(net.weights(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string network_sidecar_json(const CorrelationNetwork& net) {
  const json j = {{"n", net.n_nodes()},
                  {"measure", to_string(net.measure)},
                  {"normalization", to_string(net.normalization)}};
  return j.dump(2) + "\n";
}

std::string report_json(const CriticalPointReport& report, const SweepSpec& spec) {
  json j;
  j["chain"] = {{"n", spec.chain.n_sites},
                {"w", spec.chain.hopping},
                {"delta", spec.chain.pairing},
                {"boundary", to_string(spec.chain.boundary)}};
  j["mu_range"] = {spec.mu_lo, spec.mu_hi};
  j["resolution"] = spec.resolution;
  j["discontinuities"] = json::array();
  for (const Discontinuity& d : report.discontinuities) {
    json e = {{"mu_location", d.mu_location},
              {"resolution", d.resolution},
              {"parity_switch", d.parity_switch},
              {"metric", d.metric},
              {"jump_size", d.jump_size}};
    if (d.parity_switch) {
      e["parity_before"] = d.parity_before;
      e["parity_after"] = d.parity_after;
    }
    if (d.matched_prediction) e["matched_prediction"] = *d.matched_prediction;
    j["discontinuities"].push_back(e);
  }
  j["predictions"] = json::array();
  for (const PredictionStatus& p : report.predictions)
    j["predictions"].push_back(
        {{"label", p.label}, {"value", p.value}, {"matched", p.matched}});
  return j.dump(2) + "\n";
}

std::string c1_point_json(const C1Point& point, MeasureKind measure) {
  json j = {{"measure", to_string(measure)},
            {"found", point.found},
            {"predicted_mu_star", point.predicted_mu_star}};
  if (point.found || point.clustering > 0.0) {
    j["mu_location"] = point.mu_location;
    j["clustering"] = point.clustering;
  }
  return j.dump(2) + "\n";
}

std::string fidelity_csv(const std::vector<FidelityPoint>& series) {
  std::string out = "mu,fidelity\n";
  for (const FidelityPoint& p : series)
    out += format_double(p.mu) + "," + format_double(p.fidelity) + "\n";
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << contents;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace kitnet
