#include "kitnet/scan.hpp"

#include <algorithm>
#include <cmath>

#include "kitnet/errors.hpp"
#include "kitnet/freefermion.hpp"
#include "kitnet/parallel.hpp"
#include "kitnet/theory.hpp"

namespace kitnet {

namespace {

std::vector<double> predicted_degeneracy_points(const ChainSpec& chain) {
  std::vector<double> pts;
  const double w = chain.hopping;
  if (chain.boundary == Boundary::periodic) {
    pts.push_back(2.0 * w);
    pts.push_back(-2.0 * w);
    const double disc = w * w - chain.pairing * chain.pairing;
    if (disc >= 0.0) {
      pts.push_back(2.0 * std::sqrt(disc));
      pts.push_back(-2.0 * std::sqrt(disc));
    }
  } else {
    const auto zm = majorana_zero_mode_potentials(chain.n_sites, w, chain.pairing);
    pts.insert(pts.end(), zm.values.begin(), zm.values.end());
  }
  return pts;
}

std::vector<double> make_grid(const SweepSpec& spec) {
  std::vector<double> grid;
  if (spec.mu_hi <= spec.mu_lo || spec.base_points <= 1) {
    grid.push_back(spec.mu_lo);
  } else {
    grid.reserve(spec.base_points);
    const double step = (spec.mu_hi - spec.mu_lo) / (spec.base_points - 1);
    for (int t = 0; t < spec.base_points; ++t) grid.push_back(spec.mu_lo + t * step);
  }
  // Nudge grid points sitting exactly on predicted degeneracies off by 1e-9
  // so tie-break artifacts cannot enter the records.
  const auto degen = predicted_degeneracy_points(spec.chain);
  for (double& mu : grid)
    for (double d : degen)
      if (std::abs(mu - d) < 1e-12) mu = d + 1e-9;
  return grid;
}

SweepRecord solve_point(const SweepSpec& spec, double mu) {
  SweepRecord rec;
  rec.mu = mu;
  try {
    ChainSpec chain = spec.chain;
    chain.chemical_potential = mu;
    const QuantumState g = ground_state(chain, spec.solver);
    rec.parity = g.parity_expectation >= 0.0 ? 1 : -1;
    rec.energy = g.energy;
    rec.degenerate = g.degenerate;
    rec.metrics.reserve(spec.measures.size());
    for (MeasureKind m : spec.measures) {
      const CorrelationNetwork net = build_network(g, m, spec.network_options);
      const NetworkReport rep = network_report(net);
      MeasureMetrics mm;
      mm.measure = m;
      mm.clustering = rep.clustering;
      mm.mean_density = rep.mean_density;
      mm.densities = rep.densities;
      rec.metrics.push_back(std::move(mm));
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

int parity_at(const SweepSpec& spec, double mu) {
  ChainSpec chain = spec.chain;
  chain.chemical_potential = mu;
  const QuantumState g = ground_state(chain, spec.solver);
  return g.parity_expectation >= 0.0 ? 1 : -1;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  spec.chain.validate();
  if (spec.resolution <= 0.0) throw DomainError("run_sweep: resolution must be > 0");
  const std::vector<double> grid = make_grid(spec);
  std::vector<SweepRecord> records(grid.size());
  const unsigned workers = spec.workers ? spec.workers : default_worker_count();
  parallel_for(grid.size(), workers,
               [&](std::size_t t) { records[t] = solve_point(spec, grid[t]); });
  return records;
}

CriticalPointReport detect_discontinuities(const std::vector<SweepRecord>& records,
                                           const SweepSpec& spec,
                                           double jump_factor) {
  if (records.size() < 3)
    throw DomainError("detect_discontinuities: need at least 3 records");
  CriticalPointReport report;

  // Metric series: label -> per-record values (NaN where unavailable).
  struct Series {
    std::string label;
    std::vector<double> values;
  };
  std::vector<Series> series;
  if (!records.empty() && records.front().ok()) {
    for (std::size_t m = 0; m < records.front().metrics.size(); ++m) {
      const std::string base = to_string(records.front().metrics[m].measure);
      series.push_back({base + ":clustering", {}});
      series.push_back({base + ":mean_density", {}});
    }
  }
  for (const SweepRecord& r : records) {
    for (std::size_t m = 0; m < series.size() / 2; ++m) {
      const bool has = r.ok() && m < r.metrics.size();
      series[2 * m].values.push_back(
          has && r.metrics[m].clustering ? *r.metrics[m].clustering
                                         : std::numeric_limits<double>::quiet_NaN());
      series[2 * m + 1].values.push_back(
          has ? r.metrics[m].mean_density : std::numeric_limits<double>::quiet_NaN());
    }
  }

  auto jump_between = [&](const Series& s, std::size_t t) {
    const double a = s.values[t], b = s.values[t + 1];
    return (std::isnan(a) || std::isnan(b)) ? 0.0 : std::abs(b - a);
  };
  auto median_jump = [&](const Series& s) {
    std::vector<double> diffs;
    for (std::size_t t = 0; t + 1 < s.values.size(); ++t) {
      const double d = jump_between(s, t);
      if (!std::isnan(s.values[t]) && !std::isnan(s.values[t + 1])) diffs.push_back(d);
    }
    if (diffs.empty()) return 0.0;
    std::nth_element(diffs.begin(), diffs.begin() + diffs.size() / 2, diffs.end());
    return diffs[diffs.size() / 2];
  };

  // Primary detector: parity flips, refined by bisection on parity.
  std::vector<std::size_t> switch_intervals;
  for (std::size_t t = 0; t + 1 < records.size(); ++t) {
    const SweepRecord &a = records[t], &b = records[t + 1];
    if (!a.ok() || !b.ok()) continue;
    if (a.parity == b.parity) continue;
    switch_intervals.push_back(t);

    double lo = a.mu, hi = b.mu;
    const int p_lo = a.parity;
    while (hi - lo > spec.resolution) {
      const double mid = 0.5 * (lo + hi);
      if (parity_at(spec, mid) == p_lo)
        lo = mid;
      else
        hi = mid;
    }

    // One discontinuity entry per metric series, sharing the refined location.
    if (series.empty()) {
      Discontinuity d;
      d.mu_location = 0.5 * (lo + hi);
      d.resolution = spec.resolution;
      d.parity_before = a.parity;
      d.parity_after = b.parity;
      report.discontinuities.push_back(d);
    }
    for (const Series& s : series) {
      Discontinuity d;
      d.mu_location = 0.5 * (lo + hi);
      d.resolution = spec.resolution;
      d.parity_before = a.parity;
      d.parity_after = b.parity;
      d.metric = s.label;
      d.jump_size = jump_between(s, t);
      report.discontinuities.push_back(d);
    }
  }

  // Secondary detector: metric jumps without a parity flip, advisory only.
  for (const Series& s : series) {
    const double med = median_jump(s);
    if (med <= 0.0) continue;
    for (std::size_t t = 0; t + 1 < records.size(); ++t) {
      if (std::find(switch_intervals.begin(), switch_intervals.end(), t) !=
          switch_intervals.end())
        continue;
      const double jump = jump_between(s, t);
      if (jump > jump_factor * med) {
        Discontinuity d;
        d.mu_location = 0.5 * (records[t].mu + records[t + 1].mu);
        d.resolution = records[t + 1].mu - records[t].mu;
        d.parity_switch = false;
        d.metric = s.label;
        d.jump_size = jump;
        report.discontinuities.push_back(d);
      }
    }
  }

  // Cross-reference closed-form predictions within the swept range.
  auto add_prediction = [&](const std::string& label, double value) {
    if (value < records.front().mu - spec.resolution ||
        value > records.back().mu + spec.resolution)
      return;
    PredictionStatus p;
    p.label = label;
    p.value = value;
    for (Discontinuity& d : report.discontinuities) {
      if (!d.parity_switch) continue;
      if (std::abs(d.mu_location - value) <= std::max(2.0 * spec.resolution, 1e-3)) {
        p.matched = true;
        if (!d.matched_prediction) d.matched_prediction = value;
      }
    }
    report.predictions.push_back(p);
  };

  const double w = spec.chain.hopping;
  if (spec.chain.boundary == Boundary::periodic) {
    add_prediction("mu_c", 2.0 * w);
    add_prediction("mu_c_neg", -2.0 * w);
    const double disc = w * w - spec.chain.pairing * spec.chain.pairing;
    if (disc >= 0.0) add_prediction("mu_star", 2.0 * std::sqrt(disc));
  } else {
    const auto zm =
        majorana_zero_mode_potentials(spec.chain.n_sites, w, spec.chain.pairing);
    int idx = 1;
    for (auto it = zm.values.rbegin(); it != zm.values.rend(); ++it, ++idx)
      add_prediction("mu_" + std::to_string(idx), *it);
  }
  return report;
}

C1Point locate_c1_point(const ChainSpec& chain_template, double pairing,
                        MeasureKind measure, const SweepSpec& scan_defaults) {
  ChainSpec chain = chain_template;
  chain.pairing = pairing;
  chain.validate();

  C1Point out;
  const double w = chain.hopping;
  const double disc = w * w - pairing * pairing;
  out.predicted_mu_star = disc >= 0.0 ? 2.0 * std::sqrt(disc) : 0.0;

  SweepSpec spec = scan_defaults;
  spec.chain = chain;
  spec.measures = {measure};
  spec.mu_lo = 1e-3 * w;
  spec.mu_hi = 2.0 * w - 1e-3 * w;
  spec.base_points = 121;
  const unsigned workers = spec.workers ? spec.workers : default_worker_count();

  auto clustering_at = [&](double mu) -> double {
    ChainSpec c = chain;
    c.chemical_potential = mu;
    const QuantumState g = ground_state(c, spec.solver);
    const auto cl = clustering(build_network(g, measure, spec.network_options));
    return cl ? *cl : -1.0;
  };
  auto clustering_many = [&](const std::vector<double>& mus) {
    std::vector<double> vals(mus.size());
    parallel_for(mus.size(), workers,
                 [&](std::size_t t) { vals[t] = clustering_at(mus[t]); });
    return vals;
  };

  struct Candidate {
    double mu, value, halfwidth;
  };

  // Staged dense zoom followed by golden-section. The maximum is a kink and
  // its basin narrows sharply with chain length, so the bracket must shrink
  // to ~1e-6 before the value at the maximizer saturates.
  auto refine = [&](Candidate cand) {
    while (cand.halfwidth > 2e-6) {
      const double lo = std::max(spec.mu_lo, cand.mu - cand.halfwidth);
      const double hi = std::min(spec.mu_hi, cand.mu + cand.halfwidth);
      const int points = 13;
      std::vector<double> mus(points);
      for (int t = 0; t < points; ++t)
        mus[t] = lo + (hi - lo) * t / (points - 1);
      const std::vector<double> vals = clustering_many(mus);
      std::size_t best = 0;
      for (std::size_t t = 1; t < mus.size(); ++t)
        if (vals[t] > vals[best]) best = t;
      if (vals[best] > cand.value) {
        cand.mu = mus[best];
        cand.value = vals[best];
      }
      cand.halfwidth = (hi - lo) / (points - 1);
    }

    double lo = std::max(spec.mu_lo, cand.mu - cand.halfwidth);
    double hi = std::min(spec.mu_hi, cand.mu + cand.halfwidth);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = clustering_at(x1);
    double f2 = clustering_at(x2);
    while (hi - lo > 1e-7) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = clustering_at(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = clustering_at(x1);
      }
    }
    if (std::max(f1, f2) > cand.value) {
      cand.mu = f1 > f2 ? x1 : x2;
      cand.value = std::max(f1, f2);
    }
    return cand;
  };

  const std::vector<SweepRecord> coarse = run_sweep(spec);
  std::vector<double> values(coarse.size());
  for (std::size_t t = 0; t < coarse.size(); ++t) {
    const auto& r = coarse[t];
    values[t] = r.ok() && !r.metrics.empty() && r.metrics[0].clustering
                    ? *r.metrics[0].clustering
                    : -1.0;
  }
  std::size_t best = 0;
  for (std::size_t t = 1; t < values.size(); ++t)
    if (values[t] > values[best]) best = t;
  if (values[best] < 0.0) return out;  // clustering undefined everywhere
  const double step = coarse[1].mu - coarse[0].mu;

  // Candidate brackets: the closed-form prediction first (its basin is too
  // narrow for any coarse grid to see at larger chain lengths), then the
  // coarse argmax and up to two further near-maximal local peaks as a
  // multi-modality guard. The value is capped at one, so refinement stops as
  // soon as a candidate saturates.
  std::vector<Candidate> candidates;
  if (disc > 0.0 && out.predicted_mu_star > spec.mu_lo &&
      out.predicted_mu_star < spec.mu_hi)
    candidates.push_back({out.predicted_mu_star, -1.0, 2e-4});
  candidates.push_back({coarse[best].mu, values[best], step});
  std::vector<Candidate> side_peaks;
  for (std::size_t t = 1; t + 1 < values.size(); ++t)
    if (t != best && values[t] >= values[t - 1] && values[t] >= values[t + 1] &&
        values[t] >= values[best] - 1e-3 &&
        std::abs(coarse[t].mu - coarse[best].mu) > 3.0 * step)
      side_peaks.push_back({coarse[t].mu, values[t], step});
  std::sort(side_peaks.begin(), side_peaks.end(),
            [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
  for (std::size_t t = 0; t < side_peaks.size() && t < 2; ++t)
    candidates.push_back(side_peaks[t]);

  Candidate winner{coarse[best].mu, values[best], step};
  bool first = true;
  for (const Candidate& cand : candidates) {
    const Candidate refined = refine(cand);
    if (first || refined.value > winner.value) {
      winner = refined;
      first = false;
    }
    if (winner.value >= 1.0 - 1e-7) break;
  }

  out.mu_location = winner.mu;
  out.clustering = winner.value;
  out.found = winner.value >= 1.0 - 1e-3;
  return out;
}

std::vector<FidelityPoint> fidelity_sweep(double reference_mu, double mu_lo,
                                          double mu_hi, int points,
                                          const ChainSpec& chain_template,
                                          unsigned workers) {
  chain_template.validate();
  if (points < 1) throw DomainError("fidelity_sweep: points must be >= 1");
  ChainSpec ref_chain = chain_template;
  ref_chain.chemical_potential = reference_mu;
  const QuantumState ref = ground_state(ref_chain);

  std::vector<double> grid;
  if (points == 1 || mu_hi <= mu_lo) {
    grid.push_back(mu_lo);
  } else {
    for (int t = 0; t < points; ++t)
      grid.push_back(mu_lo + (mu_hi - mu_lo) * t / (points - 1));
  }
  std::vector<FidelityPoint> out(grid.size());
  parallel_for(grid.size(), workers ? workers : default_worker_count(),
               [&](std::size_t t) {
                 ChainSpec c = chain_template;
                 c.chemical_potential = grid[t];
                 out[t] = {grid[t], fidelity(ref, ground_state(c))};
               });
  return out;
}

}  // namespace kitnet
