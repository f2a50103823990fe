#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "kitnet/freefermion.hpp"
#include "kitnet/io.hpp"
#include "kitnet/scan.hpp"
#include "kitnet/theory.hpp"

using namespace kitnet;
using namespace kitnet::testing;

namespace {

SweepSpec base_spec(int n, double delta, Boundary b = Boundary::periodic) {
  SweepSpec s;
  s.chain.n_sites = n;
  s.chain.pairing = delta;
  s.chain.boundary = b;
  return s;
}

}  // namespace

TEST_CASE("degenerate range collapses to a single record") {
  SweepSpec s = base_spec(6, 0.5);
  s.mu_lo = s.mu_hi = 1.3;
  s.base_points = 50;
  const auto records = run_sweep(s);
  REQUIRE(records.size() == 1);
  CHECK(records[0].mu == doctest::Approx(1.3));
  CHECK(records[0].parity == -1);
}

TEST_CASE("sweep output is deterministic and ordered") {
  SweepSpec s = base_spec(8, 0.5);
  s.mu_lo = 0.0;
  s.mu_hi = 3.0;
  s.base_points = 31;
  s.measures = {MeasureKind::concurrence, MeasureKind::mutual_information};
  const auto a = run_sweep(s);
  const auto b = run_sweep(s);
  CHECK(sweep_csv(a, s) == sweep_csv(b, s));
  for (std::size_t t = 0; t + 1 < a.size(); ++t) CHECK(a[t].mu < a[t + 1].mu);
  // single-threaded run agrees bit for bit with the pooled one
  SweepSpec serial = s;
  serial.workers = 1;
  CHECK(sweep_csv(run_sweep(serial), serial) == sweep_csv(a, s));
}

TEST_CASE("periodic chain: one parity switch, at the critical potential") {
  for (double delta : {0.5, 1.0, 2.0}) {
    SweepSpec s = base_spec(8, delta);
    s.mu_lo = 0.5;
    s.mu_hi = 3.0;
    s.base_points = 51;
    s.measures = {MeasureKind::mutual_information};
    const auto records = run_sweep(s);
    const auto report = detect_discontinuities(records, s);
    std::vector<double> locations;
    for (const auto& d : report.discontinuities)
      if (d.parity_switch &&
          (locations.empty() || std::abs(locations.back() - d.mu_location) > 1e-9))
        locations.push_back(d.mu_location);
    REQUIRE(locations.size() == 1);
    CHECK(std::abs(locations[0] - 2.0) <= 1e-3);
    // refinement soundness: parity really flips within +-resolution
    ChainSpec lo = s.chain, hi = s.chain;
    lo.chemical_potential = locations[0] - s.resolution;
    hi.chemical_potential = locations[0] + s.resolution;
    CHECK(ground_state(lo).parity_expectation < 0.0);
    CHECK(ground_state(hi).parity_expectation > 0.0);
    // the prediction table sees the match
    bool matched = false;
    for (const auto& p : report.predictions)
      if (p.label == "mu_c") matched = p.matched;
    CHECK(matched);
  }
}

TEST_CASE("open chain: every zero-mode potential appears as a switch") {
  for (double delta : {0.1, 0.5}) {
    SweepSpec s = base_spec(8, delta, Boundary::open);
    s.mu_lo = 0.05;
    s.mu_hi = 2.0;
    s.base_points = 81;
    s.measures = {MeasureKind::concurrence};
    const auto report = detect_discontinuities(run_sweep(s), s);
    std::vector<double> locations;
    for (const auto& d : report.discontinuities)
      if (d.parity_switch &&
          (locations.empty() || std::abs(locations.back() - d.mu_location) > 1e-9))
        locations.push_back(d.mu_location);
    REQUIRE(locations.size() == 4);
    const auto zm = majorana_zero_mode_potentials(8, 1.0, delta);
    std::vector<double> expected;
    for (double v : zm.values)
      if (v > 0.0) expected.push_back(v);
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < 4; ++k) CHECK(std::abs(locations[k] - expected[k]) <= 1e-3);
  }
}

TEST_CASE("constant series yields no detections") {
  SweepSpec s = base_spec(6, 0.5);
  s.resolution = 1e-3;
  std::vector<SweepRecord> records;
  for (int t = 0; t < 10; ++t) {
    SweepRecord r;
    r.mu = 0.1 * t;
    r.parity = -1;
    r.energy = -5.0;
    MeasureMetrics m;
    m.measure = MeasureKind::concurrence;
    m.clustering = 0.5;
    m.mean_density = 0.25;
    r.metrics.push_back(m);
    records.push_back(r);
  }
  const auto report = detect_discontinuities(records, s);
  CHECK(report.discontinuities.empty());
}

TEST_CASE("mirror sweep reproduces detections at negative potential") {
  SweepSpec pos = base_spec(8, 0.6);
  pos.mu_lo = 0.5;
  pos.mu_hi = 3.0;
  pos.base_points = 41;
  pos.measures = {MeasureKind::mutual_information};
  SweepSpec neg = pos;
  neg.mu_lo = -3.0;
  neg.mu_hi = -0.5;

  auto locations = [&](const SweepSpec& s) {
    std::vector<double> out;
    for (const auto& d : detect_discontinuities(run_sweep(s), s).discontinuities)
      if (d.parity_switch && (out.empty() || std::abs(out.back() - d.mu_location) > 1e-9))
        out.push_back(d.mu_location);
    return out;
  };
  const auto lp = locations(pos);
  const auto ln = locations(neg);
  REQUIRE(lp.size() == 1);
  REQUIRE(ln.size() == 1);
  CHECK(std::abs(lp[0] + ln[0]) <= 2e-3);
}

TEST_CASE("c1 search finds the factorization point below w and nothing above") {
  ChainSpec chain;
  chain.n_sites = 8;
  const C1Point hit = locate_c1_point(chain, 0.5, MeasureKind::concurrence);
  CHECK(hit.found);
  CHECK(std::abs(hit.mu_location - std::sqrt(3.0)) <= 1e-3);
  CHECK(hit.clustering >= 1.0 - 1e-6);

  const C1Point miss = locate_c1_point(chain, 2.0, MeasureKind::concurrence);
  CHECK(!miss.found);
}

TEST_CASE("fidelity sweep: reference overlap, continuity, sector orthogonality") {
  ChainSpec chain;
  chain.n_sites = 8;
  chain.pairing = 0.5;
  const auto series = fidelity_sweep(1.0, 1.0, 3.0, 41, chain);
  REQUIRE(series.size() == 41);
  CHECK(series.front().fidelity == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t t = 0; t + 1 < series.size(); ++t) {
    if (series[t].mu >= 1.0 && series[t + 1].mu <= 1.9)
      CHECK(std::abs(series[t + 1].fidelity - series[t].fidelity) < 0.1);
    if (series[t].mu > 2.0) CHECK(series[t].fidelity <= 1e-10);
  }
}
