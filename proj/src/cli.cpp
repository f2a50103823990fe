#include "kitnet/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <set>

#include "kitnet/errors.hpp"
#include "kitnet/freefermion.hpp"
#include "kitnet/io.hpp"
#include "kitnet/theory.hpp"

namespace kitnet {
namespace cli {

using nlohmann::json;

SweepSpec RunConfig::to_sweep_spec() const {
  SweepSpec s;
  s.chain = chain;
  s.mu_lo = mu_lo;
  s.mu_hi = mu_hi;
  s.base_points = points;
  s.resolution = resolution;
  s.measures = measures.empty()
                   ? std::vector<MeasureKind>{MeasureKind::concurrence}
                   : measures;
  s.network_options.normalization = normalization;
  s.network_options.log_base = log_base;
  s.network_options.rdm_convention = rdm_convention;
  s.workers = workers;
  return s;
}

namespace {

const std::set<std::string> kConfigKeys = {
    "n",        "w",          "mu",      "delta",    "boundary", "mu-range",
    "points",   "resolution", "measure", "log-base", "clustering",
    "rdm",      "workers",    "out",     "network-out", "locate-c1"};

// Flat JSON config -> synthetic argv entries, inserted ahead of the real
// flags so that explicit flags win.
std::vector<std::string> config_to_args(const std::string& path,
                                        const std::vector<std::string>& real_args) {
  std::ifstream f(path);
  if (!f) throw DomainError("config: cannot open file " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config: expected a flat JSON object");

  auto given = [&](const std::string& flag) {
    for (const std::string& a : real_args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };

  std::vector<std::string> args;
  for (const auto& [key, value] : j.items()) {
    if (!kConfigKeys.count(key))
      throw DomainError("config: unknown key \"" + key + "\"");
    const std::string flag = "--" + key;
    if (given(flag)) continue;  // explicit flag overrides the file
    auto push_scalar = [&](const json& v) {
      if (v.is_boolean()) {
        args.push_back(v.get<bool>() ? flag : flag + "=false");
        return;
      }
      args.push_back(flag);
      args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    };
    if (value.is_array())
      for (const auto& v : value) push_scalar(v);
    else
      push_scalar(value);
  }
  return args;
}

// Pre-scan for --config so its values can be merged before the real parse.
std::string find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

struct ParsedApp {
  RunConfig config;
  bool help_requested = false;
  std::string help_text;
};

ParsedApp parse_internal(const std::vector<std::string>& args) {
  ParsedApp out;
  RunConfig& cfg = out.config;

  CLI::App app{"quantum correlation networks for the finite Kitaev chain"};
  app.require_subcommand(0, 1);

  std::string boundary = "periodic";
  std::string log_base = "natural";
  std::string clustering_mode = "normalized";
  std::string rdm = "spin";
  std::string mu_range;
  std::vector<std::string> measure_names;
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.chain.n_sites, "number of sites")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--w", cfg.chain.hopping, "hopping amplitude")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--mu", cfg.chain.chemical_potential, "chemical potential")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--delta", cfg.chain.pairing, "pairing amplitude")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--boundary", boundary, "periodic|open")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--measure", measure_names,
                    "concurrence|mutual_information|l1_coherence (repeatable)");
    sub->add_option("--log-base", log_base, "natural|base2")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--clustering", clustering_mode, "normalized|raw")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--rdm", rdm, "spin|fermionic pair-reduction convention")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--workers", cfg.workers, "worker threads (0: auto)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--out", cfg.output_path, "output file (default stdout)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--config", config_path, "flat JSON config file")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  };
  auto add_sweepish = [&](CLI::App* sub) {
    sub->add_option("--mu-range", mu_range, "lo:hi")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--points", cfg.points, "grid points")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--resolution", cfg.resolution, "refinement resolution")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  };

  CLI::App* point = app.add_subcommand("point", "single-potential network report");
  add_common(point);
  point->add_option("--network-out", cfg.network_out_path,
                    "weight-matrix CSV prefix");
  CLI::App* sweep = app.add_subcommand("sweep", "mu sweep to CSV");
  add_common(sweep);
  add_sweepish(sweep);
  CLI::App* detect = app.add_subcommand("detect", "locate parity switches");
  add_common(detect);
  add_sweepish(detect);
  detect->add_flag("--locate-c1", cfg.locate_c1,
                   "also search for the fully regular network point");
  CLI::App* zero = app.add_subcommand("zero-modes", "closed-form mu_n table");
  add_common(zero);
  CLI::App* validate = app.add_subcommand("validate", "run the built-in oracle suite");
  add_common(validate);

  // Merge config-file values (if any) ahead of the explicit flags, then
  // parse once; later values win for take-last options.
  std::vector<std::string> full_args = args;
  const std::string found_config = find_config_path(args);
  if (!found_config.empty() && !args.empty()) {
    std::vector<std::string> rest(args.begin() + 1, args.end());
    const std::vector<std::string> injected = config_to_args(found_config, rest);
    full_args = {args.front()};
    full_args.insert(full_args.end(), injected.begin(), injected.end());
    full_args.insert(full_args.end(), rest.begin(), rest.end());
  }
  std::vector<const char*> argv = {"kitnet"};
  for (const auto& a : full_args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out.help_requested = true;
    out.help_text = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    throw DomainError(std::string("configuration error: ") + e.get_name() + ": " +
                      e.what());
  }

  if (point->parsed()) cfg.command = Command::point;
  else if (sweep->parsed()) cfg.command = Command::sweep;
  else if (detect->parsed()) cfg.command = Command::detect;
  else if (zero->parsed()) cfg.command = Command::zero_modes;
  else if (validate->parsed()) cfg.command = Command::validate;
  else throw DomainError("configuration error: a subcommand is required "
                         "(point|sweep|detect|zero-modes|validate)");

  if (boundary == "periodic") cfg.chain.boundary = Boundary::periodic;
  else if (boundary == "open") cfg.chain.boundary = Boundary::open;
  else throw DomainError("configuration error: boundary: expected periodic|open");

  if (log_base == "natural") cfg.log_base = LogBase::natural;
  else if (log_base == "base2") cfg.log_base = LogBase::base2;
  else throw DomainError("configuration error: log-base: expected natural|base2");

  if (clustering_mode == "normalized") cfg.normalization = Normalization::max_normalized;
  else if (clustering_mode == "raw") cfg.normalization = Normalization::raw;
  else throw DomainError("configuration error: clustering: expected normalized|raw");

  if (rdm == "spin") cfg.rdm_convention = RdmConvention::spin_picture;
  else if (rdm == "fermionic") cfg.rdm_convention = RdmConvention::fermionic_mode;
  else throw DomainError("configuration error: rdm: expected spin|fermionic");

  for (const std::string& name : measure_names) {
    try {
      cfg.measures.push_back(measure_from_string(name));
    } catch (const DomainError&) {
      throw DomainError("configuration error: measure: unknown value \"" + name + "\"");
    }
  }
  if (cfg.measures.empty()) cfg.measures = {MeasureKind::concurrence};

  if (!mu_range.empty()) {
    const auto colon = mu_range.find(':');
    if (colon == std::string::npos)
      throw DomainError("configuration error: mu-range: expected lo:hi");
    try {
      cfg.mu_lo = std::stod(mu_range.substr(0, colon));
      cfg.mu_hi = std::stod(mu_range.substr(colon + 1));
    } catch (const std::exception&) {
      throw DomainError("configuration error: mu-range: expected lo:hi");
    }
  }
  if (cfg.points < 1) throw DomainError("configuration error: points: must be >= 1");
  if (cfg.resolution <= 0.0)
    throw DomainError("configuration error: resolution: must be > 0");

  try {
    cfg.chain.validate();
  } catch (const std::exception& e) {
    throw DomainError(std::string("configuration error: ") + e.what());
  }
  return out;
}

void emit(const RunConfig& cfg, const std::string& contents) {
  if (cfg.output_path.empty())
    std::cout << contents;
  else
    write_file(cfg.output_path, contents);
}

int run_point(const RunConfig& cfg) {
  const QuantumState g = ground_state(cfg.chain);
  const SweepSpec spec = cfg.to_sweep_spec();
  json j;
  j["mu"] = cfg.chain.chemical_potential;
  j["n"] = cfg.chain.n_sites;
  j["w"] = cfg.chain.hopping;
  j["delta"] = cfg.chain.pairing;
  j["boundary"] = to_string(cfg.chain.boundary);
  j["energy"] = g.energy;
  j["parity"] = g.parity_expectation >= 0.0 ? 1 : -1;
  j["parity_expectation"] = g.parity_expectation;
  j["degenerate"] = g.degenerate;
  j["measures"] = json::object();
  for (MeasureKind m : spec.measures) {
    const CorrelationNetwork net = build_network(g, m, spec.network_options);
    const NetworkReport rep = network_report(net);
    json e = {{"mean_density", rep.mean_density}, {"densities", rep.densities}};
    if (rep.clustering)
      e["clustering"] = *rep.clustering;
    else
      e["clustering"] = nullptr;
    j["measures"][to_string(m)] = e;
    if (!cfg.network_out_path.empty()) {
      CorrelationNetwork tagged = net;
      tagged.normalization = cfg.normalization;
      const std::string base = cfg.network_out_path + "." + to_string(m);
      write_file(base + ".csv", network_matrix_csv(tagged));
      write_file(base + ".json", network_sidecar_json(tagged));
    }
  }
  emit(cfg, j.dump(2) + "\n");
  return kExitOk;
}

int run_sweep_cmd(const RunConfig& cfg) {
  const SweepSpec spec = cfg.to_sweep_spec();
  const std::vector<SweepRecord> records = run_sweep(spec);
  emit(cfg, sweep_csv(records, spec));
  return kExitOk;
}

int run_detect(const RunConfig& cfg) {
  const SweepSpec spec = cfg.to_sweep_spec();
  const std::vector<SweepRecord> records = run_sweep(spec);
  const CriticalPointReport report = detect_discontinuities(records, spec);
  json j = json::parse(report_json(report, spec));
  if (cfg.locate_c1) {
    const C1Point c1 =
        locate_c1_point(spec.chain, spec.chain.pairing, spec.measures.front(), spec);
    j["c1_point"] = json::parse(c1_point_json(c1, spec.measures.front()));
  }
  emit(cfg, j.dump(2) + "\n");
  return kExitOk;
}

int run_zero_modes(const RunConfig& cfg) {
  const ZeroModePotentials zm = majorana_zero_mode_potentials(
      cfg.chain.n_sites, cfg.chain.hopping, cfg.chain.pairing);
  std::string out;
  if (!zm.real_domain) {
    out += "# domain flag: |delta| > |w|, zero-mode potentials are complex; "
           "none reported\n";
  }
  out += "n,mu_n\n";
  // Table in the conventional order mu_1 > mu_2 > ...
  int idx = 1;
  for (auto it = zm.values.rbegin(); it != zm.values.rend(); ++it, ++idx)
    out += std::to_string(idx) + "," + format_double(*it) + "\n";
  emit(cfg, out);
  return kExitOk;
}

int run_validate(const RunConfig& cfg) {
  const int n = std::min(cfg.chain.n_sites, 8);
  std::mt19937 rng(271828u);
  std::uniform_real_distribution<double> mu_dist(-3.0, 3.0), delta_dist(-2.0, 2.0);
  bool all_ok = true;
  std::string out;
  auto line = [&](const std::string& name, double err, double tol) {
    const bool ok = err <= tol;
    all_ok = all_ok && ok;
    out += std::string(ok ? "ok   " : "FAIL ") + name +
           " (max err " + format_double(err) + ", tol " + format_double(tol) + ")\n";
  };

  // Dense oracle vs the iterative sector solver.
  double err_dense = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    ChainSpec c;
    c.n_sites = n;
    c.chemical_potential = mu_dist(rng);
    c.pairing = delta_dist(rng);
    c.boundary = trial % 2 ? Boundary::open : Boundary::periodic;
    SolverConfig sc;
    sc.lanczos.dense_cutoff = 1;  // force the Krylov path
    const QuantumState it_state = ground_state(c, sc);
    const QuantumState dn_state = dense_ground_state(c);
    err_dense = std::max(err_dense, std::abs(it_state.energy - dn_state.energy));
  }
  line("dense-vs-iterative ground energy", err_dense, 1e-9);

  // Quasiparticle-sum identity for the periodic chain.
  double err_qp = 0.0;
  for (double mu : {0.0, 0.7, 1.9, 2.5})
    for (double delta : {0.3, 1.0}) {
      ChainSpec c;
      c.n_sites = n;
      c.chemical_potential = mu;
      c.pairing = delta;
      const double e_an = ground_energy_analytic(c);
      err_qp = std::max(err_qp, std::abs(ground_state(c).energy - e_an) /
                                    std::max(1.0, std::abs(e_an)));
    }
  line("quasiparticle-sum ground energy identity", err_qp, 1e-10);

  // Odd-sector equality between the cyclic XY chain and the periodic chain.
  double err_jw = 0.0;
  {
    XYSpec xy;
    xy.n_sites = n % 2 ? n - 1 : n;  // even chain for the sector identification
    xy.coupling_sum = 1.0;
    xy.anisotropy = 0.5;
    xy.field = 0.8;
    ChainSpec c;
    c.n_sites = xy.n_sites;
    c.hopping = xy.coupling_sum;
    c.pairing = xy.anisotropy;
    c.chemical_potential = xy.field;
    const ManyBodyOperator hxy = build_xy_hamiltonian(xy);
    const ManyBodyOperator hk = build_kitaev_hamiltonian(c);
    const MatrixXd mx = sector_project(hxy, -1).to_dense();
    const MatrixXd mk = sector_project(hk, -1).to_dense();
    Eigen::SelfAdjointEigenSolver<MatrixXd> ex(mx, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<MatrixXd> ek(mk, Eigen::EigenvaluesOnly);
    err_jw = (ex.eigenvalues() - ek.eigenvalues()).cwiseAbs().maxCoeff();
  }
  line("XY odd sector equals periodic-chain odd sector", err_jw, 1e-10);

  out += all_ok ? "validate: all checks passed\n" : "validate: FAILURES\n";
  emit(cfg, out);
  return all_ok ? kExitOk : kExitNumerical;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  ParsedApp parsed = parse_internal(args);
  if (parsed.help_requested)
    throw DomainError("configuration error: help requested");
  return parsed.config;
}

int execute(const RunConfig& config) {
  switch (config.command) {
    case Command::point: return run_point(config);
    case Command::sweep: return run_sweep_cmd(config);
    case Command::detect: return run_detect(config);
    case Command::zero_modes: return run_zero_modes(config);
    case Command::validate: return run_validate(config);
  }
  return kExitConfig;
}

int run_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    ParsedApp parsed = parse_internal(args);
    if (parsed.help_requested) {
      std::cout << parsed.help_text;
      return kExitOk;
    }
    return execute(parsed.config);
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const CapacityError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what()
              << " (residual " << e.residual_norm << ")\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace cli
}  // namespace kitnet
