#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>

#include "manifest.hpp"
#include "qorder/density_matrix.hpp"
#include "qorder/error.hpp"
#include "qorder/exact_diag.hpp"
#include "qorder/level_stats.hpp"
#include "qorder/measurement.hpp"
#include "qorder/spectral.hpp"
#include "record_io.hpp"

namespace qorder::app {

namespace fs = std::filesystem;

namespace {

std::string fmt(double x) { return format_double(x); }
std::string fmt(std::size_t x) { return std::to_string(x); }
std::string fmt(int x) { return std::to_string(x); }

std::vector<std::string> stat_cells(const TraceStats& s, std::size_t t) {
  return {fmt(s.mean[t]), fmt(s.stderr_of_mean[t])};
}

CsvTable summary_table(const EnsembleSummary& ens, const std::string& hash) {
  CsvTable t = make_table({"iteration", "loss_mean", "loss_stderr", "order_mean", "order_stderr", "energy_mean",
                           "energy_stderr", "variance_mean", "variance_stderr"},
                          "summary", hash);
  t.meta("n_restarts", fmt(ens.n_restarts));
  t.meta("n_failed", fmt(ens.n_failed));
  for (std::size_t r = 0; r < ens.records.size(); ++r) {
    const TrainingRecord& rec = ens.records[r];
    t.meta("restart_" + fmt(r), std::string(to_string(rec.status)) + " iterations=" + fmt(rec.iterations));
  }
  for (std::size_t i = 0; i < ens.loss.mean.size(); ++i) {
    std::vector<std::string> row{fmt(i)};
    for (const TraceStats* s : {&ens.loss, &ens.order, &ens.energy, &ens.variance}) {
      auto c = stat_cells(*s, i);
      row.insert(row.end(), c.begin(), c.end());
    }
    t.add_row(std::move(row));
  }
  return t;
}

std::vector<int> sector_labels(const std::vector<SectorPhases>& sectors, std::vector<double>& levels) {
  std::vector<int> labels;
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    levels.insert(levels.end(), sectors[s].phases.begin(), sectors[s].phases.end());
    labels.insert(labels.end(), sectors[s].phases.size(), static_cast<int>(s));
  }
  return labels;
}

struct DiagnoseContext {
  const StoredRecord& rec;
  const RunSpec& spec;
  const StateVector& psi;
  const std::string hash;
  int n_bins;
};

enum class Outcome { Written, Skipped };

Outcome diagnose_one(const std::string& name, const DiagnoseContext& ctx, const fs::path& out, std::ostream& log) {
  const int n = ctx.spec.circuit.n_qubits;
  auto skip = [&](const std::string& why) {
    log << "warning: skipping " << name << " for " << out.filename().string() << ": " << why << '\n';
    return Outcome::Skipped;
  };

  if (name == "spectral_support") {
    if (n > kMaxDenseQubits) return skip("N=" + fmt(n) + " exceeds the exact-diagonalization ceiling of " +
                                         fmt(kMaxDenseQubits));
    const EigenSystem eig = exact_diagonalize(ctx.spec.hamiltonian);
    const SpectralSupport sup = spectral_support(ctx.psi, eig, ctx.spec.loss.observable);
    const double e_min = eig.energies()(0), e_max = eig.energies()(eig.size() - 1);
    const double width = e_max - e_min;
    CsvTable t = make_table({"index", "energy", "weight", "phase", "diagonal_order"}, "spectral_support", ctx.hash);
    t.meta("observable", ctx.spec.loss.observable.name());
    t.meta("e_min", fmt(e_min));
    t.meta("e_max", fmt(e_max));
    t.meta("mean_energy", fmt(sup.mean_energy()));
    t.meta("middle_half_weight", fmt(sup.weight_in_window(e_min + 0.25 * width, e_max - 0.25 * width)));
    for (std::size_t k = 0; k < sup.components.size(); ++k) {
      const SpectralComponent& c = sup.components[k];
      t.add_row({fmt(k), fmt(c.energy), fmt(c.weight), fmt(c.phase), fmt(c.diagonal_order)});
    }
    write_atomic(out, t.str());
    return Outcome::Written;
  }

  if (name == "eigenphases" || name == "level_stats") {
    if (n > kMaxUnitaryQubits)
      return skip("N=" + fmt(n) + " exceeds the dense-unitary ceiling of " + fmt(kMaxUnitaryQubits));
    const Eigen::MatrixXcd u = circuit_unitary(ctx.spec.circuit, ctx.rec.record.final_params);
    if (name == "eigenphases") {
      const EigenphaseSpectrum spec = eigenphase_spectrum(u);
      CsvTable t = make_table({"index", "phase", "cluster", "multiplicity"}, "eigenphases", ctx.hash);
      t.meta("tolerance", fmt(kDefaultDegeneracyTolerance));
      const int modal = spec.modal_multiplicity();
      t.meta("modal_multiplicity", fmt(modal));
      t.meta("fraction_at_modal", fmt(spec.fraction_with_multiplicity(modal)));
      // Clusters are listed in phase order except perhaps a merged wrap-around
      // cluster, so assign each level to its nearest cluster centre.
      for (std::size_t k = 0; k < spec.phases.size(); ++k) {
        std::size_t best = 0;
        double best_d = 1e300;
        for (std::size_t c = 0; c < spec.clusters.size(); ++c) {
          double d = std::abs(std::remainder(spec.phases[k] - spec.clusters[c].phase, 2 * M_PI));
          if (d < best_d) best_d = d, best = c;
        }
        t.add_row({fmt(k), fmt(spec.phases[k]), fmt(best), fmt(spec.clusters[best].multiplicity)});
      }
      write_atomic(out, t.str());
      return Outcome::Written;
    }
    const auto syms = ctx.spec.circuit.protected_symmetries();
    std::vector<double> resolved;
    const std::vector<int> labels = sector_labels(sector_eigenphases(u, syms), resolved);
    const EigenphaseSpectrum full = eigenphase_spectrum(u);
    CsvTable t = make_table({"source", "sector_resolved", "mean_r", "n_levels", "n_ratios", "n_sectors", "n_degenerate"},
                            "level_stats", ctx.hash);
    std::size_t rows = 0;
    auto add = [&](const std::string& resolved_flag, std::span<const double> levels, std::span<const int> lab) {
      try {
        const LevelStatistics s = level_spacing_r(levels, lab, LevelKind::Phases);
        t.add_row({"unitary_eigenphases", resolved_flag, fmt(s.mean_r), fmt(s.n_levels), fmt(s.n_ratios),
                   fmt(s.n_sectors), fmt(s.n_degenerate)});
        ++rows;
      } catch (const StatisticsError& e) {
        log << "warning: level_stats (" << (resolved_flag == "1" ? "sector-resolved" : "full") << "): " << e.what()
            << '\n';
      }
    };
    add("1", resolved, labels);
    add("0", full.phases, {});
    if (rows == 0) return skip("too few distinct levels");
    write_atomic(out, t.str());
    return Outcome::Written;
  }

  if (name == "clifford_hist") {
    const AngleHistogram h = clifford_angle_histogram(ctx.rec.record.final_params, ctx.n_bins);
    CsvTable t = make_table({"bin_lo", "bin_hi", "count"}, "clifford_hist", ctx.hash);
    std::string angles;
    for (double a : h.clifford_angles) angles += (angles.empty() ? "" : " ") + fmt(a);
    t.meta("clifford_angles", angles);
    t.meta("n_params", fmt(ctx.rec.record.final_params.size()));
    t.meta("mean_clifford_distance", fmt(h.mean_clifford_distance));
    for (std::size_t b = 0; b < h.counts.size(); ++b) t.add_row({fmt(h.bin_edges[b]), fmt(h.bin_edges[b + 1]), fmt(h.counts[b])});
    write_atomic(out, t.str());
    return Outcome::Written;
  }

  if (name == "qfi") {
    const double fq = qfi_collective(ctx.psi);
    const EnergyMoments em = energy_moments(ctx.psi, ctx.spec.hamiltonian);
    CsvTable t = make_table({"n_qubits", "qfi", "qfi_over_n", "chi", "order", "energy", "variance", "half_chain_entropy"},
                            "qfi", ctx.hash);
    t.meta("generator", "J_z = (1/2) sum_i Z_i, F_Q = 4 Var(J_z)");
    t.meta("observable", ctx.spec.loss.observable.name());
    t.add_row({fmt(n), fmt(fq), fmt(fq / n), fmt(susceptibility(ctx.psi)), fmt(ctx.spec.loss.observable.expectation(ctx.psi)),
               fmt(em.mean), fmt(em.variance()), fmt(half_chain_entropy(ctx.psi))});
    write_atomic(out, t.str());
    return Outcome::Written;
  }

  throw ArgumentError("unknown diagnostic '" + name + "'");
}

}  // namespace

fs::path resolve_out_dir(const std::string& cli, const std::string& manifest) {
  if (!cli.empty()) return cli;
  if (!manifest.empty()) return manifest;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return "qorder_out";
}

int cmd_train(const TrainOptions& opt, std::ostream& log) {
  RunManifest m;
  try {
    m = load_manifest(opt.manifest);
  } catch (const ManifestError& e) {
    log << "error: " << opt.manifest << ": " << e.what() << '\n';
    return kExitUsage;
  }
  if (opt.seed) m.base_seed = *opt.seed;
  if (opt.jobs < 1) {
    log << "error: --jobs must be >= 1\n";
    return kExitUsage;
  }
  const RunSpec spec = build_run_spec(m);
  const fs::path dir = resolve_out_dir(opt.out_dir, m.output_dir);
  const std::string hash = manifest_hash(m);

  const EnsembleSummary ens = multi_restart(spec, m.n_restarts, m.base_seed, opt.jobs);
  bool numeric = false;
  for (std::size_t r = 0; r < ens.records.size(); ++r) {
    const TrainingRecord& rec = ens.records[r];
    save_record(dir / record_file_name(static_cast<int>(r)), StoredRecord{m, static_cast<int>(r), rec});
    numeric |= rec.status == RunStatus::NumericError;
    if (!rec.succeeded())
      log << "restart " << r << ": " << to_string(rec.status) << (rec.message.empty() ? "" : " (" + rec.message + ")")
          << '\n';
  }
  write_atomic(dir / "summary.csv", summary_table(ens, hash).str());
  log << "wrote " << ens.records.size() << " records and summary.csv to " << dir.string() << '\n';
  if (numeric) return kExitNumeric;
  return ens.n_failed > 0 ? kExitPartial : kExitOk;
}

int cmd_diagnose(const DiagnoseOptions& opt, std::ostream& log) {
  std::vector<std::string> names = opt.diagnostics.empty() ? kDiagnostics : opt.diagnostics;
  for (const auto& d : names) {
    if (std::find(kDiagnostics.begin(), kDiagnostics.end(), d) == kDiagnostics.end()) {
      log << "error: unknown diagnostic '" << d << "'\n";
      return kExitUsage;
    }
  }
  if (opt.n_bins < 1) {
    log << "error: histogram needs at least one bin\n";
    return kExitUsage;
  }
  std::vector<StoredRecord> records;
  std::vector<fs::path> sources;
  try {
    records = load_records(opt.record);
    if (fs::is_directory(opt.record)) {
      for (const auto& r : records) sources.push_back(fs::path(opt.record) / record_file_name(r.restart));
    } else {
      sources.push_back(opt.record);
    }
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  bool skipped = false;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const StoredRecord& rec = records[k];
    const RunSpec spec = build_run_spec(rec.manifest);
    const StateVector psi = final_state(rec);
    const fs::path dir = opt.out_dir.empty() ? fs::path(sources[k]).parent_path() : fs::path(opt.out_dir);
    const std::string stem = sources[k].stem().string();
    const DiagnoseContext ctx{rec, spec, psi, manifest_hash(rec.manifest), opt.n_bins};
    for (const auto& d : names)
      skipped |= diagnose_one(d, ctx, dir / (stem + "_" + d + ".csv"), log) == Outcome::Skipped;
  }
  return skipped ? kExitPartial : kExitOk;
}

int cmd_measure(const MeasureOptions& opt, std::ostream& log) {
  std::vector<StoredRecord> records;
  try {
    records = load_records(opt.records);
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const int n = records.front().manifest.n_qubits;
  for (const auto& r : records) {
    if (r.manifest.n_qubits != n) {
      log << "error: records mix system sizes\n";
      return kExitUsage;
    }
  }
  const int m_max = opt.m_max < 0 ? n / 2 : opt.m_max;
  if (m_max >= n) {
    log << "error: --m-max must be < N = " << n << '\n';
    return kExitUsage;
  }
  if (opt.samples < 1) {
    log << "error: --samples must be >= 1\n";
    return kExitUsage;
  }
  if (opt.jobs < 1) {
    log << "error: --jobs must be >= 1\n";
    return kExitUsage;
  }
  const std::uint64_t seed = opt.seed.value_or(records.front().manifest.base_seed);

  std::vector<StateVector> states;
  for (const auto& r : records) states.push_back(final_state(r));

  std::string hash = manifest_hash(records.front().manifest);
  for (const auto& r : records)
    if (manifest_hash(r.manifest) != hash) hash = "mixed";

  CsvTable t = make_table({"ensemble", "m", "mean_entropy", "stderr", "n_samples"}, "measurement", hash);
  t.meta("seed", std::to_string(seed));
  t.meta("n_states", fmt(states.size()));
  t.meta("samples_per_state", fmt(opt.samples));
  auto emit = [&](const std::string& label, const MeasurementRobustnessCurve& curve) {
    for (const auto& p : curve)
      t.add_row({label, fmt(p.m), fmt(p.mean_entropy), fmt(p.stderr_of_mean), fmt(p.n_samples)});
  };
  emit("trained", measurement_robustness(states, m_max, opt.samples, seed, opt.jobs));
  if (opt.with_ghz_baseline) {
    const std::vector<StateVector> ghz{ghz_state(n)};
    emit("ghz", measurement_robustness(ghz, m_max, opt.samples, seed, opt.jobs));
  }
  const fs::path dir = opt.out_dir.empty() ? (fs::is_directory(opt.records) ? fs::path(opt.records)
                                                                            : fs::path(opt.records).parent_path())
                                           : fs::path(opt.out_dir);
  write_atomic(dir / "measurement.csv", t.str());
  return kExitOk;
}

int cmd_spectrum(const SpectrumOptions& opt, std::ostream& log) {
  try {
    const ModelKind kind = parse_model_kind(opt.model);
    const Boundary boundary = parse_boundary(opt.boundary);
    const int n = opt.n_qubits;
    if (n > kMaxDenseQubits) {
      log << "error: N=" << n << " exceeds the exact-diagonalization ceiling of " << kMaxDenseQubits << '\n';
      return kExitUsage;
    }
    Hamiltonian h = [&] {
      if (kind == ModelKind::IsingAnnni) {
        if (opt.gamma) throw ArgumentError("--gamma applies to cluster_ising");
        return build_ising_annni(n, opt.h.value_or(1.0), boundary);
      }
      if (kind == ModelKind::ClusterIsing) {
        if (opt.h) throw ArgumentError("--field applies to ising_annni");
        if (boundary != Boundary::Open) throw ArgumentError("cluster_ising supports only the open boundary");
        return build_cluster_ising(n, opt.gamma.value_or(0.5));
      }
      throw ArgumentError("spectrum needs ising_annni or cluster_ising");
    }();

    std::string obs_kind = opt.observable;
    if (obs_kind.empty()) obs_kind = kind == ModelKind::ClusterIsing && n >= 4 ? "string_order" : "susceptibility";
    OrderObservable obs = OrderObservable::susceptibility();
    if (obs_kind == "string_order") {
      int i = opt.i, j = opt.j;
      if (i == 0 && j == 0) {
        if (n % 4 == 0 && n >= 8) i = n / 4, j = 3 * n / 4;
        else i = 1, j = n;
      }
      obs = OrderObservable::string_order(i, j);
    } else if (obs_kind != "susceptibility") {
      throw ArgumentError("--observable must be susceptibility or string_order");
    }
    obs.check(n);

    const EigenSystem eig = exact_diagonalize(h);
    nlohmann::ordered_json desc;
    desc["model"] = std::string(to_string(kind));
    desc["n_qubits"] = n;
    desc["field"] = h.field();
    desc["boundary"] = std::string(to_string(boundary));
    desc["observable"] = obs.name();
    CsvTable t = make_table({"index", "energy", "diagonal_order"}, "spectrum", fnv1a_hex(desc.dump()));
    t.meta("model", desc.dump());
    t.meta("max_residual", fmt(eig.max_residual(h)));
    for (Eigen::Index k = 0; k < eig.size(); ++k)
      t.add_row({fmt(static_cast<std::size_t>(k)), fmt(eig.energies()(k)), fmt(obs.expectation(eig.eigenvector(k)))});
    write_atomic(resolve_out_dir(opt.out_dir, "") / "spectrum.csv", t.str());
    return kExitOk;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qorder::app
