#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "app/commands.hpp"

using namespace qorder::app;

int main(int argc, char** argv) {
  CLI::App cli{"qorder: variational preparation and diagnostics of ordered nonequilibrium states"};
  cli.require_subcommand(1);

  TrainOptions train;
  auto* t = cli.add_subcommand("train", "run every restart of a manifest and persist records plus a summary");
  t->add_option("--manifest", train.manifest, "experiment manifest (JSON)")->required();
  t->add_option("--seed", train.seed, "override the manifest's base seed");
  t->add_option("--jobs", train.jobs, "restarts trained in parallel")->check(CLI::PositiveNumber);
  t->add_option("--out-dir", train.out_dir, "output directory (default: manifest output.dir, then $QORDER_OUT_DIR)");

  DiagnoseOptions diag;
  auto* d = cli.add_subcommand("diagnose", "emit analysis tables for trained records");
  d->add_option("record", diag.record, "record file or directory of record_*.json")->required();
  d->add_option("--diagnostics", diag.diagnostics, "subset of spectral_support, eigenphases, level_stats, "
                                                   "clifford_hist, qfi (default: all)")
      ->delimiter(',');
  d->add_option("--bins", diag.n_bins, "histogram bins for clifford_hist");
  d->add_option("--out-dir", diag.out_dir, "output directory (default: next to the record)");

  MeasureOptions meas;
  auto* m = cli.add_subcommand("measure", "entanglement robustness under random single-site measurements");
  m->add_option("records", meas.records, "record file or directory of record_*.json")->required();
  m->add_option("--m-max", meas.m_max, "largest number of measured sites (default: N/2)");
  m->add_option("--samples", meas.samples, "samples per state and m");
  m->add_option("--seed", meas.seed, "sampling seed (default: the manifest's base seed)");
  m->add_option("--jobs", meas.jobs, "worker threads");
  m->add_flag("--with-ghz-baseline", meas.with_ghz_baseline, "append rows for the N-qubit GHZ state");
  m->add_option("--out-dir", meas.out_dir, "output directory (default: next to the records)");

  SpectrumOptions spec;
  auto* s = cli.add_subcommand("spectrum", "full exact spectrum of a model Hamiltonian");
  s->add_option("--model", spec.model, "ising_annni or cluster_ising");
  s->add_option("--n", spec.n_qubits, "number of qubits")->required();
  s->add_option("--field", spec.h, "ising_annni transverse field h");
  s->add_option("--gamma", spec.gamma, "cluster_ising coupling");
  s->add_option("--boundary", spec.boundary, "open or periodic");
  s->add_option("--observable", spec.observable, "susceptibility or string_order");
  s->add_option("--i", spec.i, "string-order left endpoint (1-based)");
  s->add_option("--j", spec.j, "string-order right endpoint (1-based)");
  s->add_option("--out-dir", spec.out_dir, "output directory (default: $QORDER_OUT_DIR)");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*t) return cmd_train(train, std::cerr);
    if (*d) return cmd_diagnose(diag, std::cerr);
    if (*m) return cmd_measure(meas, std::cerr);
    if (*s) return cmd_spectrum(spec, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
