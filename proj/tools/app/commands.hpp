#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qorder::app {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPartial = 2;
inline constexpr int kExitNumeric = 3;

inline constexpr const char* kOutDirEnv = "QORDER_OUT_DIR";

// --out-dir, else the manifest's output.dir, else $QORDER_OUT_DIR, else
// ./qorder_out.
std::filesystem::path resolve_out_dir(const std::string& cli, const std::string& manifest);

struct TrainOptions {
  std::string manifest;
  std::optional<std::uint64_t> seed;  // overrides seeds.base_seed
  int jobs = 1;
  std::string out_dir;
};

// record_NNN.json per restart plus summary.csv.
int cmd_train(const TrainOptions& opt, std::ostream& log);

inline const std::vector<std::string> kDiagnostics = {"spectral_support", "eigenphases", "level_stats",
                                                      "clifford_hist", "qfi"};

struct DiagnoseOptions {
  std::string record;  // file or directory of record_*.json
  std::vector<std::string> diagnostics;  // empty: all
  int n_bins = 64;
  std::string out_dir;
};

// <record stem>_<diagnostic>.csv per record and diagnostic. Dense
// diagnostics beyond their size ceiling are skipped with a warning (exit 2).
int cmd_diagnose(const DiagnoseOptions& opt, std::ostream& log);

struct MeasureOptions {
  std::string records;  // file or directory
  int m_max = -1;       // -1: floor(N/2)
  int samples = 500;
  std::optional<std::uint64_t> seed;  // defaults to the first record's base seed
  int jobs = 1;
  bool with_ghz_baseline = false;
  std::string out_dir;
};

// measurement.csv with columns ensemble,m,mean_entropy,stderr,n_samples.
int cmd_measure(const MeasureOptions& opt, std::ostream& log);

struct SpectrumOptions {
  std::string model = "ising_annni";
  int n_qubits = 8;
  std::optional<double> h;      // ising_annni field, default 1
  std::optional<double> gamma;  // cluster_ising coupling, default 0.5
  std::string boundary = "open";
  std::string observable;  // susceptibility | string_order; per-model default
  int i = 0;               // 1-based string endpoints; 0 picks a default
  int j = 0;
  std::string out_dir;
};

// spectrum.csv: every eigenvalue with its diagonal order parameter.
int cmd_spectrum(const SpectrumOptions& opt, std::ostream& log);

}  // namespace qorder::app
