#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qorder/circuit.hpp"
#include "qorder/hamiltonian.hpp"
#include "qorder/objective.hpp"
#include "qorder/optimizer.hpp"
#include "qorder/states.hpp"
#include "qorder/train.hpp"

namespace qorder::app {

inline constexpr int kSchemaVersion = 1;

enum class ExperimentKind { Z2, Spt, Benchmark };

std::string to_string(ExperimentKind k);

enum class CircuitKind { Z2Brickwork, SptLayer, Identity };

// Invalid manifest; `line` is the 1-based source line the problem was traced
// to, 0 when unknown.
class ManifestError : public std::runtime_error {
 public:
  ManifestError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct ModelSection {
  ModelKind label = ModelKind::IsingAnnni;
  double field = 1.0;  // h or gamma
  Boundary boundary = Boundary::Open;
};

struct CircuitSection {
  CircuitKind kind = CircuitKind::Z2Brickwork;
  int depth = 0;
  GeneratorAssignment assignment = GeneratorAssignment::Cycle;
  std::vector<std::string> generators;  // Explicit assignment only
};

struct ObservableSection {
  bool string_order = false;
  int i = 0;
  int j = 0;
};

struct LossSection {
  double target_energy = 0.0;
  double sigma = 0.5;
  double beta = 0.25;
  ObservableSection observable;
};

// Fully resolved experiment description. Every field is populated after
// parsing, so serialize(parse(x)) lists all of them explicitly.
struct RunManifest {
  int schema_version = kSchemaVersion;
  ExperimentKind experiment = ExperimentKind::Z2;
  int n_qubits = 0;
  ModelSection model;
  CircuitSection circuit;
  InitialStateKind initial_state = InitialStateKind::RandomProduct;
  LossSection loss;
  OptimizerConfig optimizer;
  std::uint64_t base_seed = 0;
  int n_restarts = 1;
  std::string output_dir;  // as written in the manifest; may be empty
};

// Parses manifest text. Missing fields take the experiment's defaults;
// unknown fields and invalid values throw ManifestError.
RunManifest parse_manifest(const std::string& text);
RunManifest load_manifest(const std::string& path);

nlohmann::ordered_json to_json(const RunManifest& m);
RunManifest from_json(const nlohmann::json& j);

// FNV-1a 64 as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
// Hash of the compact serialization.
std::string manifest_hash(const RunManifest& m);

Hamiltonian build_hamiltonian(const RunManifest& m);
CircuitSpec build_circuit(const RunManifest& m);
LossConfig build_loss_config(const RunManifest& m);
RunSpec build_run_spec(const RunManifest& m);

}  // namespace qorder::app
