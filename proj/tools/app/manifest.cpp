#include "manifest.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "qorder/error.hpp"

namespace qorder::app {

using nlohmann::json;
using nlohmann::ordered_json;

ManifestError::ManifestError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Z2: return "z2";
    case ExperimentKind::Spt: return "spt";
    case ExperimentKind::Benchmark: return "benchmark";
  }
  return "?";
}

namespace {

std::string to_string(CircuitKind k) {
  switch (k) {
    case CircuitKind::Z2Brickwork: return "z2_brickwork";
    case CircuitKind::SptLayer: return "spt_layer";
    case CircuitKind::Identity: return "identity";
  }
  return "?";
}

int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1;
  for (std::size_t i = 0; i < offset; ++i) line += text[i] == '\n';
  return line;
}

// Walks the dotted key path through the raw text, each key searched after the
// previous one. Good enough for pretty-printed and hand-written manifests.
int line_of_path(const std::string& text, const std::vector<std::string>& path) {
  std::size_t pos = 0;
  bool found = false;
  for (const auto& key : path) {
    const auto hit = text.find('"' + key + '"', pos);
    if (hit == std::string::npos) break;
    pos = hit + 1;
    found = true;
  }
  return found ? line_of_offset(text, pos) : 0;
}

class Reader {
 public:
  explicit Reader(const std::string* text) : text_(text) {}

  [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& what) const {
    std::string dotted;
    for (const auto& p : path) dotted += (dotted.empty() ? "" : ".") + p;
    const int line = text_ ? line_of_path(*text_, path) : 0;
    throw ManifestError(line, (dotted.empty() ? "" : "'" + dotted + "': ") + what);
  }

  void allow_only(const json& obj, const std::vector<std::string>& path, std::set<std::string> keys) const {
    for (const auto& [k, v] : obj.items()) {
      if (!keys.count(k)) {
        auto p = path;
        p.push_back(k);
        fail(p, "unknown field");
      }
    }
  }

  const json* field(const json& obj, const std::string& key) const {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
  }

  double number(const json& obj, std::vector<std::string> path, double fallback) const {
    const json* v = field(obj, path.back());
    if (!v) return fallback;
    if (!v->is_number()) fail(path, "expected a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) fail(path, "must be finite");
    return x;
  }

  long long integer(const json& obj, std::vector<std::string> path, long long fallback) const {
    const json* v = field(obj, path.back());
    if (!v) return fallback;
    if (!v->is_number_integer()) fail(path, "expected an integer");
    return v->get<long long>();
  }

  std::uint64_t u64(const json& obj, std::vector<std::string> path, std::uint64_t fallback) const {
    const json* v = field(obj, path.back());
    if (!v) return fallback;
    if (v->is_number_unsigned()) return v->get<std::uint64_t>();
    if (v->is_number_integer() && v->get<long long>() >= 0) return static_cast<std::uint64_t>(v->get<long long>());
    fail(path, "expected a non-negative integer");
  }

  std::string string(const json& obj, std::vector<std::string> path, const std::string& fallback) const {
    const json* v = field(obj, path.back());
    if (!v) return fallback;
    if (!v->is_string()) fail(path, "expected a string");
    return v->get<std::string>();
  }

  const json& object(const json& obj, std::vector<std::string> path, const json& empty) const {
    const json* v = field(obj, path.back());
    if (!v) return empty;
    if (!v->is_object()) fail(path, "expected an object");
    return *v;
  }

  template <class F>
  auto guarded(const std::vector<std::string>& path, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const qorder::Error& e) {
      fail(path, e.what());
    }
  }

 private:
  const std::string* text_;
};

RunManifest read_manifest(const json& root, const std::string* text) {
  const Reader rd(text);
  const json empty = json::object();
  if (!root.is_object()) rd.fail({}, "manifest must be a JSON object");
  rd.allow_only(root, {},
                {"schema_version", "experiment", "n_qubits", "model", "circuit", "initial_state", "loss", "optimizer",
                 "seeds", "output"});

  RunManifest m;
  m.schema_version = static_cast<int>(rd.integer(root, {"schema_version"}, kSchemaVersion));
  if (m.schema_version != kSchemaVersion)
    rd.fail({"schema_version"}, "unsupported schema version " + std::to_string(m.schema_version));

  if (!rd.field(root, "experiment")) rd.fail({}, "missing required field 'experiment'");
  const std::string exp = rd.string(root, {"experiment"}, "");
  if (exp == "z2") m.experiment = ExperimentKind::Z2;
  else if (exp == "spt") m.experiment = ExperimentKind::Spt;
  else if (exp == "benchmark") m.experiment = ExperimentKind::Benchmark;
  else rd.fail({"experiment"}, "expected one of z2, spt, benchmark; got '" + exp + "'");

  if (!rd.field(root, "n_qubits")) rd.fail({}, "missing required field 'n_qubits'");
  const long long n = rd.integer(root, {"n_qubits"}, 0);
  if (n < 3 || n > kMaxQubits) rd.fail({"n_qubits"}, "must lie in [3, " + std::to_string(kMaxQubits) + "]");
  m.n_qubits = static_cast<int>(n);
  const int nq = m.n_qubits;
  const bool spt = m.experiment == ExperimentKind::Spt;
  const bool bench = m.experiment == ExperimentKind::Benchmark;

  // model
  {
    const json& o = rd.object(root, {"model"}, empty);
    rd.allow_only(o, {"model"}, {"label", "h", "gamma", "boundary"});
    const std::string label = rd.string(o, {"model", "label"}, spt ? "cluster_ising" : "ising_annni");
    m.model.label = rd.guarded({"model", "label"}, [&] { return parse_model_kind(label); });
    if (m.model.label == ModelKind::Custom) rd.fail({"model", "label"}, "custom models cannot be built from a manifest");
    if (m.model.label == ModelKind::IsingAnnni) {
      if (rd.field(o, "gamma")) rd.fail({"model", "gamma"}, "ising_annni takes 'h', not 'gamma'");
      m.model.field = rd.number(o, {"model", "h"}, 1.0);
    } else {
      if (rd.field(o, "h")) rd.fail({"model", "h"}, "cluster_ising takes 'gamma', not 'h'");
      m.model.field = rd.number(o, {"model", "gamma"}, 0.5);
    }
    const std::string b = rd.string(o, {"model", "boundary"}, "open");
    m.model.boundary = rd.guarded({"model", "boundary"}, [&] { return parse_boundary(b); });
    if (m.model.label == ModelKind::ClusterIsing && m.model.boundary != Boundary::Open)
      rd.fail({"model", "boundary"}, "cluster_ising supports only the open boundary");
  }

  // circuit
  {
    const json& o = rd.object(root, {"circuit"}, empty);
    rd.allow_only(o, {"circuit"}, {"kind", "depth", "generator_assignment", "generators"});
    const std::string kind = rd.string(o, {"circuit", "kind"}, spt ? "spt_layer" : bench ? "identity" : "z2_brickwork");
    if (kind == "z2_brickwork") m.circuit.kind = CircuitKind::Z2Brickwork;
    else if (kind == "spt_layer") m.circuit.kind = CircuitKind::SptLayer;
    else if (kind == "identity") m.circuit.kind = CircuitKind::Identity;
    else rd.fail({"circuit", "kind"}, "expected one of z2_brickwork, spt_layer, identity; got '" + kind + "'");

    const int default_depth = m.circuit.kind == CircuitKind::Z2Brickwork ? nq
                              : m.circuit.kind == CircuitKind::SptLayer  ? 1
                                                                         : 0;
    const long long depth = rd.integer(o, {"circuit", "depth"}, default_depth);
    if (m.circuit.kind == CircuitKind::Identity) {
      if (depth != 0) rd.fail({"circuit", "depth"}, "identity circuit has depth 0");
    } else if (depth < 1 || depth > 10000) {
      rd.fail({"circuit", "depth"}, "must lie in [1, 10000]");
    }
    m.circuit.depth = static_cast<int>(depth);

    const std::string assign = rd.string(o, {"circuit", "generator_assignment"}, "cycle");
    m.circuit.assignment =
        rd.guarded({"circuit", "generator_assignment"}, [&] { return parse_generator_assignment(assign); });
    if (const json* g = rd.field(o, "generators")) {
      if (!g->is_array()) rd.fail({"circuit", "generators"}, "expected an array of strings");
      for (const auto& w : *g) {
        if (!w.is_string()) rd.fail({"circuit", "generators"}, "expected an array of strings");
        m.circuit.generators.push_back(w.get<std::string>());
      }
    }
    if (m.circuit.assignment != GeneratorAssignment::Explicit && !m.circuit.generators.empty())
      rd.fail({"circuit", "generators"}, "only allowed with generator_assignment 'explicit'");
  }

  // initial state
  {
    const std::string s = rd.string(root, {"initial_state"}, spt ? "cluster" : bench ? "ghz" : "random_product");
    m.initial_state = rd.guarded({"initial_state"}, [&] { return parse_initial_state(s); });
  }

  // loss
  {
    const json& o = rd.object(root, {"loss"}, empty);
    rd.allow_only(o, {"loss"}, {"target_energy", "sigma", "beta", "observable"});
    m.loss.target_energy = rd.number(o, {"loss", "target_energy"}, 0.0);
    m.loss.sigma = rd.number(o, {"loss", "sigma"}, 0.5);
    m.loss.beta = rd.number(o, {"loss", "beta"}, 0.25);
    if (m.loss.sigma < 0) rd.fail({"loss", "sigma"}, "must be >= 0");
    if (m.loss.beta < 0) rd.fail({"loss", "beta"}, "must be >= 0");

    const json& ob = rd.object(o, {"loss", "observable"}, empty);
    rd.allow_only(ob, {"loss", "observable"}, {"kind", "i", "j"});
    const std::string kind = rd.string(ob, {"loss", "observable", "kind"}, spt ? "string_order" : "susceptibility");
    if (kind == "susceptibility") {
      if (rd.field(ob, "i") || rd.field(ob, "j"))
        rd.fail({"loss", "observable", "kind"}, "susceptibility takes no endpoints");
      m.loss.observable.string_order = false;
    } else if (kind == "string_order") {
      m.loss.observable.string_order = true;
      const bool has_defaults = nq % 4 == 0;
      if (!has_defaults && (!rd.field(ob, "i") || !rd.field(ob, "j")))
        rd.fail({"loss", "observable"}, "string_order endpoints i, j are required unless N is divisible by 4");
      m.loss.observable.i = static_cast<int>(rd.integer(ob, {"loss", "observable", "i"}, nq / 4));
      m.loss.observable.j = static_cast<int>(rd.integer(ob, {"loss", "observable", "j"}, 3 * nq / 4));
      const int i = m.loss.observable.i, j = m.loss.observable.j;
      if (i < 1 || j > nq || j < i + 3)
        rd.fail({"loss", "observable", "j"}, "endpoints must satisfy 1 <= i, i + 3 <= j <= N (1-based)");
    } else {
      rd.fail({"loss", "observable", "kind"}, "expected susceptibility or string_order; got '" + kind + "'");
    }
  }

  // optimizer
  {
    const json& o = rd.object(root, {"optimizer"}, empty);
    rd.allow_only(o, {"optimizer"},
                  {"method", "learning_rate", "max_iters", "convergence_tol", "convergence_window", "beta1", "beta2",
                   "epsilon"});
    OptimizerConfig& c = m.optimizer;
    const std::string method = rd.string(o, {"optimizer", "method"}, "adam");
    c.method = rd.guarded({"optimizer", "method"}, [&] { return parse_optimizer_method(method); });
    c.learning_rate = rd.number(o, {"optimizer", "learning_rate"}, c.learning_rate);
    c.max_iters = static_cast<int>(rd.integer(o, {"optimizer", "max_iters"}, bench ? 0 : c.max_iters));
    c.convergence_tol = rd.number(o, {"optimizer", "convergence_tol"}, c.convergence_tol);
    c.convergence_window = static_cast<int>(rd.integer(o, {"optimizer", "convergence_window"}, c.convergence_window));
    c.beta1 = rd.number(o, {"optimizer", "beta1"}, c.beta1);
    c.beta2 = rd.number(o, {"optimizer", "beta2"}, c.beta2);
    c.epsilon = rd.number(o, {"optimizer", "epsilon"}, c.epsilon);
    if (bench && c.max_iters != 0) rd.fail({"optimizer", "max_iters"}, "benchmark experiments do not train; use 0");
    rd.guarded({"optimizer"}, [&] {
      c.validate();
      return 0;
    });
  }

  // seeds
  {
    const json& o = rd.object(root, {"seeds"}, empty);
    rd.allow_only(o, {"seeds"}, {"base_seed", "n_restarts"});
    m.base_seed = rd.u64(o, {"seeds", "base_seed"}, 0);
    const long long r = rd.integer(o, {"seeds", "n_restarts"}, 1);
    if (r < 1 || r > 100000) rd.fail({"seeds", "n_restarts"}, "must lie in [1, 100000]");
    m.n_restarts = static_cast<int>(r);
  }

  // output
  {
    const json& o = rd.object(root, {"output"}, empty);
    rd.allow_only(o, {"output"}, {"dir"});
    m.output_dir = rd.string(o, {"output", "dir"}, "");
  }

  // Cross-field checks go through the same builders the run uses.
  rd.guarded({"circuit"}, [&] {
    build_circuit(m);
    return 0;
  });
  rd.guarded({"model"}, [&] {
    build_hamiltonian(m);
    return 0;
  });
  rd.guarded({"loss", "observable"}, [&] {
    build_loss_config(m).observable.check(nq);
    return 0;
  });
  return m;
}

}  // namespace

RunManifest parse_manifest(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ManifestError(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), std::string("malformed JSON: ") + e.what());
  }
  return read_manifest(root, &text);
}

RunManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError(0, "cannot read manifest '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

RunManifest from_json(const json& j) { return read_manifest(j, nullptr); }

ordered_json to_json(const RunManifest& m) {
  ordered_json model;
  model["label"] = std::string(to_string(m.model.label));
  model[m.model.label == ModelKind::IsingAnnni ? "h" : "gamma"] = m.model.field;
  model["boundary"] = std::string(to_string(m.model.boundary));

  ordered_json circuit;
  circuit["kind"] = to_string(m.circuit.kind);
  circuit["depth"] = m.circuit.depth;
  circuit["generator_assignment"] = std::string(to_string(m.circuit.assignment));
  if (m.circuit.assignment == GeneratorAssignment::Explicit) circuit["generators"] = m.circuit.generators;

  ordered_json observable;
  observable["kind"] = m.loss.observable.string_order ? "string_order" : "susceptibility";
  if (m.loss.observable.string_order) {
    observable["i"] = m.loss.observable.i;
    observable["j"] = m.loss.observable.j;
  }
  ordered_json loss;
  loss["target_energy"] = m.loss.target_energy;
  loss["sigma"] = m.loss.sigma;
  loss["beta"] = m.loss.beta;
  loss["observable"] = observable;

  const OptimizerConfig& c = m.optimizer;
  ordered_json opt;
  opt["method"] = std::string(to_string(c.method));
  opt["learning_rate"] = c.learning_rate;
  opt["max_iters"] = c.max_iters;
  opt["convergence_tol"] = c.convergence_tol;
  opt["convergence_window"] = c.convergence_window;
  opt["beta1"] = c.beta1;
  opt["beta2"] = c.beta2;
  opt["epsilon"] = c.epsilon;

  ordered_json seeds;
  seeds["base_seed"] = m.base_seed;
  seeds["n_restarts"] = m.n_restarts;

  ordered_json j;
  j["schema_version"] = m.schema_version;
  j["experiment"] = to_string(m.experiment);
  j["n_qubits"] = m.n_qubits;
  j["model"] = model;
  j["circuit"] = circuit;
  j["initial_state"] = std::string(to_string(m.initial_state));
  j["loss"] = loss;
  j["optimizer"] = opt;
  j["seeds"] = seeds;
  j["output"] = ordered_json{{"dir", m.output_dir}};
  return j;
}

std::string manifest_hash(const RunManifest& m) { return fnv1a_hex(to_json(m).dump()); }

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

Hamiltonian build_hamiltonian(const RunManifest& m) {
  if (m.model.label == ModelKind::IsingAnnni) return build_ising_annni(m.n_qubits, m.model.field, m.model.boundary);
  return build_cluster_ising(m.n_qubits, m.model.field);
}

CircuitSpec build_circuit(const RunManifest& m) {
  CircuitSpec c;
  switch (m.circuit.kind) {
    case CircuitKind::Z2Brickwork:
      c = build_z2_brickwork(m.n_qubits, m.circuit.depth, m.circuit.assignment, m.circuit.generators);
      break;
    case CircuitKind::SptLayer:
      c = build_spt_layer(m.n_qubits, m.circuit.depth);
      break;
    case CircuitKind::Identity:
      c.n_qubits = m.n_qubits;
      break;
  }
  validate_circuit(c);
  return c;
}

LossConfig build_loss_config(const RunManifest& m) {
  LossConfig cfg;
  cfg.target_energy = m.loss.target_energy;
  cfg.sigma = m.loss.sigma;
  cfg.beta = m.loss.beta;
  cfg.observable = m.loss.observable.string_order ? OrderObservable::string_order(m.loss.observable.i, m.loss.observable.j)
                                                  : OrderObservable::susceptibility();
  cfg.validate();
  return cfg;
}

RunSpec build_run_spec(const RunManifest& m) {
  return RunSpec{build_circuit(m), build_hamiltonian(m), build_loss_config(m), m.optimizer, m.initial_state};
}

}  // namespace qorder::app
