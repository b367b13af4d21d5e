#include "record_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qorder/error.hpp"

namespace qorder::app {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::string record_file_name(int restart) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "record_%03d.json", restart);
  return buf;
}

ordered_json to_json(const StoredRecord& r) {
  const TrainingRecord& t = r.record;
  ordered_json trace;
  trace["loss"] = t.loss;
  trace["order"] = t.order;
  trace["energy"] = t.energy;
  trace["variance"] = t.variance;
  trace["symmetry"] = t.symmetry;

  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["manifest_hash"] = manifest_hash(r.manifest);
  j["manifest"] = to_json(r.manifest);
  j["restart"] = r.restart;
  j["seed"] = t.seed;
  j["status"] = std::string(to_string(t.status));
  j["message"] = t.message;
  j["iterations"] = t.iterations;
  j["initial_params"] = t.initial_params;
  j["final_params"] = t.final_params;
  j["trace"] = trace;
  return j;
}

StoredRecord stored_record_from_json(const json& j) {
  StoredRecord r;
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw ArgumentError("unsupported record schema version");
    r.manifest = from_json(j.at("manifest"));
    r.restart = j.at("restart").get<int>();
    TrainingRecord& t = r.record;
    t.seed = j.at("seed").get<std::uint64_t>();
    t.status = parse_run_status(j.at("status").get<std::string>());
    t.message = j.at("message").get<std::string>();
    t.iterations = j.at("iterations").get<int>();
    t.initial_params = j.at("initial_params").get<std::vector<double>>();
    t.final_params = j.at("final_params").get<std::vector<double>>();
    const json& tr = j.at("trace");
    t.loss = tr.at("loss").get<std::vector<double>>();
    t.order = tr.at("order").get<std::vector<double>>();
    t.energy = tr.at("energy").get<std::vector<double>>();
    t.variance = tr.at("variance").get<std::vector<double>>();
    t.symmetry = tr.at("symmetry").get<std::vector<std::vector<double>>>();
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed record: ") + e.what());
  }
  return r;
}

void save_record(const fs::path& path, const StoredRecord& r) { write_atomic(path, to_json(r).dump(1) + "\n"); }

StoredRecord load_record(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read record '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ArgumentError("record '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return stored_record_from_json(j);
}

std::vector<StoredRecord> load_records(const fs::path& path) {
  if (!fs::is_directory(path)) return {load_record(path)};
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with("record_") && name.ends_with(".json")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ArgumentError("no record_*.json files in '" + path.string() + "'");
  std::vector<StoredRecord> out;
  for (const auto& f : files) out.push_back(load_record(f));
  return out;
}

StateVector final_state(const StoredRecord& r) {
  const RunSpec spec = build_run_spec(r.manifest);
  StateVector psi = restart_initial_state(spec, r.record.seed);
  if (static_cast<int>(r.record.final_params.size()) != spec.circuit.n_params)
    throw ArgumentError("record parameter count does not match its circuit");
  apply_circuit(spec.circuit, r.record.final_params, psi);
  return psi;
}

void write_atomic(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw Error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot move '" + tmp.string() + "' into place: " + ec.message());
  }
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvTable::meta(const std::string& key, const std::string& value) { meta_.emplace_back(key, value); }

CsvTable& CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) throw ArgumentError("CSV row width does not match the header");
  rows_.push_back(std::move(cells));
  return *this;
}

std::string CsvTable::str() const {
  std::ostringstream os;
  for (const auto& [k, v] : meta_) os << "# " << k << ": " << v << '\n';
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(columns_);
  for (const auto& r : rows_) line(r);
  return os.str();
}

CsvTable make_table(std::vector<std::string> columns, const std::string& kind, const std::string& manifest_hash) {
  CsvTable t(std::move(columns));
  t.meta("qorder_table", kind);
  t.meta("schema_version", std::to_string(kSchemaVersion));
  t.meta("manifest_hash", manifest_hash);
  return t;
}

}  // namespace qorder::app
