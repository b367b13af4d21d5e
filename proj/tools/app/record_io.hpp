#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "manifest.hpp"
#include "qorder/train.hpp"

namespace qorder::app {

// A persisted restart: the manifest that produced it, its index in the
// ensemble, and the training record (wall time excluded).
struct StoredRecord {
  RunManifest manifest;
  int restart = 0;
  TrainingRecord record;
};

std::string record_file_name(int restart);  // record_000.json, ...

nlohmann::ordered_json to_json(const StoredRecord& r);
StoredRecord stored_record_from_json(const nlohmann::json& j);

void save_record(const std::filesystem::path& path, const StoredRecord& r);
StoredRecord load_record(const std::filesystem::path& path);

// A single record file, or every record_*.json in a directory (sorted).
std::vector<StoredRecord> load_records(const std::filesystem::path& path);

// Final state of a stored restart, rebuilt from scratch: the seeded initial
// state pushed through the circuit at the final parameters.
StateVector final_state(const StoredRecord& r);

// Writes `contents` to a sibling temp file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

std::string format_double(double x);  // shortest round-trip form

// Minimal CSV builder: '#' metadata lines, then a header and rows.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  void meta(const std::string& key, const std::string& value);
  CsvTable& add_row(std::vector<std::string> cells);
  std::size_t n_rows() const noexcept { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

// Standard metadata block: schema version plus manifest hash.
CsvTable make_table(std::vector<std::string> columns, const std::string& kind, const std::string& manifest_hash);

}  // namespace qorder::app
