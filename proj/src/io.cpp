#include "diamcount/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace diamcount {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char ch : cell) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  if (header.empty()) throw std::logic_error("CsvWriter: empty header");
  row(header);
  rows_ = 0;  // header is not a data row
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_)
    throw std::logic_error("CsvWriter: row width " +
                           std::to_string(cells.size()) + " != header width " +
                           std::to_string(width_));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += csv_escape(cells[i]);
  }
  out_ += '\n';
  ++rows_;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string sidecar_path(const std::string& csv_path) {
  constexpr const char* kExt = ".csv";
  if (csv_path.size() > 4 &&
      csv_path.compare(csv_path.size() - 4, 4, kExt) == 0)
    return csv_path.substr(0, csv_path.size() - 4) + ".meta.json";
  return csv_path + ".meta.json";
}

void write_sidecar(const std::string& csv_path, const std::string& command,
                   const nlohmann::json& params,
                   std::optional<std::uint64_t> seed, double duration_ms) {
  nlohmann::json meta;
  meta["command"] = command;
  meta["params"] = params;
  meta["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  meta["version"] = kArtifactVersion;
  meta["schema_version"] = kSidecarSchemaVersion;
  meta["duration_ms"] = duration_ms;
  write_text_file(sidecar_path(csv_path), meta.dump(2) + "\n");
}

}  // namespace diamcount
