#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace diamcount {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr int kSidecarSchemaVersion = 1;

/// %.12g with the C locale's '.' separator: the one real-number format every
/// CSV cell uses, so outputs are byte-stable.
std::string format_real(double x);

/// RFC-4180 quoting: wrap in double quotes when the cell contains a comma,
/// quote, or newline; embedded quotes double up.
std::string csv_escape(const std::string& cell);

/// Accumulates a CSV table (header fixed at construction, LF line ends) as
/// one string.  Row width mismatches are programming errors and throw
/// logic_error.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }
  std::size_t rows() const { return rows_; }

 private:
  std::size_t width_;
  std::size_t rows_ = 0;
  std::string out_;
};

/// Writes content to path verbatim; throws runtime_error if the file cannot
/// be opened or written.
void write_text_file(const std::string& path, const std::string& content);

/// The metadata path that belongs to a CSV output: a trailing ".csv" is
/// replaced by ".meta.json", anything else gets ".meta.json" appended.
std::string sidecar_path(const std::string& csv_path);

/// Writes the JSON sidecar next to csv_path: command, params, seed (null if
/// the subcommand takes none), artifact + schema versions, duration.
void write_sidecar(const std::string& csv_path, const std::string& command,
                   const nlohmann::json& params,
                   std::optional<std::uint64_t> seed, double duration_ms);

}  // namespace diamcount
