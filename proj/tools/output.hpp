#ifndef CACHESIM_TOOLS_OUTPUT_HPP_
#define CACHESIM_TOOLS_OUTPUT_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cachetool {

// Fixed-decimal rendering with 9 significant digits; parsing the result and
// reformatting it reproduces the same string, so emitted files round-trip.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  int decimals = 8 - static_cast<int>(std::floor(std::log10(std::fabs(v))));
  if (decimals < 0) decimals = 0;
  if (decimals > 40) decimals = 40;
  char buf[128];
  for (int pass = 0; pass < 3; ++pass) {
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    double rounded = std::strtod(buf, nullptr);
    int wanted =
        rounded == 0.0
            ? decimals
            : 8 - static_cast<int>(std::floor(std::log10(std::fabs(rounded))));
    if (wanted < 0) wanted = 0;
    if (wanted > 40) wanted = 40;
    if (wanted == decimals) break;
    decimals = wanted;  // rounding bumped the magnitude; reformat once more
  }
  return buf;
}

inline double round_to_formatted(double v) {
  return std::strtod(format_number(v).c_str(), nullptr);
}

// Tabular result document emitted as CSV (formatted strings) or JSON
// (numbers rounded to the same precision as the CSV rendering).
class Document {
 public:
  explicit Document(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  class Row {
   public:
    explicit Row(Document* doc) : doc_(doc) {}
    Row& add_int(long long v) {
      doc_->csv_rows_.back().push_back(std::to_string(v));
      doc_->json_rows_.back().push_back(v);
      return *this;
    }
    Row& add_u64(std::uint64_t v) {
      doc_->csv_rows_.back().push_back(std::to_string(v));
      doc_->json_rows_.back().push_back(v);
      return *this;
    }
    Row& add_real(double v) {
      doc_->csv_rows_.back().push_back(format_number(v));
      if (std::isfinite(v)) {
        doc_->json_rows_.back().push_back(round_to_formatted(v));
      } else {
        doc_->json_rows_.back().push_back(nullptr);
      }
      return *this;
    }

   private:
    Document* doc_;
  };

  Row new_row() {
    csv_rows_.emplace_back();
    json_rows_.emplace_back();
    return Row(this);
  }

  std::string to_csv() const {
    std::string out = join(columns_);
    for (const auto& row : csv_rows_) {
      out += '\n';
      out += join(row);
    }
    out += '\n';
    return out;
  }

  std::string to_json() const {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : json_rows_) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        obj[columns_[i]] = row[i];
      }
      rows.push_back(std::move(obj));
    }
    nlohmann::ordered_json doc;
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }

  std::string render(const std::string& format) const {
    return format == "json" ? to_json() : to_csv();
  }

 private:
  static std::string join(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    return out;
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> csv_rows_;
  std::vector<std::vector<nlohmann::ordered_json>> json_rows_;
};

// Whole-file replace via temp file + rename, so readers never see a partial
// document and failed runs leave no output behind.
inline void write_file_atomic(const std::string& path,
                              const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + temp.string() +
                               " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(temp, ec);
      throw std::runtime_error("failed writing " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw std::runtime_error("failed moving output into place: " + path);
  }
}

}  // namespace cachetool

#endif  // CACHESIM_TOOLS_OUTPUT_HPP_
