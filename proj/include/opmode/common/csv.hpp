#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace opmode {

/// A parsed CSV file with a mandatory header row. No quoting support; none of
/// the formats used here carry commas inside fields.
class CsvTable {
 public:
  static CsvTable read(const std::filesystem::path& path);
  static CsvTable parse(const std::string& text, const std::string& origin);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<std::string>& row(std::size_t i) const { return rows_[i]; }

  /// Column index by name; throws ValidationError naming the file when absent.
  std::size_t column(const std::string& name) const;
  bool has_column(const std::string& name) const;

  const std::string& cell(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  double number(std::size_t row, std::size_t col) const;
  long long integer(std::size_t row, std::size_t col) const;

  /// Throws unless the header matches `expected` exactly, in order.
  void require_header(const std::vector<std::string>& expected) const;

  const std::string& origin() const { return origin_; }

 private:
  std::string origin_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::size_t> line_numbers_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Writes `content` to `path` atomically enough for our purposes: write to a
/// sibling temp file, then rename.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace opmode
