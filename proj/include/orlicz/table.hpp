#ifndef ORLICZ_TABLE_HPP
#define ORLICZ_TABLE_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace orlicz {

// Rectangular numeric result table with string metadata. CSV output is plain
// RFC-4180 (header + rows, 17 significant digits, '.' decimal); JSON carries
// the metadata as well. Serialization round-trips doubles losslessly. File
// writes go through a temp file and rename, so failed runs leave no partial
// output.
class ExperimentTable {
 public:
  explicit ExperimentTable(std::vector<std::string> columns);

  void add_row(std::vector<double> row);
  void set_metadata(const std::string& key, const std::string& value);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }
  std::size_t column_index(const std::string& name) const;
  double at(std::size_t row, const std::string& column) const;

  std::string to_csv() const;
  std::string to_json() const;
  void write_csv(const std::string& path) const;
  void write_json(const std::string& path) const;

  static ExperimentTable from_csv(const std::string& text);
  static ExperimentTable from_json(const std::string& text);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::map<std::string, std::string> metadata_;
};

// "%.17g" rendering used for every numeric field.
std::string format_number(double v);

// Write text atomically (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace orlicz

#endif
