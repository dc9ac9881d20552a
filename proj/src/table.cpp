#include "orlicz/table.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_quote(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Minimal RFC-4180 reader for the subset this writer emits.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  std::size_t i = 0;
  const auto push_field = [&] {
    record.push_back(field);
    field.clear();
  };
  const auto push_record = [&] {
    push_field();
    records.push_back(record);
    record.clear();
  };
  while (i < text.size()) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      push_field();
    } else if (c == '\r') {
      // swallow; newline handling below
    } else if (c == '\n') {
      push_record();
    } else {
      field += c;
    }
    ++i;
  }
  if (!field.empty() || !record.empty()) push_record();
  return records;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ExperimentTable::ExperimentTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
  if (columns_.empty()) throw PreconditionError("table: need at least one column");
}

void ExperimentTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) {
    throw PreconditionError("table: row width does not match the header");
  }
  rows_.push_back(std::move(row));
}

void ExperimentTable::set_metadata(const std::string& key, const std::string& value) {
  metadata_[key] = value;
}

std::size_t ExperimentTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw PreconditionError("table: no column named '" + name + "'");
}

double ExperimentTable::at(std::size_t row, const std::string& column) const {
  return rows_.at(row).at(column_index(column));
}

std::string ExperimentTable::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out << ',';
    out << csv_quote(columns_[i]);
  }
  out << "\r\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_number(row[i]);
    }
    out << "\r\n";
  }
  return out.str();
}

std::string ExperimentTable::to_json() const {
  nlohmann::json j;
  j["columns"] = columns_;
  j["metadata"] = metadata_;
  j["rows"] = rows_;
  return j.dump(2) + "\n";
}

void ExperimentTable::write_csv(const std::string& path) const {
  write_file_atomic(path, to_csv());
}

void ExperimentTable::write_json(const std::string& path) const {
  write_file_atomic(path, to_json());
}

ExperimentTable ExperimentTable::from_csv(const std::string& text) {
  const auto records = parse_csv(text);
  if (records.empty()) throw PreconditionError("table: empty CSV");
  ExperimentTable t(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    std::vector<double> row;
    row.reserve(records[r].size());
    for (const auto& f : records[r]) row.push_back(std::strtod(f.c_str(), nullptr));
    t.add_row(std::move(row));
  }
  return t;
}

ExperimentTable ExperimentTable::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ExperimentTable t(j.at("columns").get<std::vector<std::string>>());
  for (const auto& row : j.at("rows")) {
    t.add_row(row.get<std::vector<double>>());
  }
  if (j.contains("metadata")) {
    for (const auto& [k, v] : j.at("metadata").items()) {
      t.set_metadata(k, v.get<std::string>());
    }
  }
  return t;
}

void write_file_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << text;
    if (!out.flush()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace orlicz
