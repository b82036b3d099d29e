#include "sparsecenter/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include "sparsecenter/errors.hpp"

namespace sparsecenter {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool read_record(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

bool label_matches(const std::string& cell, const std::string& wanted) {
  if (cell == wanted) return true;
  double a = 0.0;
  double b = 0.0;
  return parse_real(cell, a) && parse_real(wanted, b) && a == b;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

std::vector<std::string> split_csv_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

bool parse_real(const std::string& text, double& out) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) return false;
  out = value;
  return true;
}

Dataset read_csv(std::istream& in, const LabelSpec& labels) {
  std::string line;
  if (!read_record(in, line)) throw DataError("missing header row");
  std::vector<std::string> header = split_csv_record(line);
  for (auto& h : header) h = trim(h);

  std::size_t label_col = header.size();
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] != labels.column) continue;
    if (label_col != header.size()) {
      throw DataError("label column '" + labels.column + "' appears more than once");
    }
    label_col = c;
  }
  if (label_col == header.size()) {
    throw DataError("label column '" + labels.column + "' not found in header");
  }

  std::vector<std::string> names;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != label_col) names.push_back(header[c]);
  }
  const std::size_t m = names.size();

  std::vector<double> values;  // samples x features, transposed below
  std::vector<Label> y;
  std::size_t row_number = 1;
  while (read_record(in, line)) {
    ++row_number;
    if (trim(line).empty()) continue;
    const auto cells = split_csv_record(line);
    if (cells.size() != header.size()) {
      throw DataError("row " + std::to_string(row_number) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == label_col) continue;
      double v = 0.0;
      if (!parse_real(cells[c], v)) {
        throw DataError("row " + std::to_string(row_number) + ", column '" + header[c] +
                        "': cannot parse '" + cells[c] + "' as a finite real");
      }
      values.push_back(v);
    }
    const std::string raw = trim(cells[label_col]);
    if (label_matches(raw, labels.positive)) {
      y.push_back(Label::positive);
    } else if (label_matches(raw, labels.negative)) {
      y.push_back(Label::negative);
    } else {
      throw DataError("row " + std::to_string(row_number) + ": unknown label '" + raw + "'");
    }
  }

  const std::size_t n = y.size();
  Matrix x(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) x(i, j) = values[j * m + i];
  }
  return Dataset(std::move(x), std::move(y), std::move(names));
}

Dataset load_csv(const std::filesystem::path& path, const LabelSpec& labels) {
  auto in = open_input(path);
  return read_csv(in, labels);
}

Table read_feature_table(std::istream& in, const std::string& drop_column) {
  Table table;
  std::string line;
  if (!read_record(in, line)) return table;
  std::vector<std::string> header = split_csv_record(line);
  for (auto& h : header) h = trim(h);
  std::size_t drop = header.size();
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (!drop_column.empty() && header[c] == drop_column) {
      drop = c;
    } else {
      table.header.push_back(header[c]);
    }
  }
  std::size_t row_number = 1;
  while (read_record(in, line)) {
    ++row_number;
    if (trim(line).empty()) continue;
    const auto cells = split_csv_record(line);
    if (cells.size() != header.size()) {
      throw DataError("row " + std::to_string(row_number) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(table.header.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == drop) continue;
      double v = 0.0;
      if (!parse_real(cells[c], v)) {
        throw DataError("row " + std::to_string(row_number) + ", column '" + header[c] +
                        "': cannot parse '" + cells[c] + "' as a finite real");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table load_feature_table(const std::filesystem::path& path, const std::string& drop_column) {
  auto in = open_input(path);
  return read_feature_table(in, drop_column);
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& out, const Dataset& d, const LabelSpec& labels) {
  const std::size_t m = d.num_features();
  for (std::size_t i = 0; i < m; ++i) out << d.feature_name(i) << ',';
  out << labels.column << '\n';
  for (std::size_t j = 0; j < d.num_samples(); ++j) {
    for (std::size_t i = 0; i < m; ++i) out << format_real(d.features()(i, j)) << ',';
    out << (d.labels()[j] == Label::positive ? labels.positive : labels.negative) << '\n';
  }
}

}  // namespace sparsecenter
