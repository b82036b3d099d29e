#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sparsecenter/dataset.hpp"

namespace sparsecenter {

/// How the raw label column maps onto the two classes. Cells are compared as
/// strings first, then numerically when both sides parse as reals (so "1",
/// "+1" and "1.0" match each other).
struct LabelSpec {
  std::string column = "label";
  std::string positive = "1";
  std::string negative = "-1";
};

/// Raw numeric table: header plus samples stored row-wise as read.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Splits one CSV record. Double-quoted fields with "" escapes are supported.
std::vector<std::string> split_csv_record(const std::string& line);

/// Parses a finite real; returns false on anything else (including
/// trailing garbage, inf and nan).
bool parse_real(const std::string& text, double& out);

/// Loads a labelled CSV (one sample per row) into a features x samples
/// dataset. Feature order follows the CSV column order with the label
/// column removed.
Dataset load_csv(const std::filesystem::path& path, const LabelSpec& labels);
Dataset read_csv(std::istream& in, const LabelSpec& labels);

/// Loads an unlabelled numeric CSV. When `drop_column` names a header entry,
/// that column is ignored. An empty file yields an empty table.
Table load_feature_table(const std::filesystem::path& path, const std::string& drop_column = {});
Table read_feature_table(std::istream& in, const std::string& drop_column = {});

/// Writes a dataset back in the load_csv layout. Reals use 17 significant
/// digits, so load_csv(write_csv(d)) reproduces every value exactly.
void write_csv(std::ostream& out, const Dataset& d, const LabelSpec& labels);

/// "%.17g" formatting shared by every writer.
std::string format_real(double value);

}  // namespace sparsecenter
