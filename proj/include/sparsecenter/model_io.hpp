#pragma once

#include <filesystem>
#include <iosfwd>

#include "sparsecenter/classify.hpp"

namespace sparsecenter {

inline constexpr int kModelFormatVersion = 1;

/// Writes the model as JSON with the fields, in order: format_version, kind,
/// k, selected, theta_pos, theta_neg, scale, feature_names. Reals carry 17
/// significant digits; scale and feature_names are null when absent.
void write_model(std::ostream& out, const CenterModel& model);
void save_model(const std::filesystem::path& path, const CenterModel& model);

/// Parses and validates a model file. Throws DataError on malformed input or
/// on centers that violate the model invariants.
CenterModel read_model(std::istream& in);
CenterModel load_model(const std::filesystem::path& path);

}  // namespace sparsecenter
