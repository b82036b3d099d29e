#include "sparsecenter/model_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "sparsecenter/csv.hpp"
#include "sparsecenter/errors.hpp"

namespace sparsecenter {

namespace {

void write_real_array(std::ostream& out, const std::vector<double>& values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << format_real(values[i]);
  }
  out << ']';
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::vector<double> real_array(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw DataError(std::string("model field '") + field + "' must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw DataError(std::string("model field '") + field + "' holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

const nlohmann::json& field(const nlohmann::json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw DataError(std::string("model file lacks field '") + name + "'");
  return *it;
}

}  // namespace

void write_model(std::ostream& out, const CenterModel& model) {
  out << "{\n";
  out << "  \"format_version\": " << kModelFormatVersion << ",\n";
  out << "  \"kind\": \"" << to_string(model.kind()) << "\",\n";
  out << "  \"k\": " << model.k() << ",\n";
  out << "  \"selected\": [";
  for (std::size_t i = 0; i < model.selected().size(); ++i) {
    if (i) out << ", ";
    out << model.selected()[i];
  }
  out << "],\n";
  out << "  \"theta_pos\": ";
  write_real_array(out, model.theta_pos());
  out << ",\n  \"theta_neg\": ";
  write_real_array(out, model.theta_neg());
  out << ",\n  \"scale\": ";
  if (model.scale()) {
    write_real_array(out, model.scale()->sigma());
  } else {
    out << "null";
  }
  out << ",\n  \"feature_names\": ";
  if (model.feature_names()) {
    out << '[';
    const auto& names = *model.feature_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out << ", ";
      out << json_string(names[i]);
    }
    out << ']';
  } else {
    out << "null";
  }
  out << "\n}\n";
}

void save_model(const std::filesystem::path& path, const CenterModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write_model(out, model);
}

CenterModel read_model(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("model file must hold a JSON object");

  const auto& version = field(doc, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kModelFormatVersion) {
    throw DataError("unsupported model format_version");
  }
  const auto& kind_field = field(doc, "kind");
  if (!kind_field.is_string()) throw DataError("model field 'kind' must be a string");
  const std::string kind_text = kind_field.get<std::string>();
  if (kind_text != "l1" && kind_text != "l2") throw DataError("unknown model kind '" + kind_text + "'");

  const auto& k_field = field(doc, "k");
  if (!k_field.is_number_unsigned()) throw DataError("model field 'k' must be a nonnegative integer");

  std::vector<std::size_t> selected;
  const auto& sel = field(doc, "selected");
  if (!sel.is_array()) throw DataError("model field 'selected' must be an array");
  for (const auto& v : sel) {
    if (!v.is_number_unsigned()) throw DataError("model field 'selected' holds a bad index");
    selected.push_back(v.get<std::size_t>());
  }

  std::optional<FeatureScale> scale;
  const auto& scale_field = field(doc, "scale");
  if (!scale_field.is_null()) scale.emplace(real_array(scale_field, "scale"));

  std::optional<std::vector<std::string>> names;
  const auto& names_field = field(doc, "feature_names");
  if (!names_field.is_null()) {
    if (!names_field.is_array()) throw DataError("model field 'feature_names' must be an array");
    names.emplace();
    for (const auto& v : names_field) {
      if (!v.is_string()) throw DataError("model field 'feature_names' holds a non-string");
      names->push_back(v.get<std::string>());
    }
  }

  return CenterModel(parse_model_kind(kind_text), k_field.get<std::size_t>(), std::move(selected),
                     real_array(field(doc, "theta_pos"), "theta_pos"),
                     real_array(field(doc, "theta_neg"), "theta_neg"), std::move(scale),
                     std::move(names));
}

CenterModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_model(in);
}

}  // namespace sparsecenter
