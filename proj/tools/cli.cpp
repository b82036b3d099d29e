#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sparsecenter/csv.hpp"
#include "sparsecenter/errors.hpp"
#include "sparsecenter/eval.hpp"
#include "sparsecenter/model_io.hpp"
#include "sparsecenter/oracle.hpp"
#include "sparsecenter/sparse_l1.hpp"
#include "sparsecenter/sparse_l2.hpp"

namespace sparsecenter::cli {

namespace {

struct DataFlags {
  std::string data;
  LabelSpec labels;
  std::string scale = "none";
  int ddof = 1;
};

void add_data_flags(CLI::App& cmd, DataFlags& flags, bool with_scale) {
  cmd.add_option("data", flags.data, "Training CSV, one sample per row")->required();
  cmd.add_option("--label-col", flags.labels.column, "Name of the label column")
      ->capture_default_str();
  cmd.add_option("--pos", flags.labels.positive, "Raw label of the positive class")
      ->capture_default_str();
  cmd.add_option("--neg", flags.labels.negative, "Raw label of the negative class")
      ->capture_default_str();
  if (with_scale) {
    cmd.add_option("--scale", flags.scale, "Per-feature scaling")
        ->check(CLI::IsMember({"none", "sd", "variance"}))
        ->capture_default_str();
    cmd.add_option("--ddof", flags.ddof, "Degrees of freedom for sd/variance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  }
}

struct Loaded {
  Dataset data;
  std::optional<FeatureScale> scale;
};

Loaded load(const DataFlags& flags, std::ostream& err) {
  Dataset raw = load_csv(flags.data, flags.labels);
  const ScaleMode mode = parse_scale_mode(flags.scale);
  if (mode == ScaleMode::none) return {std::move(raw), std::nullopt};
  Standardized st = standardize(raw, mode, flags.ddof);
  for (std::size_t i : st.constant_features) {
    err << "warning: feature '" << raw.feature_name(i) << "' is constant; its scale is set to 1\n";
  }
  return {std::move(st.data), std::move(st.scale)};
}

std::vector<std::string> names_of(const Dataset& d) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d.num_features(); ++i) names.push_back(d.feature_name(i));
  return names;
}

CenterModel train(const Dataset& d, ModelKind kind, std::size_t k) {
  return kind == ModelKind::l2 ? train_l2(d, k) : train_l1(d, k);
}

double objective(const Dataset& d, const CenterModel& model) {
  return model.kind() == ModelKind::l2 ? objective_l2(d, model.theta_pos(), model.theta_neg())
                                       : objective_l1(d, model.theta_pos(), model.theta_neg());
}

void check_k(std::size_t k, const Dataset& d) {
  if (k > d.num_features()) {
    throw UsageError("--k " + std::to_string(k) + " exceeds the number of features (" +
                     std::to_string(d.num_features()) + ")");
  }
}

// Writes through a temporary buffer so that nothing lands on disk when the
// command fails halfway.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write '" + path + "'");
  file << text;
}

std::vector<std::size_t> parse_k_range(const std::string& text, std::size_t m) {
  std::vector<std::size_t> ks;
  const auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad --k-range '" + text + "'");
    }
    return static_cast<std::size_t>(std::stoull(s));
  };
  if (text == "all") {
    for (std::size_t k = 0; k <= m; ++k) ks.push_back(k);
  } else if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("bad --k-range '" + text + "'");
    const std::size_t lo = number(parts[0]);
    const std::size_t hi = number(parts[1]);
    const std::size_t step = parts.size() == 3 ? number(parts[2]) : 1;
    if (step == 0 || lo > hi) throw UsageError("bad --k-range '" + text + "'");
    for (std::size_t k = lo; k <= hi; k += step) ks.push_back(k);
  } else {
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) ks.push_back(number(p));
  }
  for (std::size_t k : ks) {
    if (k > m) throw UsageError("k = " + std::to_string(k) + " in --k-range exceeds " + std::to_string(m));
  }
  return ks;
}

int cmd_train(const DataFlags& flags, const std::string& kind_text, std::size_t k,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  Loaded in = load(flags, err);
  check_k(k, in.data);
  const ModelKind kind = parse_model_kind(kind_text);
  const CenterModel fitted = train(in.data, kind, k);
  const CenterModel model = fitted.with_metadata(in.scale, names_of(in.data));

  std::ostringstream text;
  write_model(text, model);
  emit(out_path, text.str(), out);

  std::ostringstream summary;
  summary << "kind=" << to_string(kind) << " k=" << k << " selected=";
  for (std::size_t i = 0; i < model.selected().size(); ++i) {
    if (i) summary << ';';
    summary << in.data.feature_name(model.selected()[i]);
  }
  summary << " objective=" << format_real(objective(in.data, model)) << '\n';
  (out_path.empty() ? err : out) << summary.str();
  return kSuccess;
}

int cmd_predict(const std::string& model_path, const std::string& data_path,
                const std::string& label_col, const std::string& out_path, std::ostream& out) {
  const CenterModel model = load_model(model_path);
  const Table table = load_feature_table(data_path, label_col);

  // Columns are matched by name when the model carries names that all occur
  // in the header, and by position otherwise.
  std::vector<std::size_t> column_of(model.dimension());
  bool by_name = false;
  if (model.feature_names() && !table.header.empty()) {
    std::map<std::string, std::size_t> where;
    for (std::size_t c = 0; c < table.header.size(); ++c) where.emplace(table.header[c], c);
    by_name = table.header.size() == model.dimension();
    for (std::size_t i = 0; by_name && i < model.dimension(); ++i) {
      const auto it = where.find((*model.feature_names())[i]);
      if (it == where.end()) {
        by_name = false;
      } else {
        column_of[i] = it->second;
      }
    }
  }
  if (!by_name) {
    if (!table.header.empty() && table.header.size() != model.dimension()) {
      throw DataError("data has " + std::to_string(table.header.size()) +
                      " feature columns, model expects " + std::to_string(model.dimension()));
    }
    for (std::size_t i = 0; i < model.dimension(); ++i) column_of[i] = i;
  }

  std::ostringstream text;
  text << "row,label,delta\n";
  std::vector<double> x(model.dimension());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = table.rows[r][column_of[i]];
    const Prediction p = predict(model, x);
    text << r << ',' << to_int(p.label) << ',' << format_real(p.delta) << '\n';
  }
  emit(out_path, text.str(), out);
  return kSuccess;
}

int cmd_path(const DataFlags& flags, const std::string& kind_text, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
  const Loaded in = load(flags, err);
  const ModelKind kind = parse_model_kind(kind_text);
  const SparsityPath path = kind == ModelKind::l2 ? sparsity_path_l2(in.data) : sparsity_path_l1(in.data);
  std::ostringstream text;
  text << "k,objective,newly_added_feature\n";
  for (const auto& rec : path.records) {
    text << rec.k << ',' << format_real(rec.objective) << ',';
    if (rec.added_feature) text << in.data.feature_name(*rec.added_feature);
    text << '\n';
  }
  emit(out_path, text.str(), out);
  return kSuccess;
}

struct EvalFlags {
  std::string k_range = "all";
  std::size_t splits = 50;
  double fraction = 0.8;
  std::uint64_t seed = 0;
  std::string split_mode = "stratified";
  bool no_timing = false;
};

int cmd_evaluate(const DataFlags& flags, const std::string& kind_text, const EvalFlags& ef,
                 const std::string& out_path, std::ostream& out) {
  const Dataset d = load_csv(flags.data, flags.labels);
  const ModelKind kind = parse_model_kind(kind_text);
  const std::vector<std::size_t> ks = parse_k_range(ef.k_range, d.num_features());
  EvalOptions options;
  options.split_mode = ef.split_mode == "uniform" ? SplitMode::uniform : SplitMode::stratified;
  options.scale_mode = parse_scale_mode(flags.scale);
  options.ddof = flags.ddof;
  const EvalReport report = evaluate(d, kind, ks, ef.splits, ef.fraction, ef.seed, options);
  std::ostringstream text;
  write_report_csv(text, report, !ef.no_timing);
  emit(out_path, text.str(), out);
  return kSuccess;
}

int cmd_verify(const DataFlags& flags, const std::string& kind_text, std::size_t k, bool corrupt,
               std::ostream& out) {
  const Dataset d = load_csv(flags.data, flags.labels);
  if (d.num_features() > kOracleMaxFeatures) {
    throw UsageError("verify enumerates every feature subset and is limited to " +
                     std::to_string(kOracleMaxFeatures) + " features; this dataset has " +
                     std::to_string(d.num_features()));
  }
  check_k(k, d);
  const ModelKind kind = parse_model_kind(kind_text);
  CenterModel model = train(d, kind, k);
  if (corrupt) {
    // Shift feature 0 far outside the data range on both centers.
    double span = 0.0;
    for (double v : d.features().values()) span = std::max(span, std::abs(v));
    std::vector<double> tp = model.theta_pos();
    std::vector<double> tn = model.theta_neg();
    tp[0] += 1.0 + 2.0 * span;
    tn[0] += 1.0 + 2.0 * span;
    model = CenterModel(model.kind(), model.k(), model.selected(), tp, tn);
  }
  const double fast = objective(d, model);
  const OracleResult oracle = brute_force(d, k, kind);
  const bool in_best = std::find(oracle.best_sets.begin(), oracle.best_sets.end(), model.selected()) !=
                       oracle.best_sets.end();
  const bool pass = relatively_close(fast, oracle.best_objective, kOracleTolerance);
  out << (pass ? "PASS" : "FAIL") << " kind=" << to_string(kind) << " k=" << k
      << " objective=" << format_real(fast) << " oracle=" << format_real(oracle.best_objective)
      << " sets=" << oracle.per_set_objectives.size() << " selected_in_best=" << (in_best ? "yes" : "no")
      << '\n';
  return pass ? kSuccess : kInternalError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sparse l1/l2 center classifiers", "sparsecenter"};
  app.require_subcommand(1);

  DataFlags train_flags;
  std::string train_kind = "l2";
  std::size_t train_k = 0;
  std::string train_out;
  auto* train_cmd = app.add_subcommand("train", "Train a sparse center model");
  add_data_flags(*train_cmd, train_flags, true);
  train_cmd->add_option("--kind", train_kind)->check(CLI::IsMember({"l1", "l2"}))->capture_default_str();
  train_cmd->add_option("--k", train_k, "Maximum number of selected features")->required();
  train_cmd->add_option("--out", train_out, "Model file (JSON)")->required();

  std::string predict_model;
  std::string predict_data;
  std::string predict_label = "label";
  std::string predict_out;
  auto* predict_cmd = app.add_subcommand("predict", "Classify the rows of a CSV");
  predict_cmd->add_option("model", predict_model, "Model file")->required();
  predict_cmd->add_option("data", predict_data, "CSV of samples")->required();
  predict_cmd->add_option("--label-col", predict_label, "Column to ignore if present")
      ->capture_default_str();
  predict_cmd->add_option("--out", predict_out, "Prediction CSV (default: standard output)");

  DataFlags path_flags;
  std::string path_kind = "l2";
  std::string path_out;
  auto* path_cmd = app.add_subcommand("path", "Objective along the full sparsity path");
  add_data_flags(*path_cmd, path_flags, true);
  path_cmd->add_option("--kind", path_kind)->check(CLI::IsMember({"l1", "l2"}))->capture_default_str();
  path_cmd->add_option("--out", path_out, "Path CSV (default: standard output)");

  DataFlags eval_flags;
  EvalFlags ef;
  std::string eval_kind = "l2";
  std::string eval_out;
  auto* eval_cmd = app.add_subcommand("evaluate", "Repeated train/test splits per k");
  add_data_flags(*eval_cmd, eval_flags, true);
  eval_cmd->add_option("--kind", eval_kind)->check(CLI::IsMember({"l1", "l2"}))->capture_default_str();
  eval_cmd->add_option("--k-range", ef.k_range, "'all', 'lo:hi[:step]' or a comma list")
      ->capture_default_str();
  eval_cmd->add_option("--splits", ef.splits)->check(CLI::PositiveNumber)->capture_default_str();
  eval_cmd->add_option("--fraction", ef.fraction, "Training fraction")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  eval_cmd->add_option("--seed", ef.seed)->capture_default_str();
  eval_cmd->add_option("--split-mode", ef.split_mode)
      ->check(CLI::IsMember({"stratified", "uniform"}))
      ->capture_default_str();
  eval_cmd->add_flag("--no-timing", ef.no_timing, "Write 0 in the timing column");
  eval_cmd->add_option("--out", eval_out, "Report CSV (default: standard output)");

  DataFlags verify_flags;
  std::string verify_kind = "l2";
  std::size_t verify_k = 0;
  bool verify_corrupt = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check the fast trainer against brute force");
  add_data_flags(*verify_cmd, verify_flags, false);
  verify_cmd->add_option("--kind", verify_kind)->check(CLI::IsMember({"l1", "l2"}))->capture_default_str();
  verify_cmd->add_option("--k", verify_k)->required();
  verify_cmd->add_flag("--corrupt-for-testing", verify_corrupt)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*train_cmd) return cmd_train(train_flags, train_kind, train_k, train_out, out, err);
    if (*predict_cmd) return cmd_predict(predict_model, predict_data, predict_label, predict_out, out);
    if (*path_cmd) return cmd_path(path_flags, path_kind, path_out, out, err);
    if (*eval_cmd) {
      if (!(ef.fraction > 0.0 && ef.fraction < 1.0)) throw UsageError("--fraction must lie in (0, 1)");
      return cmd_evaluate(eval_flags, eval_kind, ef, eval_out, out);
    }
    if (*verify_cmd) return cmd_verify(verify_flags, verify_kind, verify_k, verify_corrupt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace sparsecenter::cli
