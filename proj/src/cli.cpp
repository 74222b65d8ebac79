// Copyright 2026 The lesionsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lesionsym/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "lesionsym/csv.hpp"
#include "lesionsym/dataset.hpp"
#include "lesionsym/error.hpp"
#include "lesionsym/features.hpp"
#include "lesionsym/fsio.hpp"
#include "lesionsym/gsaa.hpp"
#include "lesionsym/kernels.hpp"
#include "lesionsym/mask_io.hpp"
#include "lesionsym/metrics.hpp"
#include "lesionsym/svm.hpp"
#include "lesionsym/synth.hpp"

namespace fs = std::filesystem;

namespace lesionsym {

namespace {

// Writes to the path, or to stdout when no path was given.
void emit(const std::optional<std::string>& out_path, const std::string& content) {
  if (out_path) {
    write_file_text(*out_path, content);
  } else {
    std::cout << content;
  }
}

// Mask files in `dir` keyed by filename stem, lexicographic stem order.
std::vector<std::pair<std::string, fs::path>> discover_masks(const std::string& dir) {
  if (!fs::is_directory(dir)) fail(Errc::IoFailure, "not a directory: " + dir);
  std::map<std::string, fs::path> by_stem;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (!format_from_extension(entry.path())) continue;
    std::string stem = entry.path().stem().string();
    auto [it, inserted] = by_stem.emplace(stem, entry.path());
    if (!inserted) fail(Errc::DuplicateId, "mask stem '" + stem + "' appears with multiple extensions");
  }
  if (by_stem.empty()) fail(Errc::EmptyInput, "no .png/.pbm/.pgm masks in " + dir);
  return {by_stem.begin(), by_stem.end()};
}

std::string join_warnings(const std::vector<GsaaWarning>& warnings) {
  std::string out;
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    if (i) out += ';';
    out += to_string(warnings[i]);
  }
  return out;
}

GsaaConfig make_config(const std::string& pair_set, const std::string& mode) {
  GsaaConfig config;
  if (pair_set == "algorithm") {
    config.pair_set = PairSet::algorithm;
  } else if (pair_set == "table") {
    config.pair_set = PairSet::table;
  } else {
    fail(Errc::InvalidArgument, "pair set '" + pair_set + "'");
  }
  if (mode == "symmetric") {
    config.mode = IndicatorMode::symmetric;
  } else if (mode == "literal") {
    config.mode = IndicatorMode::literal;
  } else {
    fail(Errc::InvalidArgument, "indicator mode '" + mode + "'");
  }
  return config;
}

void run_classify(const std::string& masks_dir, const std::string& pair_set, const std::string& mode,
                  const std::optional<std::string>& out_path) {
  const GsaaConfig config = make_config(pair_set, mode);
  std::string out = "image_id,label,a_p,b_p,c_p,d_p,i1,i2,i3,i4,warnings\n";
  for (const auto& [stem, path] : discover_masks(masks_dir)) {
    LoadResult loaded = load_mask_file(path);
    GsaaResult result;
    try {
      result = classify(loaded.mask, config);
    } catch (const Error& e) {
      if (e.code() == Errc::EmptyMask) fail(Errc::EmptyMask, "mask '" + stem + "' has no white pixels");
      throw;
    }
    if (loaded.non_binary) result.warnings.push_back(GsaaWarning::non_binary_input);
    std::vector<std::string> row{
        stem,
        std::string(to_string(result.label)),
        std::to_string(result.counts.a),
        std::to_string(result.counts.b),
        std::to_string(result.counts.c),
        std::to_string(result.counts.d),
    };
    for (bool bit : result.indicators) row.push_back(bit ? "1" : "0");
    row.push_back(join_warnings(result.warnings));
    out += csv::join(row) + "\n";
  }
  emit(out_path, out);
}

// Prediction CSV: any header containing image_id and label columns works, so
// both `classify` and `svm predict` outputs feed straight in.
std::vector<std::pair<std::string, std::string>> read_predictions(const std::string& path) {
  auto rows = csv::parse(read_file_text(path));
  if (rows.empty()) fail(Errc::HeaderMismatch, "prediction CSV has no header");
  const auto& header = rows[0];
  int id_col = -1, label_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "image_id" || header[i] == "id") {
      if (id_col < 0) id_col = static_cast<int>(i);
    } else if (header[i] == "label") {
      label_col = static_cast<int>(i);
    }
  }
  if (id_col < 0 || label_col < 0)
    fail(Errc::HeaderMismatch, "prediction CSV needs image_id (or id) and label columns");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (static_cast<int>(row.size()) <= std::max(id_col, label_col))
      fail(Errc::RaggedRow, "prediction row " + std::to_string(r));
    out.emplace_back(row[id_col], row[label_col]);
  }
  if (out.empty()) fail(Errc::EmptyInput, "prediction CSV has no rows");
  return out;
}

void run_eval(const std::optional<std::string>& cm_path, const std::optional<std::string>& pred_path,
              const std::optional<std::string>& truth_path, const std::optional<std::string>& out_path) {
  MetricsReport report;
  if (cm_path) {
    report = full_report(cm_from_csv(read_file_text(*cm_path)));
  } else {
    const auto predictions = read_predictions(*pred_path);
    const LabelTable truth = ingest_labels(read_file_text(*truth_path));
    std::vector<std::string> pred_labels, actual_labels;
    for (const auto& [id, label_text] : predictions) {
      auto predicted = parse_symmetry_class(label_text);
      if (!predicted) fail(Errc::UnknownLabel, "predicted label '" + label_text + "' for '" + id + "'");
      auto actual = truth.find(id);
      if (!actual) fail(Errc::UnknownId, "prediction id '" + id + "' not in truth table");
      pred_labels.emplace_back(to_string(*predicted));
      actual_labels.emplace_back(to_string(*actual));
    }
    report = full_report(confusion_matrix(pred_labels, actual_labels, ClassSet::default3()));
  }
  emit(out_path, report_to_json(report).dump(2) + "\n");
}

void run_augment(const std::string& masks_dir, const std::string& labels_path, const std::string& out_dir) {
  const LabelTable labels = ingest_labels(read_file_text(labels_path));
  std::map<std::string, fs::path> by_stem;
  for (const auto& [stem, path] : discover_masks(masks_dir)) by_stem.emplace(stem, path);

  fs::create_directories(out_dir);
  auto augmented = augment_mirror(labels, [&](const std::string& id) {
    auto it = by_stem.find(id);
    if (it == by_stem.end()) fail(Errc::MissingMask, "no mask file for labeled id '" + id + "'");
    return load_mask_file(it->second).mask;
  });

  LabelTable out_labels;
  for (const auto& item : augmented) {
    save_mask_file(fs::path(out_dir) / (item.id + ".png"), item.mask);
    out_labels.entries.emplace_back(item.id, item.label);
    ++out_labels.class_counts[static_cast<std::size_t>(item.label)];
  }
  write_file_text(fs::path(out_dir) / "labels.csv", labels_to_csv(out_labels));
}

void run_split(const std::string& labels_path, const std::string& fractions_text, std::uint64_t seed,
               std::optional<std::uint64_t> test_count, const std::string& out_path) {
  const LabelTable labels = ingest_labels(read_file_text(labels_path));
  auto parts = csv::split_line(fractions_text);
  if (parts.size() != 3) fail(Errc::BadFractions, "--fractions expects train,val,test");
  SplitFractions fractions{parse_decimal_fraction(parts[0]), parse_decimal_fraction(parts[1]),
                           parse_decimal_fraction(parts[2])};
  SplitManifest manifest = split(labels.ids(), fractions, seed, test_count);
  write_file_text(out_path, manifest_to_json(manifest).dump(2) + "\n");
}

// Rebuilds a coherent FeatureSet (classes included) from a subset of ids.
FeatureSet subset_features(const FeatureSet& all, const std::vector<std::string>& ids) {
  FeatureSet out;
  out.dim = all.dim;
  std::set<std::string> labels;
  for (const auto& id : ids) {
    const FeatureRecord* rec = all.find(id);
    if (!rec) fail(Errc::UnknownId, "manifest id '" + id + "' not in features");
    out.records.push_back(*rec);
    if (!rec->label.empty()) labels.insert(rec->label);
  }
  out.classes.labels.assign(labels.begin(), labels.end());
  return out;
}

void run_svm_train(const std::string& features_path, const std::string& manifest_path, std::uint64_t seed,
                   double lambda, int epochs, bool no_standardize, const std::string& out_path) {
  const FeatureSet all = load_features(read_file_text(features_path));
  const SplitManifest manifest = manifest_from_json(read_file_text(manifest_path));
  const FeatureSet train = subset_features(all, manifest.train);
  SvmHyper hyper;
  hyper.lambda = lambda;
  hyper.epochs = epochs;
  OvoEnsemble ensemble = train_ovo(train, hyper, seed, !no_standardize);
  write_file_text(out_path, ensemble_to_json(ensemble));
}

void run_svm_predict(const std::string& model_path, const std::string& features_path,
                     const std::optional<std::string>& out_path) {
  const OvoEnsemble ensemble = ensemble_from_json(read_file_text(model_path));
  const FeatureSet features = load_features(read_file_text(features_path));
  std::vector<std::string> header{"id", "label"};
  for (const auto& label : ensemble.classes.labels) header.push_back("votes_" + label);
  std::string out = csv::join(header) + "\n";
  for (const auto& rec : features.records) {
    Prediction p = predict(ensemble, rec.features);
    std::vector<std::string> row{rec.id, p.label};
    for (int v : p.votes) row.push_back(std::to_string(v));
    out += csv::join(row) + "\n";
  }
  emit(out_path, out);
}

void run_synth(const std::string& kind, int count, std::uint64_t seed, int size, const std::string& out_dir) {
  if (count < 1) fail(Errc::InvalidArgument, "--count must be >= 1");
  fs::create_directories(out_dir);
  LabelTable labels;
  char id_buf[32];
  for (int i = 0; i < count; ++i) {
    std::string klass = kind;
    if (kind == "mixed") {
      klass = (i % 3 == 0) ? "asymmetric" : (i % 3 == 1) ? "half_symmetric" : "symmetric";
    }
    ShapeSpec spec;
    spec.size = size;
    spec.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    BinaryMask mask(1, 1);
    SymmetryClass label;
    if (klass == "symmetric") {
      static const ShapeKind cycle[3] = {ShapeKind::mirrored_blob, ShapeKind::disk, ShapeKind::ellipse};
      spec.kind = cycle[i % 3];
      mask = gen_symmetric(spec);
      label = SymmetryClass::symmetric;
    } else if (klass == "half_symmetric") {
      spec.kind = ShapeKind::one_axis_blob;
      mask = gen_half_symmetric(spec, i % 2 == 0 ? SymmetryAxis::vertical : SymmetryAxis::horizontal);
      label = SymmetryClass::half_symmetric;
    } else if (klass == "asymmetric") {
      spec.kind = ShapeKind::free_blob;
      mask = gen_asymmetric(spec);
      label = SymmetryClass::asymmetric;
    } else {
      fail(Errc::InvalidArgument, "synth kind '" + kind + "'");
    }
    std::snprintf(id_buf, sizeof(id_buf), "mask_%05d", i);
    save_mask_file(fs::path(out_dir) / (std::string(id_buf) + ".png"), mask);
    labels.entries.emplace_back(id_buf, label);
    ++labels.class_counts[static_cast<std::size_t>(label)];
  }
  write_file_text(fs::path(out_dir) / "labels.csv", labels_to_csv(labels));
}

void add_classify_command(CLI::App& app, const std::string& name, const std::string& description,
                          std::function<void()>& action) {
  auto* cmd = app.add_subcommand(name, description);
  auto masks = std::make_shared<std::string>();
  auto pair_set = std::make_shared<std::string>("algorithm");
  auto mode = std::make_shared<std::string>("symmetric");
  auto out = std::make_shared<std::optional<std::string>>();
  cmd->add_option("--masks", *masks, "Directory of .png/.pbm/.pgm masks")->required();
  cmd->add_option("--pair-set", *pair_set, "Quadrant ratio pairs: algorithm|table")
      ->check(CLI::IsMember({"algorithm", "table"}));
  cmd->add_option("--mode", *mode, "Band test: symmetric|literal")
      ->check(CLI::IsMember({"symmetric", "literal"}));
  cmd->add_option("--out", *out, "Output CSV path (default: stdout)");
  cmd->callback([=, &action] { action = [=] { run_classify(*masks, *pair_set, *mode, *out); }; });
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Lesion mask symmetry classification and evaluation toolkit"};
  app.require_subcommand(1);

  // Subcommand callbacks fire inside parse(); they only record the work so
  // that usage errors stay on exit code 2 and data faults on exit code 1.
  std::function<void()> action;

  std::string kernels_backend = "auto";
  app.add_option("--kernels", kernels_backend, "Kernel backend: auto|scalar|avx2|neon")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  add_classify_command(app, "classify", "Classify every mask in a directory", action);
  add_classify_command(app, "label", "Generate shape labels for an unannotated mask directory", action);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Compute the metric suite for predictions or a confusion matrix");
  auto cm_path = std::make_shared<std::optional<std::string>>();
  auto pred_path = std::make_shared<std::optional<std::string>>();
  auto truth_path = std::make_shared<std::optional<std::string>>();
  auto eval_out = std::make_shared<std::optional<std::string>>();
  auto* cm_opt = eval_cmd->add_option("--cm", *cm_path, "Confusion matrix CSV (rows = predicted)");
  auto* pred_opt = eval_cmd->add_option("--pred", *pred_path, "Prediction CSV (image_id,label,...)");
  auto* truth_opt = eval_cmd->add_option("--truth", *truth_path, "Ground truth CSV (image_id,label)");
  eval_cmd->add_option("--out", *eval_out, "Output JSON path (default: stdout)");
  cm_opt->excludes(pred_opt)->excludes(truth_opt);
  pred_opt->needs(truth_opt);
  truth_opt->needs(pred_opt);
  eval_cmd->callback([=, &action] {
    if (!*cm_path && !*pred_path)
      throw CLI::RequiredError("eval needs either --cm or --pred/--truth");
    action = [=] { run_eval(*cm_path, *pred_path, *truth_path, *eval_out); };
  });

  // augment
  auto* aug_cmd = app.add_subcommand("augment", "Mirror-augment a labeled mask set (3x)");
  auto aug_masks = std::make_shared<std::string>();
  auto aug_labels = std::make_shared<std::string>();
  auto aug_out = std::make_shared<std::string>();
  aug_cmd->add_option("--masks", *aug_masks, "Directory of masks")->required();
  aug_cmd->add_option("--labels", *aug_labels, "labels.csv for the masks")->required();
  aug_cmd->add_option("--out", *aug_out, "Output directory")->required();
  aug_cmd->callback([=, &action] { action = [=] { run_augment(*aug_masks, *aug_labels, *aug_out); }; });

  // split
  auto* split_cmd = app.add_subcommand("split", "Seeded train/val/test split of a label table");
  auto split_labels = std::make_shared<std::string>();
  auto fractions = std::make_shared<std::string>("0.75,0.20,0.05");
  auto split_seed = std::make_shared<std::uint64_t>();
  auto test_count = std::make_shared<std::optional<std::uint64_t>>();
  auto split_out = std::make_shared<std::string>();
  split_cmd->add_option("--labels", *split_labels, "labels.csv")->required();
  split_cmd->add_option("--fractions", *fractions, "train,val,test decimal fractions");
  split_cmd->add_option("--seed", *split_seed, "Shuffle seed")->required();
  split_cmd->add_option("--test-count", *test_count, "Exact test split size (overrides the test fraction)");
  split_cmd->add_option("--out", *split_out, "Output manifest JSON")->required();
  split_cmd->callback(
      [=, &action] { action = [=] { run_split(*split_labels, *fractions, *split_seed, *test_count, *split_out); }; });

  // svm train / svm predict
  auto* svm_cmd = app.add_subcommand("svm", "One-vs-one linear SVM over feature vectors");
  svm_cmd->require_subcommand(1);
  auto* train_cmd = svm_cmd->add_subcommand("train", "Train on the manifest's train split");
  auto tr_features = std::make_shared<std::string>();
  auto tr_manifest = std::make_shared<std::string>();
  auto tr_seed = std::make_shared<std::uint64_t>();
  auto tr_lambda = std::make_shared<double>(1e-4);
  auto tr_epochs = std::make_shared<int>(20);
  auto tr_no_std = std::make_shared<bool>(false);
  auto tr_out = std::make_shared<std::string>();
  train_cmd->add_option("--features", *tr_features, "features.csv")->required();
  train_cmd->add_option("--manifest", *tr_manifest, "Split manifest JSON")->required();
  train_cmd->add_option("--seed", *tr_seed, "Shuffle seed")->required();
  train_cmd->add_option("--lambda", *tr_lambda, "L2 regularization strength");
  train_cmd->add_option("--epochs", *tr_epochs, "SGD epochs");
  train_cmd->add_flag("--no-standardize", *tr_no_std, "Skip feature standardization");
  train_cmd->add_option("--out", *tr_out, "Output model JSON")->required();
  train_cmd->callback([=, &action] {
    action = [=] { run_svm_train(*tr_features, *tr_manifest, *tr_seed, *tr_lambda, *tr_epochs, *tr_no_std, *tr_out); };
  });

  auto* predict_cmd = svm_cmd->add_subcommand("predict", "Predict labels for feature vectors");
  auto pr_model = std::make_shared<std::string>();
  auto pr_features = std::make_shared<std::string>();
  auto pr_out = std::make_shared<std::optional<std::string>>();
  predict_cmd->add_option("--model", *pr_model, "Model JSON")->required();
  predict_cmd->add_option("--features", *pr_features, "features.csv")->required();
  predict_cmd->add_option("--out", *pr_out, "Output CSV path (default: stdout)");
  predict_cmd->callback([=, &action] { action = [=] { run_svm_predict(*pr_model, *pr_features, *pr_out); }; });

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Generate a labeled synthetic mask dataset");
  auto synth_kind = std::make_shared<std::string>();
  auto synth_count = std::make_shared<int>();
  auto synth_seed = std::make_shared<std::uint64_t>();
  auto synth_size = std::make_shared<int>(64);
  auto synth_out = std::make_shared<std::string>();
  synth_cmd->add_option("--kind", *synth_kind, "symmetric|half_symmetric|asymmetric|mixed")
      ->required()
      ->check(CLI::IsMember({"symmetric", "half_symmetric", "asymmetric", "mixed"}));
  synth_cmd->add_option("--count", *synth_count, "Number of masks")->required();
  synth_cmd->add_option("--seed", *synth_seed, "Generation seed")->required();
  synth_cmd->add_option("--size", *synth_size, "Mask side length in pixels");
  synth_cmd->add_option("--out", *synth_out, "Output directory")->required();
  synth_cmd->callback(
      [=, &action] { action = [=] { run_synth(*synth_kind, *synth_count, *synth_seed, *synth_size, *synth_out); }; });

  std::vector<const char*> argv;
  argv.push_back("lesionsym");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    kernels::set_active_backend(kernels_backend);
    if (action) action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lesionsym
