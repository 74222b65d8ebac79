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

#include "lesionsym/metrics.hpp"

#include <charconv>

#include "lesionsym/csv.hpp"
#include "lesionsym/error.hpp"

namespace lesionsym {

namespace {

// JSON number carrying an exact decimal rounded at 6 places.
double json_number(const Rational& value) { return std::stod(value.to_decimal(6)); }

void require_nonempty(const ConfusionMatrix& cm) {
  if (cm.k() == 0 || cm.n() == 0) fail(Errc::EmptyMatrix, "confusion matrix has no observations");
}

}  // namespace

ClassSet ClassSet::default3() { return ClassSet{{"asymmetric", "half_symmetric", "symmetric"}}; }

int ClassSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

ConfusionMatrix::ConfusionMatrix(ClassSet classes)
    : classes_(std::move(classes)), cells_(classes_.size() * classes_.size(), 0) {
  if (classes_.labels.empty()) fail(Errc::InvalidArgument, "class set is empty");
}

std::uint64_t ConfusionMatrix::n() const {
  std::uint64_t total = 0;
  for (std::uint64_t v : cells_) total += v;
  return total;
}

std::uint64_t ConfusionMatrix::row_sum(std::size_t predicted) const {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < k(); ++j) total += at(predicted, j);
  return total;
}

std::uint64_t ConfusionMatrix::col_sum(std::size_t actual) const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < k(); ++i) total += at(i, actual);
  return total;
}

std::uint64_t ConfusionMatrix::trace() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < k(); ++i) total += at(i, i);
  return total;
}

ConfusionMatrix confusion_matrix(const std::vector<std::string>& predicted,
                                 const std::vector<std::string>& actual, const ClassSet& classes) {
  if (predicted.size() != actual.size())
    fail(Errc::LengthMismatch, "prediction and truth lists differ in length");
  if (predicted.empty()) fail(Errc::EmptyMatrix, "no prediction/truth pairs");
  ConfusionMatrix cm(classes);
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    int p = classes.index_of(predicted[i]);
    int a = classes.index_of(actual[i]);
    if (p < 0) fail(Errc::UnknownLabel, "predicted label '" + predicted[i] + "'");
    if (a < 0) fail(Errc::UnknownLabel, "actual label '" + actual[i] + "'");
    ++cm.at(static_cast<std::size_t>(p), static_cast<std::size_t>(a));
  }
  return cm;
}

std::string_view to_string(MetricWarning w) {
  switch (w) {
    case MetricWarning::degenerate_class: return "DegenerateClass";
    case MetricWarning::degenerate_chance: return "DegenerateChance";
  }
  return "?";
}

std::vector<ClassMetrics> per_class_prf(const ConfusionMatrix& cm, std::vector<MetricWarning>* warnings) {
  require_nonempty(cm);
  std::vector<ClassMetrics> out(cm.k());
  bool degenerate = false;
  for (std::size_t k = 0; k < cm.k(); ++k) {
    const std::uint64_t tp = cm.at(k, k);
    const std::uint64_t row = cm.row_sum(k);
    const std::uint64_t col = cm.col_sum(k);
    const std::uint64_t f1_den = row + col;  // == 2 tp + fp + fn
    ClassMetrics& m = out[k];
    m.support = col;
    // row == 0 makes precision 0/0, col == 0 makes recall 0/0; both define to 0.
    if (row == 0 || col == 0) degenerate = true;
    m.precision = row ? Rational(BigInt(tp), BigInt(row)) : Rational(0);
    m.recall = col ? Rational(BigInt(tp), BigInt(col)) : Rational(0);
    m.f1 = f1_den ? Rational(BigInt(2 * tp), BigInt(f1_den)) : Rational(0);
  }
  if (degenerate && warnings) warnings->push_back(MetricWarning::degenerate_class);
  return out;
}

Rational macro_f1(const ConfusionMatrix& cm) {
  auto per_class = per_class_prf(cm);
  Rational sum;
  for (const auto& m : per_class) sum = sum + m.f1;
  return sum / Rational(static_cast<long long>(cm.k()));
}

Rational weighted_f1(const ConfusionMatrix& cm) {
  auto per_class = per_class_prf(cm);
  Rational sum;
  for (const auto& m : per_class) sum = sum + Rational(static_cast<long long>(m.support)) * m.f1;
  return sum / Rational(static_cast<long long>(cm.n()));
}

Rational kappa(const ConfusionMatrix& cm, std::vector<MetricWarning>* warnings) {
  require_nonempty(cm);
  const BigInt n = cm.n();
  BigInt chance = 0;  // sum_k row_k * col_k
  for (std::size_t k = 0; k < cm.k(); ++k) chance += BigInt(cm.row_sum(k)) * BigInt(cm.col_sum(k));
  const Rational po(BigInt(cm.trace()), n);
  const Rational pe(chance, n * n);
  if (pe == Rational(1)) {
    if (warnings) warnings->push_back(MetricWarning::degenerate_chance);
    return po == Rational(1) ? Rational(1) : Rational(0);
  }
  return (po - pe) / (Rational(1) - pe);
}

Rational accuracy(const ConfusionMatrix& cm) {
  require_nonempty(cm);
  return Rational(BigInt(cm.trace()), BigInt(cm.n()));
}

MetricsReport full_report(const ConfusionMatrix& cm) {
  require_nonempty(cm);
  MetricsReport report;
  report.classes = cm.classes();
  report.n = cm.n();
  report.per_class = per_class_prf(cm, &report.warnings);

  Rational f1_sum, weighted_sum;
  for (const auto& m : report.per_class) {
    f1_sum = f1_sum + m.f1;
    weighted_sum = weighted_sum + Rational(static_cast<long long>(m.support)) * m.f1;
  }
  report.macro_f1 = f1_sum / Rational(static_cast<long long>(cm.k()));
  report.weighted_f1 = weighted_sum / Rational(static_cast<long long>(report.n));
  report.kappa = kappa(cm, &report.warnings);
  report.accuracy = accuracy(cm);

  report.cm.assign(cm.k(), std::vector<std::uint64_t>(cm.k(), 0));
  for (std::size_t i = 0; i < cm.k(); ++i)
    for (std::size_t j = 0; j < cm.k(); ++j) report.cm[i][j] = cm.at(i, j);
  return report;
}

ConfusionMatrix cm_from_csv(std::string_view text) {
  auto rows = csv::parse(text);
  if (rows.empty()) fail(Errc::EmptyMatrix, "confusion matrix CSV is empty");
  const std::size_t k = rows.size();
  ClassSet classes;
  if (k == 3) {
    classes = ClassSet::default3();
  } else {
    for (std::size_t i = 0; i < k; ++i) classes.labels.push_back("class_" + std::to_string(i));
  }
  ConfusionMatrix cm(classes);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k)
      fail(Errc::RaggedRow, "confusion matrix row " + std::to_string(i) + " has " +
                                std::to_string(rows[i].size()) + " cells, expected " + std::to_string(k));
    for (std::size_t j = 0; j < k; ++j) {
      const std::string& cell = rows[i][j];
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size())
        fail(Errc::InvalidArgument, "confusion matrix cell '" + cell + "' is not a nonnegative integer");
      cm.at(i, j) = v;
    }
  }
  return cm;
}

nlohmann::ordered_json report_to_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["classes"] = report.classes.labels;
  j["cm"] = report.cm;
  nlohmann::ordered_json per_class;
  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    const auto& m = report.per_class[k];
    per_class[report.classes.labels[k]] = {
        {"precision", json_number(m.precision)},
        {"recall", json_number(m.recall)},
        {"f1", json_number(m.f1)},
        {"support", m.support},
    };
  }
  j["per_class"] = per_class;
  j["macro_f1"] = json_number(report.macro_f1);
  j["weighted_f1"] = json_number(report.weighted_f1);
  j["kappa"] = json_number(report.kappa);
  j["accuracy"] = json_number(report.accuracy);
  std::vector<std::string> warnings;
  for (auto w : report.warnings) warnings.emplace_back(to_string(w));
  j["warnings"] = warnings;
  return j;
}

}  // namespace lesionsym
