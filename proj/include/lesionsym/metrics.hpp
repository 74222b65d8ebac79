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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lesionsym/rational.hpp"

namespace lesionsym {

// Ordered class labels; the index order is the row/column order of every
// confusion matrix.
struct ClassSet {
  std::vector<std::string> labels;

  static ClassSet default3();  // asymmetric, half_symmetric, symmetric

  std::size_t size() const { return labels.size(); }
  int index_of(std::string_view label) const;  // -1 when absent

  bool operator==(const ClassSet&) const = default;
};

// K x K counts. Rows are the predicted class, columns the actual class.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(ClassSet classes);

  const ClassSet& classes() const { return classes_; }
  std::size_t k() const { return classes_.size(); }

  std::uint64_t& at(std::size_t predicted, std::size_t actual) { return cells_[predicted * k() + actual]; }
  std::uint64_t at(std::size_t predicted, std::size_t actual) const { return cells_[predicted * k() + actual]; }

  std::uint64_t n() const;
  std::uint64_t row_sum(std::size_t predicted) const;  // times predicted as this class
  std::uint64_t col_sum(std::size_t actual) const;     // support of this class
  std::uint64_t trace() const;

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  ClassSet classes_;
  std::vector<std::uint64_t> cells_;
};

// Pairs up prediction and truth lists. Errors: LengthMismatch, UnknownLabel,
// EmptyMatrix for empty input.
ConfusionMatrix confusion_matrix(const std::vector<std::string>& predicted,
                                 const std::vector<std::string>& actual, const ClassSet& classes);

enum class MetricWarning { degenerate_class, degenerate_chance };
std::string_view to_string(MetricWarning w);

struct ClassMetrics {
  Rational precision;  // tp / row_sum
  Rational recall;     // tp / col_sum
  Rational f1;         // 2 tp / (2 tp + fp + fn)
  std::uint64_t support = 0;
};

struct MetricsReport {
  ClassSet classes;
  std::vector<ClassMetrics> per_class;
  Rational macro_f1;
  Rational weighted_f1;
  Rational kappa;
  Rational accuracy;
  std::uint64_t n = 0;
  std::vector<std::vector<std::uint64_t>> cm;  // rows = predicted
  std::vector<MetricWarning> warnings;
};

// All metric operations require n > 0 and throw Error(EmptyMatrix) otherwise.
// A 0/0 cell (class never predicted and never present) defines to 0 and
// records a degenerate_class warning, so aggregates stay total.

std::vector<ClassMetrics> per_class_prf(const ConfusionMatrix& cm,
                                        std::vector<MetricWarning>* warnings = nullptr);

// Unweighted mean of the per-class F1 scores.
Rational macro_f1(const ConfusionMatrix& cm);

// Support-weighted mean of the per-class F1 scores.
Rational weighted_f1(const ConfusionMatrix& cm);

// Chance-corrected agreement (P_o - P_e) / (1 - P_e). When P_e == 1 the
// value defines to 1 for a perfect diagonal and 0 otherwise, with a
// degenerate_chance warning.
Rational kappa(const ConfusionMatrix& cm, std::vector<MetricWarning>* warnings = nullptr);

// trace / n.
Rational accuracy(const ConfusionMatrix& cm);

MetricsReport full_report(const ConfusionMatrix& cm);

// K lines of K comma-separated nonnegative integers, rows = predicted.
// Classes default to the three shape labels when K == 3, otherwise
// class_0..class_{K-1}.
ConfusionMatrix cm_from_csv(std::string_view text);

// Report JSON. Metric values are exact rationals rounded half-up at 6
// decimal places.
nlohmann::ordered_json report_to_json(const MetricsReport& report);

}  // namespace lesionsym
