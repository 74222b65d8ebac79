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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace lesionsym::testing {

// Published reference results this project reproduces. Matrices are 3x3 with
// rows = predicted, columns = actual; class order asymmetric, half_symmetric,
// symmetric unless noted.

using Cm3 = std::array<std::array<std::uint64_t, 3>, 3>;

// Agreement of the geometric classifier with expert labels on the two public
// dermoscopy datasets. Class order here is symmetric, half_symmetric,
// asymmetric as originally printed; the aggregate metrics are order-free.
inline constexpr Cm3 kPh2AgreementCm{{{116, 1, 0}, {1, 30, 0}, {0, 0, 52}}};
inline constexpr Cm3 kIsicAgreementCm{{{267, 4, 7}, {1, 340, 0}, {0, 0, 660}}};

// kPh2AgreementCm:  accuracy 0.990, kappa 0.982 (3 dp)
// kIsicAgreementCm: accuracy 0.9906 (4 dp), kappa 0.985 (3 dp)

// CNN-feature + one-vs-one SVM evaluation runs: 12 confusion matrices and
// the metric values reported alongside them (2 dp).
struct ReferenceRun {
  const char* name;  // <train>_<test>_<backbone>
  Cm3 cm;
  // precision, recall, f1 per class (asymmetric, half_symmetric, symmetric)
  std::array<double, 3> precision;
  std::array<double, 3> recall;
  std::array<double, 3> f1;
  double macro_f1;
  double weighted_f1;
  double kappa;
};

inline const std::vector<ReferenceRun>& reference_runs() {
  static const std::vector<ReferenceRun> runs{
      {"isic_isic_r18", {{{32, 0, 1}, {1, 16, 0}, {3, 0, 10}}},
       {0.97, 0.94, 0.77}, {0.89, 1.00, 0.91}, {0.93, 0.97, 0.83}, 0.91, 0.92, 0.87},
      {"isic_isic_r50", {{{32, 1, 0}, {2, 15, 0}, {1, 0, 12}}},
       {0.97, 0.88, 0.92}, {0.91, 0.94, 1.00}, {0.94, 0.91, 0.96}, 0.94, 0.94, 0.89},
      {"isic_isic_r101", {{{31, 1, 1}, {1, 16, 0}, {1, 0, 12}}},
       {0.94, 0.94, 0.92}, {0.94, 0.94, 0.92}, {0.94, 0.94, 0.92}, 0.93, 0.94, 0.90},
      {"aph2_isic_r18", {{{31, 0, 2}, {3, 14, 0}, {2, 1, 10}}},
       {0.94, 0.82, 0.77}, {0.86, 0.93, 0.83}, {0.90, 0.88, 0.80}, 0.86, 0.87, 0.79},
      {"aph2_isic_r50", {{{28, 3, 2}, {0, 17, 0}, {3, 0, 10}}},
       {0.85, 1.00, 0.77}, {0.90, 0.85, 0.83}, {0.88, 0.92, 0.80}, 0.86, 0.87, 0.79},
      {"aph2_isic_r101", {{{29, 3, 1}, {1, 16, 0}, {1, 0, 12}}},
       {0.88, 0.94, 0.92}, {0.94, 0.84, 0.92}, {0.91, 0.89, 0.92}, 0.91, 0.90, 0.85},
      {"aph2_aph2_r18", {{{6, 2, 0}, {0, 4, 1}, {0, 0, 18}}},
       {0.75, 0.80, 1.00}, {1.00, 0.67, 0.95}, {0.86, 0.73, 0.97}, 0.85, 0.90, 0.83},
      {"aph2_aph2_r50", {{{8, 0, 0}, {0, 4, 1}, {0, 1, 17}}},
       {1.00, 0.80, 0.94}, {1.00, 0.80, 0.94}, {1.00, 0.80, 0.94}, 0.91, 0.94, 0.89},
      {"aph2_aph2_r101", {{{8, 0, 0}, {0, 4, 1}, {0, 0, 18}}},
       {1.00, 0.80, 1.00}, {1.00, 1.00, 0.95}, {1.00, 0.89, 0.97}, 0.95, 0.97, 0.94},
      {"isic_aph2_r18", {{{8, 0, 0}, {0, 5, 0}, {3, 2, 13}}},
       {1.00, 1.00, 0.72}, {0.73, 0.71, 1.00}, {0.84, 0.83, 0.84}, 0.84, 0.84, 0.74},
      {"isic_aph2_r50", {{{8, 0, 0}, {0, 4, 1}, {0, 2, 16}}},
       {1.00, 0.80, 0.89}, {1.00, 0.67, 0.94}, {1.00, 0.73, 0.91}, 0.88, 0.90, 0.83},
      {"isic_aph2_r101", {{{8, 0, 0}, {0, 3, 2}, {0, 0, 18}}},
       {1.00, 0.60, 1.00}, {1.00, 1.00, 0.90}, {1.00, 0.75, 0.95}, 0.90, 0.94, 0.88},
  };
  return runs;
}

// Indicator-pattern rows published for the two example tables, in the table
// pair order (a/c, b/d, a/b, c/d), with the label each row carries.
struct IndicatorRow {
  std::array<int, 4> indicators;
  const char* label;
};

inline const std::vector<IndicatorRow>& reference_indicator_rows() {
  static const std::vector<IndicatorRow> rows{
      {{1, 1, 1, 1}, "symmetric"},      {{0, 0, 0, 0}, "asymmetric"}, {{0, 0, 1, 1}, "half_symmetric"},
      {{1, 1, 1, 1}, "symmetric"},      {{0, 0, 0, 0}, "asymmetric"}, {{0, 0, 0, 0}, "asymmetric"},
      {{1, 1, 0, 0}, "half_symmetric"}, {{0, 0, 0, 0}, "asymmetric"}, {{0, 0, 1, 1}, "half_symmetric"},
      {{1, 1, 1, 1}, "symmetric"},
  };
  return rows;
}

}  // namespace lesionsym::testing
