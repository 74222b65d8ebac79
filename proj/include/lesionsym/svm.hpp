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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lesionsym/features.hpp"
#include "lesionsym/metrics.hpp"

namespace lesionsym {

// L2-regularized hinge loss minimized by per-example SGD with the step
// schedule eta_t = 1 / (lambda * t) and a seeded per-epoch shuffle. The bias
// is updated by subgradient and not regularized.
struct SvmHyper {
  double lambda = 1e-4;
  int epochs = 20;
};

// Per-feature affine transform fitted on training data: (x - mean) / stddev
// with population stddev floored at kStdFloor so constant columns map to 0.
struct Standardizer {
  static constexpr double kStdFloor = 1e-12;
  std::vector<double> mean;
  std::vector<double> stddev;

  static Standardizer identity(std::size_t dim);
  std::vector<double> transform(std::span<const double> x) const;
};

Standardizer fit_standardizer(const FeatureSet& train);          // EmptySet
FeatureSet apply(const Standardizer& s, const FeatureSet& set);  // DimensionMismatch

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  std::string pos_class;
  std::string neg_class;

  double decision(std::span<const double> x) const;  // w.x + b
};

// Objective diagnostics, one entry per epoch: the regularized hinge
// objective averaged over the steps of the epoch, and its value at epoch end.
struct TrainTrace {
  std::vector<double> epoch_mean_objective;
  std::vector<double> epoch_end_objective;
};

// Trains one binary model on the records labeled pos_class (y=+1) or
// neg_class (y=-1); records with any other label are ignored, which is the
// one-vs-one coding. Expects features already standardized by the caller.
// Deterministic in (data order, hyper, seed). Errors: SingleClassData.
LinearModel train_binary_sgd(const FeatureSet& data, std::string_view pos_class,
                             std::string_view neg_class, const SvmHyper& hyper, std::uint64_t seed,
                             TrainTrace* trace = nullptr);

// One linear model per unordered class pair: K(K-1)/2 models for K classes,
// in index order (0,1), (0,2), ..., (K-2,K-1) over the sorted class set.
struct OvoEnsemble {
  ClassSet classes;
  Standardizer standardizer;
  std::vector<LinearModel> models;
  SvmHyper hyper;
  std::uint64_t seed = 0;
};

// Fits the standardizer on the whole labeled training set, then trains each
// pair model on its own seeded stream. `standardize` false keeps raw
// features (identity standardizer). Errors: TooFewClasses, UnlabeledData.
OvoEnsemble train_ovo(const FeatureSet& train, const SvmHyper& hyper, std::uint64_t seed,
                      bool standardize = true);

struct Prediction {
  std::string label;
  std::vector<int> votes;           // per class, ensemble class order
  std::vector<double> margin_sums;  // signed decision values accumulated per class
};

// Majority vote over the pair models; ties break to the largest summed
// signed margin among the tied classes, then to the earliest class.
// Errors: DimensionMismatch.
Prediction predict(const OvoEnsemble& ensemble, std::span<const double> x);

// Confusion matrix (rows = predicted) of the ensemble on a labeled set.
// Errors: UnlabeledData, UnknownLabel, DimensionMismatch.
ConfusionMatrix evaluate(const OvoEnsemble& ensemble, const FeatureSet& test);

// Single-document JSON persistence; numbers round-trip bit-exactly.
std::string ensemble_to_json(const OvoEnsemble& ensemble);
OvoEnsemble ensemble_from_json(std::string_view text);

}  // namespace lesionsym
