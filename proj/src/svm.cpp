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

#include "lesionsym/svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "lesionsym/error.hpp"
#include "lesionsym/kernels.hpp"
#include "lesionsym/rng.hpp"

namespace lesionsym {

namespace {

double regularized_hinge_objective(const LinearModel& model, const std::vector<const FeatureRecord*>& data,
                                   const std::vector<int>& y, double lambda) {
  const auto& k = kernels::active_ops();
  const std::size_t dim = model.weights.size();
  double hinge = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    double margin = y[i] * (k.dot(model.weights.data(), data[i]->features.data(), dim) + model.bias);
    if (margin < 1.0) hinge += 1.0 - margin;
  }
  double w_norm2 = k.dot(model.weights.data(), model.weights.data(), dim);
  return 0.5 * lambda * w_norm2 + hinge / static_cast<double>(data.size());
}

void check_hyper(const SvmHyper& hyper) {
  if (!(hyper.lambda > 0.0)) fail(Errc::InvalidArgument, "lambda must be positive");
  if (hyper.epochs < 1) fail(Errc::InvalidArgument, "epochs must be >= 1");
}

}  // namespace

Standardizer Standardizer::identity(std::size_t dim) {
  Standardizer s;
  s.mean.assign(dim, 0.0);
  s.stddev.assign(dim, 1.0);
  return s;
}

std::vector<double> Standardizer::transform(std::span<const double> x) const {
  if (x.size() != mean.size()) fail(Errc::DimensionMismatch, "feature dimension does not match standardizer");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - mean[i]) / stddev[i];
  return out;
}

Standardizer fit_standardizer(const FeatureSet& train) {
  if (train.records.empty()) fail(Errc::EmptySet, "cannot fit standardizer on empty set");
  const std::size_t dim = train.dim;
  const double n = static_cast<double>(train.records.size());
  Standardizer s;
  s.mean.assign(dim, 0.0);
  s.stddev.assign(dim, 0.0);
  const auto& k = kernels::active_ops();
  for (const auto& rec : train.records) k.axpy(1.0, rec.features.data(), s.mean.data(), dim);
  k.scale(s.mean.data(), dim, 1.0 / n);
  for (const auto& rec : train.records) {
    for (std::size_t i = 0; i < dim; ++i) {
      double d = rec.features[i] - s.mean[i];
      s.stddev[i] += d * d;
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    double sd = std::sqrt(s.stddev[i] / n);  // population stddev
    s.stddev[i] = sd < Standardizer::kStdFloor ? Standardizer::kStdFloor : sd;
  }
  return s;
}

FeatureSet apply(const Standardizer& s, const FeatureSet& set) {
  if (set.dim != s.mean.size()) fail(Errc::DimensionMismatch, "feature set does not match standardizer");
  FeatureSet out = set;
  for (auto& rec : out.records) rec.features = s.transform(rec.features);
  return out;
}

double LinearModel::decision(std::span<const double> x) const {
  if (x.size() != weights.size()) fail(Errc::DimensionMismatch, "feature dimension does not match model");
  return kernels::active_ops().dot(weights.data(), x.data(), x.size()) + bias;
}

LinearModel train_binary_sgd(const FeatureSet& data, std::string_view pos_class,
                             std::string_view neg_class, const SvmHyper& hyper, std::uint64_t seed,
                             TrainTrace* trace) {
  check_hyper(hyper);
  if (pos_class == neg_class) fail(Errc::InvalidArgument, "positive and negative class are the same");

  std::vector<const FeatureRecord*> subset;
  std::vector<int> y;
  for (const auto& rec : data.records) {
    if (rec.label == pos_class) {
      subset.push_back(&rec);
      y.push_back(+1);
    } else if (rec.label == neg_class) {
      subset.push_back(&rec);
      y.push_back(-1);
    }
  }
  const bool has_pos = std::find(y.begin(), y.end(), +1) != y.end();
  const bool has_neg = std::find(y.begin(), y.end(), -1) != y.end();
  if (!has_pos || !has_neg)
    fail(Errc::SingleClassData, "pair " + std::string(pos_class) + "/" + std::string(neg_class) +
                                    " lacks examples of both classes");

  LinearModel model;
  model.pos_class = pos_class;
  model.neg_class = neg_class;
  model.weights.assign(data.dim, 0.0);

  const auto& k = kernels::active_ops();
  Rng rng(seed);
  std::vector<std::size_t> order(subset.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  std::uint64_t t = 1;
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    rng.shuffle(order);
    double objective_sum = 0.0;
    for (std::size_t idx : order) {
      const double eta = 1.0 / (hyper.lambda * static_cast<double>(t));
      const double* x = subset[idx]->features.data();
      const double margin = y[idx] * (k.dot(model.weights.data(), x, data.dim) + model.bias);
      k.scale(model.weights.data(), data.dim, 1.0 - eta * hyper.lambda);
      if (margin < 1.0) {
        k.axpy(eta * y[idx], x, model.weights.data(), data.dim);
        model.bias += eta * y[idx];
      }
      ++t;
      if (trace) objective_sum += regularized_hinge_objective(model, subset, y, hyper.lambda);
    }
    if (trace) {
      trace->epoch_mean_objective.push_back(objective_sum / static_cast<double>(order.size()));
      trace->epoch_end_objective.push_back(regularized_hinge_objective(model, subset, y, hyper.lambda));
    }
  }
  return model;
}

OvoEnsemble train_ovo(const FeatureSet& train, const SvmHyper& hyper, std::uint64_t seed,
                      bool standardize) {
  check_hyper(hyper);
  if (train.records.empty()) fail(Errc::EmptySet, "empty training set");
  for (const auto& rec : train.records) {
    if (rec.label.empty()) fail(Errc::UnlabeledData, "training record '" + rec.id + "' has no label");
  }
  if (train.classes.size() < 2)
    fail(Errc::TooFewClasses, "one-vs-one needs at least 2 classes, got " + std::to_string(train.classes.size()));

  OvoEnsemble ensemble;
  ensemble.classes = train.classes;
  ensemble.hyper = hyper;
  ensemble.seed = seed;
  ensemble.standardizer = standardize ? fit_standardizer(train) : Standardizer::identity(train.dim);

  const FeatureSet prepared = apply(ensemble.standardizer, train);
  const std::size_t k = ensemble.classes.size();
  std::uint64_t pair_index = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      ensemble.models.push_back(train_binary_sgd(prepared, ensemble.classes.labels[i],
                                                 ensemble.classes.labels[j], hyper,
                                                 derive_seed(seed, pair_index)));
      ++pair_index;
    }
  }
  return ensemble;
}

Prediction predict(const OvoEnsemble& ensemble, std::span<const double> x) {
  if (x.size() != ensemble.standardizer.mean.size())
    fail(Errc::DimensionMismatch, "feature dimension does not match ensemble");
  const std::vector<double> z = ensemble.standardizer.transform(x);

  const std::size_t k = ensemble.classes.size();
  Prediction p;
  p.votes.assign(k, 0);
  p.margin_sums.assign(k, 0.0);
  for (const auto& model : ensemble.models) {
    const double f = model.decision(z);
    const int pos = ensemble.classes.index_of(model.pos_class);
    const int neg = ensemble.classes.index_of(model.neg_class);
    if (f >= 0.0) {
      ++p.votes[pos];
    } else {
      ++p.votes[neg];
    }
    p.margin_sums[pos] += f;
    p.margin_sums[neg] -= f;
  }

  std::size_t best = 0;
  for (std::size_t c = 1; c < k; ++c) {
    if (p.votes[c] > p.votes[best] ||
        (p.votes[c] == p.votes[best] && p.margin_sums[c] > p.margin_sums[best])) {
      best = c;
    }
  }
  p.label = ensemble.classes.labels[best];
  return p;
}

ConfusionMatrix evaluate(const OvoEnsemble& ensemble, const FeatureSet& test) {
  if (test.records.empty()) fail(Errc::EmptySet, "empty test set");
  std::vector<std::string> predicted, actual;
  predicted.reserve(test.records.size());
  actual.reserve(test.records.size());
  for (const auto& rec : test.records) {
    if (rec.label.empty()) fail(Errc::UnlabeledData, "test record '" + rec.id + "' has no label");
    if (ensemble.classes.index_of(rec.label) < 0)
      fail(Errc::UnknownLabel, "test label '" + rec.label + "' not in ensemble classes");
    predicted.push_back(predict(ensemble, rec.features).label);
    actual.push_back(rec.label);
  }
  return confusion_matrix(predicted, actual, ensemble.classes);
}

std::string ensemble_to_json(const OvoEnsemble& ensemble) {
  nlohmann::ordered_json j;
  j["classes"] = ensemble.classes.labels;
  j["standardizer"] = {{"mean", ensemble.standardizer.mean}, {"stddev", ensemble.standardizer.stddev}};
  nlohmann::ordered_json models = nlohmann::ordered_json::array();
  for (const auto& m : ensemble.models) {
    models.push_back({{"pos", m.pos_class}, {"neg", m.neg_class}, {"bias", m.bias}, {"weights", m.weights}});
  }
  j["models"] = models;
  j["hyper"] = {{"lambda", ensemble.hyper.lambda}, {"epochs", ensemble.hyper.epochs}};
  j["seed"] = ensemble.seed;
  return j.dump(2) + "\n";
}

OvoEnsemble ensemble_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    OvoEnsemble ensemble;
    ensemble.classes.labels = j.at("classes").get<std::vector<std::string>>();
    ensemble.standardizer.mean = j.at("standardizer").at("mean").get<std::vector<double>>();
    ensemble.standardizer.stddev = j.at("standardizer").at("stddev").get<std::vector<double>>();
    for (const auto& mj : j.at("models")) {
      LinearModel m;
      m.pos_class = mj.at("pos").get<std::string>();
      m.neg_class = mj.at("neg").get<std::string>();
      m.bias = mj.at("bias").get<double>();
      m.weights = mj.at("weights").get<std::vector<double>>();
      ensemble.models.push_back(std::move(m));
    }
    ensemble.hyper.lambda = j.at("hyper").at("lambda").get<double>();
    ensemble.hyper.epochs = j.at("hyper").at("epochs").get<int>();
    ensemble.seed = j.at("seed").get<std::uint64_t>();

    const std::size_t k = ensemble.classes.size();
    if (ensemble.models.size() != k * (k - 1) / 2)
      fail(Errc::InvalidArgument, "model count does not match class count");
    for (const auto& m : ensemble.models) {
      if (m.weights.size() != ensemble.standardizer.mean.size())
        fail(Errc::DimensionMismatch, "model weight dimension mismatch");
      if (ensemble.classes.index_of(m.pos_class) < 0 || ensemble.classes.index_of(m.neg_class) < 0)
        fail(Errc::UnknownLabel, "model references unknown class");
    }
    return ensemble;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::InvalidArgument, std::string("model JSON: ") + e.what());
  }
}

}  // namespace lesionsym
