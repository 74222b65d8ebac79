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

#include <stdexcept>
#include <string>
#include <string_view>

namespace lesionsym {

// Stable error codes. The CLI surfaces them as `error: <Name>: <detail>`.
enum class Errc {
  // image I/O
  MalformedImage,
  UnsupportedFormat,
  EncodeFailure,
  // geometry
  EmptyMask,
  // metrics
  LengthMismatch,
  UnknownLabel,
  EmptyMatrix,
  // tabular ingestion
  HeaderMismatch,
  RaggedRow,
  NonFiniteValue,
  DuplicateId,
  UnknownId,
  // svm
  EmptySet,
  SingleClassData,
  TooFewClasses,
  DimensionMismatch,
  UnlabeledData,
  // dataset ops
  MissingMask,
  EmptyInput,
  BadFractions,
  // synthesis
  ConstructionFailed,
  // misc
  InvalidArgument,
  IoFailure,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

}  // namespace lesionsym
