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

#include "lesionsym/error.hpp"

namespace lesionsym {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::MalformedImage: return "MalformedImage";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::EncodeFailure: return "EncodeFailure";
    case Errc::EmptyMask: return "EmptyMask";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::HeaderMismatch: return "HeaderMismatch";
    case Errc::RaggedRow: return "RaggedRow";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownId: return "UnknownId";
    case Errc::EmptySet: return "EmptySet";
    case Errc::SingleClassData: return "SingleClassData";
    case Errc::TooFewClasses: return "TooFewClasses";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnlabeledData: return "UnlabeledData";
    case Errc::MissingMask: return "MissingMask";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::BadFractions: return "BadFractions";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace lesionsym
