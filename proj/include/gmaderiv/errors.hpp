/* Copyright (C) 2026 The gmaderiv authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmaderiv {

/// Operands built over different ground fields were mixed in one operation.
struct FieldMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Shape of a matrix, tensor or coordinate vector does not match its use.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A structure-constant presentation violates the algebra laws.
/// Carries the witnessing basis indices when one exists.
struct AlgebraError : std::runtime_error {
  AlgebraError(const std::string& what, std::size_t i, std::size_t j, std::size_t k)
      : std::runtime_error(what), witness{i, j, k} {}
  explicit AlgebraError(const std::string& what) : std::runtime_error(what), witness{0, 0, 0} {}
  std::size_t witness[3];
};

/// A stated hypothesis of a structure statement does not hold for the input;
/// the computation is refused rather than silently producing garbage.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-side precondition was violated (e.g. a map handed to the
/// canonical-form extractor that is not a Jordan derivation).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Something that the library guarantees internally failed anyway.
struct InternalInconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Context-document parse failure with the offending line number (1-based).
struct ParseError : std::runtime_error {
  ParseError(std::size_t line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  std::size_t line;
};

}  // namespace gmaderiv
