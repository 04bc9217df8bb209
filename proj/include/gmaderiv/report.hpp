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

#include <string>
#include <vector>

#include <json.hpp>

#include "gmaderiv/matrix.hpp"

namespace gmaderiv {

/// Command output in both renderings. The machine form is a JSON document
/// with insertion-ordered keys; identical inputs produce byte-identical
/// machine output (timing is reported in the text rendering only, so that
/// the machine form stays deterministic).
struct Report {
  std::string command;
  nlohmann::ordered_json machine = nlohmann::ordered_json::object();
  std::vector<std::string> text;
  double elapsed_seconds = 0.0;
};

enum class ReportFormat { Text, Machine };

std::string render_report(const Report& report, ReportFormat format);

/// Column-major JSON encoding of a coefficient map: an array of columns,
/// each an array of canonical scalar strings.
nlohmann::ordered_json map_to_json(const Matrix& m);

}  // namespace gmaderiv
