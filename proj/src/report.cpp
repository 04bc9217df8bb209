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
#include "gmaderiv/report.hpp"

#include <cstdio>

namespace gmaderiv {

std::string render_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Machine) return report.machine.dump(2) + "\n";
  std::string out;
  for (const auto& line : report.text) out += line + "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "elapsed: %.1f ms", report.elapsed_seconds * 1000.0);
  out += buf;
  out += "\n";
  return out;
}

nlohmann::ordered_json map_to_json(const Matrix& m) {
  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m.at(i, j).str());
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace gmaderiv
