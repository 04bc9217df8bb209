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

#include <iosfwd>
#include <string>
#include <vector>

namespace gmaderiv::cli {

/// Exit codes: 0 = computed and every asserted claim holds (including
/// structured not-applicable verdicts), 1 = computed but a certification
/// came out FALSIFIED or a checked property failed, 2 = input or usage
/// error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name) against the given
/// streams; FILE arguments accept "-" for stdin. Never throws: all
/// diagnostics go to err and are reflected in the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmaderiv::cli
