/*
 * Copyright 2026 The Evidence Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EVIDENCE_CLI_H_
#define EVIDENCE_CLI_H_

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace evidence {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,        // unreadable file, parse or validation failure
  kExitComputation = 3,  // total conflict, numerical fault
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
//
//   validate <file>
//   combine <file> --bbas a,b[,c...]
//   ppt <file> --bba a
//   dist <file> --pair a,b [--measure red|jousselme|betp[:all|singleton|focal]]
//   rank <file> --reference a [--measure ...]
//   repro examples | repro sweep
//
// Global flags: --format csv|json, --renormalize.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// RFC 4180 quoting: fields holding a comma, quote or line break are quoted.
std::string csv_field(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

// Fixed 4-decimal rendering used for every reported number.
std::string format_value(double value);

}  // namespace evidence

#endif  // EVIDENCE_CLI_H_
