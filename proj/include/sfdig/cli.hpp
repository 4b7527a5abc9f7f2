// Copyright 2026 The sfdig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sfdig/pauli.hpp"

namespace sfdig {

inline constexpr const char* kToolVersion = "0.1.0";

/// Parses "start:stop:step" (stop inclusive) or a comma-separated list.
std::vector<double> parse_real_spec(std::string_view text);
std::vector<int> parse_int_spec(std::string_view text);

/// Writes to path + ".tmp" and renames over path. "-" writes to `stdout_stream`.
void write_output(const std::string& path, const std::string& content, std::ostream& stdout_stream);

struct TallyRow {
  std::string basis;
  int n_qubits;
  ResourceTally tally;
};

/**
 * Operator counts behind the resource tables.
 *   table 1: free oscillator in the JLP basis, the tuned HO basis (omega = 1)
 *            and a detuned HO basis (omega as given).
 *   table 2: lambda phi^4 site in the JLP and HO bases.
 *   table 3: the phi(x) phi(x+1) gradient coupling between two sites.
 */
std::vector<TallyRow> resource_table(int table, const std::vector<int>& n_qubits,
                                     double omega = 1.3, double lambda = 32.0);

/// Command-line entry point. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sfdig
