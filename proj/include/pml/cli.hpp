// Copyright 2026 The PML Mechanisms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PML_CLI_HPP_
#define PML_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace pml {

// Entry point behind the `pml` binary; also callable in-process for tests.
// Subcommands: design, evaluate, compare, simulate. Returns the process exit
// code: 0 on success, 2 on invalid input, 3 when a method precondition is
// unmet. Set PML_LOG=debug for progress notes on stderr.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pml

#endif  // PML_CLI_HPP_
