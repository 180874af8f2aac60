// Copyright 2026 The QIC Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QIC_CLI_HPP
#define QIC_CLI_HPP

#include <iosfwd>

namespace qic {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

/// Entry point of the `qic` tool. Subcommands: lattice-evolve, qudit-suite,
/// gaussian-conj, qudit-demo, verify. Every subcommand accepts `--config FILE`
/// with flat `key=value` lines naming its long options; flags on the command
/// line win over the file, which wins over built-in defaults.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qic

#endif
