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

#ifndef QIC_VERIFY_HPP
#define QIC_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qic {

struct CheckResult {
    std::string module;
    std::string invariant;
    /// Worst residual observed; the check passes when it stays below `tolerance`.
    double value;
    double tolerance;
    bool passed;
};

/// Runs every module's invariant checks at fixed seeds. An optional Gaussian
/// state file is checked for symmetry and purity as well.
std::vector<CheckResult> run_verification(std::uint64_t seed, const std::optional<std::string>& extra_state_path);

}  // namespace qic

#endif
