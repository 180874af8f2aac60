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

#ifndef QIC_QUDIT_ENSEMBLE_HPP
#define QIC_QUDIT_ENSEMBLE_HPP

#include <cstdint>
#include <vector>

#include "qic/common.hpp"
#include "qic/qudit_info.hpp"
#include "qic/random.hpp"

namespace qic {

/// One random (state, Haar U, su(d) generator) draw.
struct QuditTrial {
    PureState state;
    WriteOperation write;
};

/// Trial `index` of the ensemble seeded by `seed`; reproducible independently
/// of how trials are scheduled.
QuditTrial draw_qudit_trial(int d, int num_sites, std::uint64_t seed, int index);

/// Random t = sum_i a_i t_i with sum_i a_i^2 = 1, so Tr(t^2) = d.
CMatrix random_su_generator(const SuBasis& basis, Rng& rng);

struct QuditTrialResult {
    /// |Tr(rho_QIC^2) - 1|.
    double qic_purity = 0.0;
    /// ||[V, t (x) I]||_max.
    double qic_commutation = 0.0;
    /// Trace distance between post-SWAP residual states at theta = 0 and theta.
    double swap_residual_distance = 0.0;
    /// 1 - fidelity of the extracted state with w(theta)|Phi>, worst of both thetas.
    double extracted_infidelity = 0.0;
    /// |Tr(rho_AB^2) - 1|.
    double partner_purity = 0.0;
    double partner_locality = 0.0;
    /// ||rho_AB(theta) - (w (x) I) rho_AB (w (x) I)^dagger||_max.
    double partner_write = 0.0;
};

QuditTrialResult evaluate_qudit_trial(const QuditTrial& trial, double theta, Exec inner = Exec::serial);

/// Runs `trials` independent trials. `exec` chooses the serial reference loop or
/// the OpenMP loop over trials; results are identical either way.
std::vector<QuditTrialResult> run_qudit_trials(int d, int num_sites, int trials, std::uint64_t seed, double theta,
                                               Exec exec);

/// Component-wise maximum.
QuditTrialResult worst_case(const std::vector<QuditTrialResult>& results);

}  // namespace qic

#endif
