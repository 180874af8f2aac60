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

#include "qic/qudit_ensemble.hpp"

#include <algorithm>

#include "qic/linalg.hpp"

namespace qic {

CMatrix random_su_generator(const SuBasis& basis, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    RVector a(basis.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = normal(rng);
    a /= a.norm();
    CMatrix t = CMatrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.size(); ++i) t += a(i) * basis.generator(i);
    // Exact Hermiticity for the 1e-12 gate.
    return 0.5 * (t + t.adjoint());
}

QuditTrial draw_qudit_trial(int d, int num_sites, std::uint64_t seed, int index) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(index)));
    const SuBasis basis(d);
    PureState state = PureState::random(num_sites, d, rng);
    CMatrix u = haar_unitary(int_pow(d, num_sites), rng);
    CMatrix t = random_su_generator(basis, rng);
    return QuditTrial{std::move(state), WriteOperation(std::move(t), std::move(u), num_sites)};
}

QuditTrialResult evaluate_qudit_trial(const QuditTrial& trial, double theta, Exec inner) {
    const auto& w = trial.write;
    const auto& psi = trial.state;
    const int d = w.local_dim();
    const Eigen::Index rest = psi.dim() / d;
    QuditTrialResult r;

    const QicConstruction qic = construct_qic(w, psi);
    r.qic_purity = std::abs(qic.state.purity() - 1.0);
    const CMatrix t_full = kron(w.local_generator(), CMatrix::Identity(rest, rest));
    r.qic_commutation = max_abs(CMatrix(qic.inner * t_full - t_full * qic.inner));

    const SwapRetrieval before = retrieve_by_swap(qic.qudit, w.apply(0.0, psi));
    const SwapRetrieval after = retrieve_by_swap(qic.qudit, w.apply(theta, psi));
    r.swap_residual_distance = trace_distance(before.residual, after.residual);
    r.extracted_infidelity = std::max(1.0 - pure_fidelity(before.extracted, qic.capsule),
                                      1.0 - pure_fidelity(after.extracted, w.local_unitary(theta) * qic.capsule));

    const VirtualQudit a(SuBasis(d), w.num_sites(), w.conjugator());
    const PartnerPair pair = construct_partner(a, psi, inner);
    r.partner_purity = std::abs(std::real((pair.joint_state * pair.joint_state).trace()) - 1.0);
    r.partner_locality = locality_residual(pair.qudit_a, pair.qudit_b);
    const CMatrix recomputed = partner_write_action(pair, w, theta, psi, inner);
    r.partner_write = max_abs(CMatrix(recomputed - local_write_image(pair.joint_state, w.local_unitary(theta))));
    return r;
}

std::vector<QuditTrialResult> run_qudit_trials(int d, int num_sites, int trials, std::uint64_t seed, double theta,
                                               Exec exec) {
    std::vector<QuditTrialResult> out(static_cast<size_t>(std::max(trials, 0)));
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < trials; ++i) {
            out[static_cast<size_t>(i)] = evaluate_qudit_trial(draw_qudit_trial(d, num_sites, seed, i), theta);
        }
    } else {
        for (int i = 0; i < trials; ++i) {
            out[static_cast<size_t>(i)] = evaluate_qudit_trial(draw_qudit_trial(d, num_sites, seed, i), theta);
        }
    }
    return out;
}

QuditTrialResult worst_case(const std::vector<QuditTrialResult>& results) {
    QuditTrialResult w;
    for (const auto& r : results) {
        w.qic_purity = std::max(w.qic_purity, r.qic_purity);
        w.qic_commutation = std::max(w.qic_commutation, r.qic_commutation);
        w.swap_residual_distance = std::max(w.swap_residual_distance, r.swap_residual_distance);
        w.extracted_infidelity = std::max(w.extracted_infidelity, r.extracted_infidelity);
        w.partner_purity = std::max(w.partner_purity, r.partner_purity);
        w.partner_locality = std::max(w.partner_locality, r.partner_locality);
        w.partner_write = std::max(w.partner_write, r.partner_write);
    }
    return w;
}

}  // namespace qic
