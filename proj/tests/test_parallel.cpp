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

#include <gtest/gtest.h>

#include "qic/lattice_field.hpp"
#include "qic/qudit_ensemble.hpp"
#include "test_util.hpp"

using namespace qic;
using namespace qic_test;

namespace {

void expect_same(const QuditTrialResult& a, const QuditTrialResult& b) {
    EXPECT_EQ(a.qic_purity, b.qic_purity);
    EXPECT_EQ(a.qic_commutation, b.qic_commutation);
    EXPECT_EQ(a.swap_residual_distance, b.swap_residual_distance);
    EXPECT_EQ(a.extracted_infidelity, b.extracted_infidelity);
    EXPECT_EQ(a.partner_purity, b.partner_purity);
    EXPECT_EQ(a.partner_locality, b.partner_locality);
    EXPECT_EQ(a.partner_write, b.partner_write);
}

}  // namespace

TEST(Parallel, trials_match_serial_reference) {
    for (int d : {2, 3}) {
        auto serial = run_qudit_trials(d, 2, 12, 99, 1.3, Exec::serial);
        auto parallel = run_qudit_trials(d, 2, 12, 99, 1.3, Exec::parallel);
        ASSERT_EQ(serial.size(), parallel.size());
        for (size_t i = 0; i < serial.size(); ++i) expect_same(serial[i], parallel[i]);
    }
}

TEST(Parallel, trial_draws_do_not_depend_on_schedule) {
    auto a = draw_qudit_trial(3, 3, 5, 7);
    auto b = draw_qudit_trial(3, 3, 5, 7);
    EXPECT_EQ(a.state.amplitudes(), b.state.amplitudes());
    EXPECT_EQ(a.write.conjugator(), b.write.conjugator());
    auto c = draw_qudit_trial(3, 3, 5, 8);
    EXPECT_NE(a.state.amplitudes(), c.state.amplitudes());
}

TEST(Parallel, joint_state_matches_serial_reference) {
    auto rng = test_rng(60);
    auto s = PureState::random(3, 3, rng);
    VirtualQudit a(SuBasis(3), 3, haar_unitary(27, rng));
    auto pair = construct_partner(a, s, Exec::serial);
    CMatrix serial = correlation_joint_state(pair.qudit_a, pair.qudit_b, s, Exec::serial);
    CMatrix parallel = correlation_joint_state(pair.qudit_a, pair.qudit_b, s, Exec::parallel);
    EXPECT_EQ(serial, parallel);
}

TEST(Parallel, lattice_frames_match_serial_reference) {
    std::vector<double> times;
    for (int i = 0; i <= 20; ++i) times.push_back(2.5 * i);
    auto a = figure_experiment(LatticeConfig{30, 0.4}, 15, times, Exec::serial);
    auto b = figure_experiment(LatticeConfig{30, 0.4}, 15, times, Exec::parallel);
    ASSERT_EQ(a.size(), b.size());
    for (size_t f = 0; f < a.size(); ++f) {
        EXPECT_EQ(a[f].pairing, b[f].pairing);
        for (size_t s = 0; s < a[f].rows.size(); ++s) {
            EXPECT_EQ(a[f].rows[s].u_q, b[f].rows[s].u_q);
            EXPECT_EQ(a[f].rows[s].v_p, b[f].rows[s].v_p);
        }
    }
}

TEST(Ensemble, worst_case_is_componentwise_max) {
    std::vector<QuditTrialResult> rs(2);
    rs[0].qic_purity = 1;
    rs[1].qic_purity = 2;
    rs[0].partner_write = 5;
    auto w = worst_case(rs);
    EXPECT_EQ(w.qic_purity, 2);
    EXPECT_EQ(w.partner_write, 5);
}

TEST(Ensemble, random_generator_normalization) {
    auto rng = test_rng(61);
    for (int d = 2; d <= 4; ++d) {
        SuBasis b(d);
        CMatrix t = random_su_generator(b, rng);
        EXPECT_NEAR(std::real((t * t).trace()), d, 1e-12);
        EXPECT_LT(std::abs(t.trace()), 1e-12);
        EXPECT_LT((t - t.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    }
}
