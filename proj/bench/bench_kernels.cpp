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

// Serial reference loops against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "qic/lattice_field.hpp"
#include "qic/qudit_ensemble.hpp"
#include "qic/qudit_info.hpp"

using namespace qic;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_QuditTrials(benchmark::State& state) {
    const Exec exec = exec_of(state);
    for (auto _ : state) {
        auto results = run_qudit_trials(3, 3, 16, 7, 1.3, exec);
        benchmark::DoNotOptimize(results.data());
    }
    state.SetLabel(exec == Exec::serial ? "serial" : "parallel");
}
BENCHMARK(BM_QuditTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_JointState(benchmark::State& state) {
    const Exec exec = exec_of(state);
    const QuditTrial t = draw_qudit_trial(4, 3, 11, 0);
    const PartnerPair pair = construct_partner(VirtualQudit(SuBasis(4), 3, t.write.conjugator()), t.state);
    for (auto _ : state) {
        CMatrix rho = correlation_joint_state(pair.qudit_a, pair.qudit_b, t.state, exec);
        benchmark::DoNotOptimize(rho.data());
    }
    state.SetLabel(exec == Exec::serial ? "serial" : "parallel");
}
BENCHMARK(BM_JointState)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LatticeEvolution(benchmark::State& state) {
    const Exec exec = exec_of(state);
    const LatticeConfig cfg{64, 0.4};
    const ModeMatrix mm = mode_matrix(cfg);
    const ModePair pair = conjugate_qic_vector(site_q_vector(64, 32), vacuum_covariance(cfg));
    std::vector<double> times;
    for (int i = 0; i < 256; ++i) times.push_back(0.25 * i);
    for (auto _ : state) {
        auto frames = evolve_pair_many(pair, times, mm, exec);
        benchmark::DoNotOptimize(frames.data());
    }
    state.SetLabel(exec == Exec::serial ? "serial" : "parallel");
}
BENCHMARK(BM_LatticeEvolution)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
