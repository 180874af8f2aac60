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

#include "qic/lattice_field.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "qic/linalg.hpp"
#include "test_util.hpp"

using namespace qic;
using namespace qic_test;

namespace {

const LatticeConfig kReference{30, 0.4};

int support(const RVector& w, double threshold) {
    int count = 0;
    for (Eigen::Index i = 0; i < w.size(); i += 2) {
        if (std::max(std::abs(w(i)), std::abs(w(i + 1))) > threshold) ++count;
    }
    return count;
}

/// Independent evolution: the real 2N x 2N propagator of the harmonic chain,
/// exp(t Omega H) with H = diag blocks of the potential and kinetic terms, in
/// the ordering used for weighting vectors (w(t)^T = w^T S(t)).
RMatrix classical_propagator(const LatticeConfig& cfg, double t) {
    const int n = cfg.n_sites;
    // H = 1/2 sum p^2 + 1/2 sum (1 + 2 eta) q^2 - eta sum q_n q_{n+1}.
    RMatrix h = RMatrix::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        h(2 * i, 2 * i) += 1.0 + 2.0 * cfg.eta;
        h(2 * i + 1, 2 * i + 1) = 1.0;
        const int j = (i + 1) % n;
        if (j != i) {
            h(2 * i, 2 * j) -= cfg.eta;
            h(2 * j, 2 * i) -= cfg.eta;
        }
    }
    // U r U^dagger with U = exp(-i H t) runs the classical flow dr/dt = Omega H r
    // backwards.
    const RMatrix gen = -t * symplectic_form(n) * h;
    return gen.exp();
}

}  // namespace

TEST(Dispersion, values) {
    RVector w = dispersion(kReference);
    EXPECT_NEAR(w(14), 1.6124515496597099304733, 1e-12);
    EXPECT_EQ(w(29), 1.0);
    EXPECT_EQ(dispersion(LatticeConfig{1, 0.7})(0), 1.0);
    EXPECT_THROW(dispersion(LatticeConfig{0, 0.4}), QicError);
    EXPECT_THROW(dispersion(LatticeConfig{4, -1.0}), QicError);
}

TEST(ModeMatrix, single_oscillator) {
    auto mm = mode_matrix(LatticeConfig{1, 0.3});
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix expected(2, 2);
    expected << s, s, -kI * s, kI * s;
    EXPECT_LT(max_diff(mm.a, expected), 1e-15);
}

TEST(ModeMatrix, reference_lattice_inverse) {
    auto mm = mode_matrix(kReference);
    EXPECT_LT(max_diff(mm.a * mm.a_inv, identity(60)), 1e-10);
    // Canonical commutators: A J A^T = i Omega with J = [a, a^dagger] pattern.
    CMatrix j = CMatrix::Zero(60, 60);
    for (int k = 0; k < 30; ++k) {
        j(2 * k, 2 * k + 1) = 1.0;
        j(2 * k + 1, 2 * k) = -1.0;
    }
    CMatrix comm = mm.a * j * mm.a.transpose();
    EXPECT_LT(max_diff(comm, kI * symplectic_form(30).cast<cplx>()), 1e-12);
}

TEST(Vacuum, single_mode_and_decoupled_limit) {
    auto v1 = vacuum_covariance(LatticeConfig{1, 0.9});
    EXPECT_LT(max_diff_r(v1.covariance(), 0.5 * RMatrix::Identity(2, 2)), 1e-15);
    auto weak = vacuum_covariance(LatticeConfig{8, 1e-9});
    EXPECT_LT(max_diff_r(weak.covariance(), 0.5 * RMatrix::Identity(16, 16)), 1e-8);
}

TEST(Vacuum, reference_lattice_is_pure_and_matches_mode_route) {
    auto vac = vacuum_covariance(kReference);
    EXPECT_LT(vac.purity_residual(), 1e-9);
    auto mm = mode_matrix(kReference);
    EXPECT_LT(max_diff_r(vac.covariance(), vacuum_covariance_from_modes(mm)), 1e-12);
}

TEST(Evolve, identity_at_zero_time) {
    auto mm = mode_matrix(kReference);
    auto vac = vacuum_covariance(kReference);
    auto pair = conjugate_qic_vector(site_q_vector(30, 15), vac);
    auto ep = evolve_pair(pair, 0.0, mm);
    EXPECT_LT(max_diff_r(ep.v, pair.v), 1e-12);
    EXPECT_LT(max_diff_r(ep.u, pair.u), 1e-12);
}

TEST(Evolve, matches_classical_propagator) {
    const LatticeConfig cfg{12, 0.4};
    auto mm = mode_matrix(cfg);
    auto pair = conjugate_qic_vector(site_q_vector(12, 3), vacuum_covariance(cfg));
    for (double t : {0.7, 5.0, 25.0}) {
        auto ep = evolve_pair(pair, t, mm);
        const RMatrix s = classical_propagator(cfg, t);
        EXPECT_LT(max_diff_r(ep.v, RVector(s.transpose() * pair.v)), 1e-9) << t;
        EXPECT_LT(max_diff_r(ep.u, RVector(s.transpose() * pair.u)), 1e-9) << t;
    }
}

TEST(Evolve, preserves_pairing_and_mode_purity) {
    auto mm = mode_matrix(kReference);
    auto vac = vacuum_covariance(kReference);
    auto rng = test_rng(40);
    const RMatrix omega = symplectic_form(30);
    for (int trial = 0; trial < 20; ++trial) {
        RVector v = random_uniform_vector(60, -1.0, 1.0, rng);
        RVector v2 = random_uniform_vector(60, -1.0, 1.0, rng);
        auto pair = conjugate_qic_vector(v, vac);
        for (double t : {1.0, 5.0, 25.0, 50.0}) {
            auto ep = evolve_pair(pair, t, mm);
            EXPECT_NEAR(ep.v.dot(omega * ep.u), 1.0, 1e-9);
            EXPECT_NEAR(mode_covariance(ModePair{ep.v, ep.u, 0, 0}, vac).det(), 0.25, 1e-8);
            auto ep2 = evolve_pair(ModePair{v2, v2, 0, 0}, t, mm);
            EXPECT_NEAR(ep.v.dot(omega * ep2.v), v.dot(omega * v2), 1e-9);
        }
    }
}

TEST(Evolve, many_serial_equals_parallel) {
    auto mm = mode_matrix(kReference);
    auto pair = conjugate_qic_vector(site_q_vector(30, 15), vacuum_covariance(kReference));
    std::vector<double> times{0, 1, 2.5, 10, 25, 50};
    auto a = evolve_pair_many(pair, times, mm, Exec::serial);
    auto b = evolve_pair_many(pair, times, mm, Exec::parallel);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].v, b[i].v);
        EXPECT_EQ(a[i].u, b[i].u);
    }
}

TEST(Figure, reference_parameters) {
    std::vector<double> times{0, 25, 50};
    auto frames = figure_experiment(kReference, 15, times);
    ASSERT_EQ(frames.size(), 3u);
    for (const auto& f : frames) {
        EXPECT_NEAR(f.pairing, 1.0, 1e-9);
        EXPECT_NEAR(f.det_m, 0.25, 1e-8);
        EXPECT_LT(f.imag_residue, 1e-9);
        ASSERT_EQ(f.rows.size(), 30u);
        EXPECT_EQ(f.rows.front().site, 1);
    }
    const auto& t0 = frames[0].rows;
    double off_site_u = 0.0;
    for (const auto& r : t0) {
        EXPECT_EQ(r.v_p, 0.0);
        EXPECT_EQ(r.v_q, r.site == 15 ? 1.0 : 0.0);
        if (r.site != 15) off_site_u = std::max({off_site_u, std::abs(r.u_q), std::abs(r.u_p)});
    }
    EXPECT_GT(off_site_u, 1e-4);

    auto to_vec = [](const FigureFrame& f, bool u) {
        RVector w(60);
        for (const auto& r : f.rows) {
            w(2 * (r.site - 1)) = u ? r.u_q : r.v_q;
            w(2 * (r.site - 1) + 1) = u ? r.u_p : r.v_p;
        }
        return w;
    };
    EXPECT_GT(support(to_vec(frames[2], true), 1e-3), support(to_vec(frames[0], true), 1e-3));
    EXPECT_GT(support(to_vec(frames[2], false), 1e-3), support(to_vec(frames[0], false), 1e-3));
}

TEST(Figure, translation_covariance) {
    std::vector<double> times{0, 7.5, 25};
    auto a = figure_experiment(kReference, 1, times);
    auto b = figure_experiment(kReference, 4, times);
    for (size_t f = 0; f < times.size(); ++f) {
        for (int s = 1; s <= 30; ++s) {
            const auto& ra = a[f].rows[static_cast<size_t>(s - 1)];
            const auto& rb = b[f].rows[static_cast<size_t>((s - 1 + 3) % 30)];
            EXPECT_NEAR(ra.v_q, rb.v_q, 1e-10);
            EXPECT_NEAR(ra.v_p, rb.v_p, 1e-10);
            EXPECT_NEAR(ra.u_q, rb.u_q, 1e-10);
            EXPECT_NEAR(ra.u_p, rb.u_p, 1e-10);
        }
    }
    EXPECT_THROW(figure_experiment(kReference, 31, times), QicError);
    EXPECT_THROW(figure_experiment(kReference, 0, times), QicError);
}
