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

#ifndef QIC_RANDOM_HPP
#define QIC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qic/common.hpp"

namespace qic {

/// All randomized constructions draw from a 64-bit Mersenne Twister
/// (std::mt19937_64) seeded explicitly. Independent trials derive their seeds
/// with SplitMix64 so that serial and parallel runs see the same streams.
using Rng = std::mt19937_64;

inline constexpr const char* kRngName = "mt19937_64 (per-trial seeds via splitmix64)";

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

CMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with the R-diagonal phases
/// removed).
CMatrix haar_unitary(Eigen::Index dim, Rng& rng);

/// Uniformly random point on the unit sphere of C^dim.
CVector random_unit_vector(Eigen::Index dim, Rng& rng);

RVector random_uniform_vector(Eigen::Index dim, double lo, double hi, Rng& rng);

}  // namespace qic

#endif
