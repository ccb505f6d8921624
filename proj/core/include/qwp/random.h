// Copyright 2026 The qwp Authors
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

#ifndef QWP_RANDOM_H
#define QWP_RANDOM_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qwp/matrix.h"

namespace qwp {

using Rng = std::mt19937_64;

enum class SampleKind {
    density,
    effect,
    unitary,
    hermitian_contraction,
};

/// Deterministic sub-seed for trial `index` of a campaign seeded with
/// `seed` (splitmix64 finalizer over the pair). Trials seeded this way give
/// the same results regardless of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded random matrix of the requested kind:
///   density               PSD, trace one (Ginibre construction)
///   effect                0 <= E <= I, Haar eigenbasis, uniform spectrum in [0, 1]
///   unitary               Haar unitary (phase-corrected QR of a Ginibre matrix)
///   hermitian_contraction hermitian, spectrum uniform in [-1, 1]
ComplexMatrix sample_random(SampleKind kind, std::size_t dim, std::uint64_t seed);

ComplexMatrix random_density(std::size_t dim, Rng &rng);
ComplexMatrix random_effect(std::size_t dim, Rng &rng);
ComplexMatrix random_unitary(std::size_t dim, Rng &rng);
ComplexMatrix random_hermitian_contraction(std::size_t dim, Rng &rng);
/// G G^dagger for a complex Gaussian G; unnormalized, almost surely full rank.
ComplexMatrix random_psd(std::size_t dim, Rng &rng);

/// Haar-random unit vector.
Eigen::VectorXcd random_pure_vector(std::size_t dim, Rng &rng);

/// Kraus operators of a random CPTP map with `count` operators, taken as the
/// blocks of a Haar-random isometry C^dim -> C^(count*dim).
std::vector<ComplexMatrix> random_kraus(std::size_t dim, std::size_t count, Rng &rng);

}  // namespace qwp

#endif  // QWP_RANDOM_H
