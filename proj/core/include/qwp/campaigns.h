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

#ifndef QWP_CAMPAIGNS_H
#define QWP_CAMPAIGNS_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qwp/predicate.h"
#include "qwp/program.h"
#include "qwp/random.h"
#include "qwp/tolerance.h"

namespace qwp {

/// Contract bounds for the seeded property campaigns. These are fixed
/// numbers, independent of the user-facing ToleranceConfig.
inline constexpr double kDualityBound = 1e-10;
inline constexpr double kComposeBound = 1e-10;
inline constexpr double kRouteAgreementBound = 1e-10;

/// Random predicate with `atoms` outcomes labelled "o0", "o1", .... Complete
/// predicates are built as S^(-1/2) P_i S^(-1/2) from random PSD P_i with
/// S = sum P_i; incomplete ones are additionally scaled by a uniform factor
/// in [0.2, 1).
Predicate random_predicate(std::size_t dim, std::size_t atoms, bool complete, Rng &rng);

/// Random CPTP program with a Kraus view (1 to 4 Kraus operators).
QuantumProgram random_cp_program(std::size_t dim, Rng &rng);

/// Random positive trace-preserving program drawn from: random Kraus
/// channels, unitaries, depolarizing, the transpose map, and convex mixes of
/// the transpose with a CP channel. About two in five are not CP.
QuantumProgram random_positive_program(std::size_t dim, Rng &rng);

enum class Suite { duality, weakest, compose, orders };

const char *to_string(Suite suite);

struct CampaignReport {
    std::string suite;
    std::vector<std::size_t> dims;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    /// Suite-specific figures (max residuals, counts, ...).
    std::map<std::string, double> metrics;

    bool passed() const {
        return failures == 0;
    }
};

/// tol.sample_count tuples (program, predicate, state) per dim; a trial fails
/// when any per-atom duality residual exceeds kDualityBound.
CampaignReport run_duality_campaign(const std::vector<std::size_t> &dims, std::uint64_t seed, const ToleranceConfig &tol);

/// One weakest_check per dim with tol.sample_count shrinkage candidates,
/// membership of wp itself, and tol.sample_count / 10 (at least one)
/// adversarial eps = 1e-3 bumps that must be rejected with a witness.
CampaignReport run_weakest_campaign(const std::vector<std::size_t> &dims, std::uint64_t seed, const ToleranceConfig &tol);

/// tol.sample_count program pairs per dim; fails when wp_compose_check
/// exceeds kComposeBound.
CampaignReport run_compose_campaign(const std::vector<std::size_t> &dims, std::uint64_t seed, const ToleranceConfig &tol);

/// tol.sample_count predicate pairs per dim (half ordered by construction);
/// fails when s_leq and predicate_leq disagree or a negative case lacks a
/// verified witness state.
CampaignReport run_orders_campaign(const std::vector<std::size_t> &dims, std::uint64_t seed, const ToleranceConfig &tol);

CampaignReport run_campaign(Suite suite, const std::vector<std::size_t> &dims, std::uint64_t seed, const ToleranceConfig &tol);

}  // namespace qwp

#endif  // QWP_CAMPAIGNS_H
