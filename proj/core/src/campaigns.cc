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

#include "qwp/campaigns.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwp/error.h"
#include "qwp/wp.h"

namespace qwp {

namespace {

constexpr std::size_t kWeakestPairs = 10;
constexpr double kBumpEps = 1e-3;
constexpr std::size_t kOrderSampledStates = 20;

std::size_t uniform_index(Rng &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double expectation(const ComplexMatrix &op, const ComplexMatrix &rho) {
    return (op.eigen() * rho.eigen()).trace().real();
}

std::uint64_t dim_seed(std::uint64_t seed, std::size_t dim) {
    return derive_seed(seed, 0x51ED0000ULL + dim);
}

}  // namespace

Predicate random_predicate(std::size_t dim, std::size_t atoms, bool complete, Rng &rng) {
    if (atoms == 0) {
        throw DomainError("random_predicate: need at least one atom");
    }
    std::vector<std::string> labels;
    std::vector<ComplexMatrix> parts;
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < atoms; k++) {
        labels.push_back("o" + std::to_string(k));
        parts.push_back(random_psd(dim, rng));
        total += parts.back().eigen();
    }
    // S^(-1/2) from the eigendecomposition of the (full-rank) total.
    auto eig = hermitian_eigen(ComplexMatrix(total));
    Eigen::VectorXd inv_roots = eig.values.cwiseSqrt().cwiseInverse();
    Eigen::MatrixXcd inv_sqrt = eig.vectors * inv_roots.asDiagonal() * eig.vectors.adjoint();
    double scale = complete ? 1.0 : uniform(rng, 0.2, 1.0);
    std::vector<ComplexMatrix> effects;
    for (const auto &p : parts) {
        Eigen::MatrixXcd e = scale * inv_sqrt * p.eigen() * inv_sqrt;
        effects.emplace_back(0.5 * (e + e.adjoint()));
    }
    return Predicate(OutcomeSpace(std::move(labels)), std::move(effects));
}

QuantumProgram random_cp_program(std::size_t dim, Rng &rng) {
    return kraus_program(random_kraus(dim, uniform_index(rng, 1, 4), rng), "random_cp");
}

QuantumProgram random_positive_program(std::size_t dim, Rng &rng) {
    switch (uniform_index(rng, 0, 4)) {
        case 0:
            return random_cp_program(dim, rng);
        case 1:
            return unitary_program(random_unitary(dim, rng));
        case 2:
            return depolarizing(uniform(rng, 0.0, 1.0), dim);
        case 3:
            return transpose_program(dim);
        default: {
            double w = uniform(rng, 0.0, 1.0);
            return mix(w, transpose_program(dim), random_cp_program(dim, rng));
        }
    }
}

const char *to_string(Suite suite) {
    switch (suite) {
        case Suite::duality:
            return "duality";
        case Suite::weakest:
            return "weakest";
        case Suite::compose:
            return "compose";
        case Suite::orders:
            return "orders";
    }
    return "unknown";
}

CampaignReport run_duality_campaign(const std::vector<std::size_t> &dims, std::uint64_t seed, const ToleranceConfig &tol) {
    CampaignReport report;
    report.suite = "duality";
    report.dims = dims;
    report.seed = seed;
    double max_residual = 0;
    double transpose_max = 0;
    for (std::size_t d : dims) {
        std::uint64_t base = dim_seed(seed, d);
        for (std::size_t t = 0; t < tol.sample_count; t++) {
            Rng rng(derive_seed(base, t));
            // Every tenth tuple uses the bare transpose map.
            bool use_transpose = t % 10 == 0;
            QuantumProgram c = use_transpose ? transpose_program(d) : random_positive_program(d, rng);
            Predicate f = random_predicate(d, uniform_index(rng, 1, 4), uniform_index(rng, 0, 1) == 1, rng);
            DensityState rho(random_density(d, rng), tol);
            auto residual = duality_residual(c, f, rho, tol);
            double worst = *std::max_element(residual.begin(), residual.end());
            max_residual = std::max(max_residual, worst);
            if (use_transpose) {
                transpose_max = std::max(transpose_max, worst);
            }
            report.trials++;
            if (!(worst <= kDualityBound)) {
                report.failures++;
            }
        }
    }
    report.metrics["max_residual"] = max_residual;
    report.metrics["max_residual_transpose"] = transpose_max;
    report.metrics["bound"] = kDualityBound;
    return report;
}

CampaignReport run_weakest_campaign(const std::vector<std::size_t> &dims, std::uint64_t seed, const ToleranceConfig &tol) {
    CampaignReport report;
    report.suite = "weakest";
    report.dims = dims;
    report.seed = seed;
    std::size_t candidates = 0;
    std::size_t candidate_failures = 0;
    std::size_t membership_failures = 0;
    std::size_t bumps = 0;
    std::size_t bumps_rejected = 0;
    double max_excess = -1;
    std::size_t bump_total = std::max<std::size_t>(1, tol.sample_count / 10);

    for (std::size_t d : dims) {
        std::uint64_t base = dim_seed(seed, d);
        std::size_t remaining = tol.sample_count;
        std::vector<std::pair<QuantumProgram, Predicate>> pairs;
        for (std::size_t j = 0; j < kWeakestPairs; j++) {
            Rng rng(derive_seed(base, j));
            QuantumProgram c = random_positive_program(d, rng);
            Predicate f = random_predicate(d, uniform_index(rng, 1, 4), uniform_index(rng, 0, 1) == 1, rng);
            std::size_t share = remaining / (kWeakestPairs - j);
            remaining -= share;
            ToleranceConfig local = tol;
            local.sample_count = std::max<std::size_t>(share, 1);
            WeakestReport wr = weakest_check(c, f, local, derive_seed(base, 1000 + j));
            candidates += wr.trials;
            candidate_failures += wr.failures;
            membership_failures += wr.membership ? 0 : 1;
            max_excess = std::max(max_excess, wr.max_sampled_excess);
            report.trials += wr.trials + 1;
            pairs.emplace_back(std::move(c), std::move(f));
        }

        for (std::size_t b = 0; b < bump_total; b++) {
            const auto &[c, f] = pairs[b % pairs.size()];
            Rng rng(derive_seed(base, 2000 + b));
            Predicate w = wp(c, f, tol);
            Predicate g = bump_candidate(w, kBumpEps, rng);
            VerificationReport vr = is_precondition(g, c, f, tol, derive_seed(base, 3000 + b));
            bool rejected = false;
            if (!vr.holds() && vr.witness) {
                const auto &wit = *vr.witness;
                // Re-evaluate both sides of the violated inequality from scratch.
                DensityState out = apply(c, wit.state, tol);
                double lhs = expectation(g.effect(wit.atom), wit.state.matrix());
                double rhs = expectation(f.effect(wit.atom), out.matrix());
                rejected = lhs > rhs + tol.eig_tol && std::abs(lhs - wit.lhs) <= 1e-12 &&
                           std::abs(rhs - wit.rhs) <= 1e-12;
            }
            bumps++;
            report.trials++;
            if (rejected) {
                bumps_rejected++;
            }
        }
    }
    report.failures = candidate_failures + membership_failures + (bumps - bumps_rejected);
    report.metrics["candidates"] = static_cast<double>(candidates);
    report.metrics["candidate_failures"] = static_cast<double>(candidate_failures);
    report.metrics["membership_failures"] = static_cast<double>(membership_failures);
    report.metrics["bumps"] = static_cast<double>(bumps);
    report.metrics["bumps_rejected"] = static_cast<double>(bumps_rejected);
    report.metrics["max_sampled_excess"] = max_excess;
    report.metrics["bump_eps"] = kBumpEps;
    return report;
}

CampaignReport run_compose_campaign(const std::vector<std::size_t> &dims, std::uint64_t seed, const ToleranceConfig &tol) {
    CampaignReport report;
    report.suite = "compose";
    report.dims = dims;
    report.seed = seed;
    double max_dev = 0;
    for (std::size_t d : dims) {
        std::uint64_t base = dim_seed(seed, d);
        for (std::size_t t = 0; t < tol.sample_count; t++) {
            Rng rng(derive_seed(base, t));
            QuantumProgram c1 = random_positive_program(d, rng);
            QuantumProgram c2 = random_positive_program(d, rng);
            Predicate f = random_predicate(d, uniform_index(rng, 1, 4), uniform_index(rng, 0, 1) == 1, rng);
            double dev = wp_compose_check(c1, c2, f, tol);
            max_dev = std::max(max_dev, dev);
            report.trials++;
            if (!(dev <= kComposeBound)) {
                report.failures++;
            }
        }
    }
    report.metrics["max_deviation"] = max_dev;
    report.metrics["bound"] = kComposeBound;
    return report;
}

CampaignReport run_orders_campaign(const std::vector<std::size_t> &dims, std::uint64_t seed, const ToleranceConfig &tol) {
    CampaignReport report;
    report.suite = "orders";
    report.dims = dims;
    report.seed = seed;
    std::size_t agreements = 0;
    std::size_t negatives = 0;
    std::size_t witnesses_verified = 0;
    for (std::size_t d : dims) {
        std::uint64_t base = dim_seed(seed, d);
        for (std::size_t t = 0; t < tol.sample_count; t++) {
            Rng rng(derive_seed(base, t));
            std::size_t atoms = uniform_index(rng, 1, 4);
            Predicate g = random_predicate(d, atoms, uniform_index(rng, 0, 1) == 1, rng);
            Predicate f = t % 2 == 0 ? random_shrinkage_candidate(g, rng, tol) : random_predicate(d, atoms, false, rng);

            bool by_order = predicate_leq(f, g, tol);
            bool by_sat = s_leq(f, g, tol);
            bool ok = by_order == by_sat;
            agreements += ok ? 1 : 0;
            if (by_order) {
                for (std::size_t s = 0; s < kOrderSampledStates && ok; s++) {
                    DensityState rho(random_density(d, rng), tol);
                    auto sf = sat(rho, f, tol);
                    auto sg = sat(rho, g, tol);
                    for (std::size_t i = 0; i < atoms; i++) {
                        ok = ok && sf.weights[i] <= sg.weights[i] + tol.eig_tol;
                    }
                }
            } else {
                negatives++;
                auto wit = order_witness(f, g, tol);
                bool verified = false;
                if (wit) {
                    double lhs = sat(wit->state, f, tol).weights[wit->atom];
                    double rhs = sat(wit->state, g, tol).weights[wit->atom];
                    verified = lhs > rhs + tol.eig_tol;
                }
                witnesses_verified += verified ? 1 : 0;
                ok = ok && verified;
            }
            report.trials++;
            if (!ok) {
                report.failures++;
            }
        }
    }
    report.metrics["agreements"] = static_cast<double>(agreements);
    report.metrics["negatives"] = static_cast<double>(negatives);
    report.metrics["witnesses_verified"] = static_cast<double>(witnesses_verified);
    return report;
}

CampaignReport run_campaign(Suite suite, const std::vector<std::size_t> &dims, std::uint64_t seed, const ToleranceConfig &tol) {
    switch (suite) {
        case Suite::duality:
            return run_duality_campaign(dims, seed, tol);
        case Suite::weakest:
            return run_weakest_campaign(dims, seed, tol);
        case Suite::compose:
            return run_compose_campaign(dims, seed, tol);
        case Suite::orders:
            return run_orders_campaign(dims, seed, tol);
    }
    throw DomainError("unknown suite");
}

}  // namespace qwp
