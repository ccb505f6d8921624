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

// Acceptance gate. Runs every criterion at its pinned budget and tolerance,
// prints one [PASS]/[FAIL] line per criterion and exits nonzero on any
// failure. Usage: qwp_acceptance [seed]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.h"
#include "qwp/campaigns.h"
#include "qwp/wp.h"

using namespace qwp;

namespace {

constexpr std::uint64_t kDefaultSeed = 20260101;

// Budgets.
constexpr std::size_t kDualityTuplesPerDim = 1000;
constexpr std::size_t kShrinkageCandidates = 1000;
constexpr std::size_t kBumpCandidates = 100;
constexpr std::size_t kKrausPrograms = 200;
constexpr std::size_t kDpCases = 200;
constexpr std::size_t kNormPredicates = 500;
constexpr std::size_t kHolderSamples = 1000;
constexpr std::size_t kOrderPairsPerDim = 200;
constexpr std::size_t kCompletePairs = 200;
constexpr std::size_t kChains = 20;
constexpr int kChainLength = 30;
constexpr std::size_t kComposePairs = 200;
constexpr std::size_t kPositivitySamples = 10000;
constexpr std::size_t kCpClassified = 200;

// Tolerances.
constexpr double kDualityTol = 1e-10;
constexpr double kRouteTol = 1e-10;
constexpr double kNormGapTol = 1e-12;
constexpr double kNormBoundSlack = 1e-9;
constexpr double kHolderSlack = 1e-9;
constexpr double kCompleteTol = 1e-9;
constexpr double kChainTol = 0x1p-20;
constexpr double kComposeTol = 1e-10;
constexpr double kChoiTol = 1e-10;
constexpr double kWorkedTol = 1e-12;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *format, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

std::vector<Eigen::MatrixXcd> eigen_ops(const std::vector<ComplexMatrix> &ops) {
    std::vector<Eigen::MatrixXcd> out;
    for (const auto &k : ops) {
        out.push_back(k.eigen());
    }
    return out;
}

Predicate z_predicate() {
    return Predicate(OutcomeSpace({"0", "1"}), {ComplexMatrix::diagonal({1, 0}), ComplexMatrix::diagonal({0, 1})});
}

Outcome duality(std::uint64_t seed) {
    ToleranceConfig tol;
    tol.sample_count = kDualityTuplesPerDim;
    auto r = run_duality_campaign({2, 3, 4}, seed, tol);
    double worst = std::max(r.metrics.at("max_residual"), r.metrics.at("max_residual_transpose"));
    return {
        r.passed() && r.trials == 3 * kDualityTuplesPerDim && worst <= kDualityTol,
        fmt("%.0f tuples over d=2,3,4 incl. transpose, max residual %.3g <= %.0e", double(r.trials), worst, kDualityTol)};
}

Outcome weakest(std::uint64_t seed) {
    ToleranceConfig tol;
    tol.sample_count = kShrinkageCandidates;
    auto r = run_weakest_campaign({2}, seed, tol);
    double candidates = r.metrics.at("candidates");
    double bumps = r.metrics.at("bumps");
    bool pass = r.passed() && candidates == double(kShrinkageCandidates) && bumps == double(kBumpCandidates) &&
                r.metrics.at("bumps_rejected") == bumps && r.metrics.at("membership_failures") == 0;
    return {
        pass,
        fmt("%.0f shrinkage candidates dominated, %.0f/%.0f eps-bumps rejected with verified witnesses",
            candidates - r.metrics.at("candidate_failures"),
            r.metrics.at("bumps_rejected"),
            bumps)};
}

Outcome routes(std::uint64_t seed) {
    Rng rng(derive_seed(seed, 3));
    double worst_route = 0;
    for (std::size_t k = 0; k < kKrausPrograms; k++) {
        std::size_t d = 2 + k % 4;
        auto c = random_cp_program(d, rng);
        auto f = random_predicate(d, 1 + k % 4, k % 2 == 0, rng);
        auto a = wp(c, f);
        auto b = wp_kraus(c, f);
        for (std::size_t i = 0; i < f.space().size(); i++) {
            worst_route = std::max(worst_route, max_abs_diff(a.effect(i), b.effect(i)));
        }
    }
    double worst_dp = 0;
    for (std::size_t k = 0; k < kDpCases; k++) {
        std::size_t d = 2 + k % 4;
        auto c = random_cp_program(d, rng);
        auto m = random_effect(d, rng);
        auto got = dp_reduction(c, m);
        auto expect = oracle::kraus_dual(eigen_ops(*c.kraus()), m.eigen());
        worst_dp = std::max(worst_dp, oracle::max_abs_diff(got.eigen(), expect));
    }
    return {
        worst_route <= kRouteTol && worst_dp <= kRouteTol,
        fmt("super vs Kraus max diff %.3g, dp_reduction vs sum K^dag M K max diff %.3g (<= %.0e)",
            worst_route,
            worst_dp,
            kRouteTol)};
}

Outcome norms(std::uint64_t seed) {
    Rng rng(derive_seed(seed, 4));
    double worst_gap = 0;
    double worst_norm = 0;
    for (std::size_t k = 0; k < kNormPredicates; k++) {
        std::size_t d = 2 + k % 4;
        auto p = random_predicate(d, 1 + k % 4, k % 2 == 0, rng);
        if (!validate_predicate(p).ok()) {
            return {false, "sampled predicate failed validation"};
        }
        for (std::size_t i = 0; i < p.space().size(); i++) {
            double op = operator_norm(p.effect(i));
            worst_gap = std::max(worst_gap, std::abs(op - spectral_radius(p.effect(i))));
            worst_norm = std::max(worst_norm, op);
        }
    }
    return {
        worst_gap <= kNormGapTol && worst_norm <= 1 + kNormBoundSlack,
        fmt("%.0f predicates, max |opnorm - radius| %.3g, max opnorm %.15g",
            double(kNormPredicates),
            worst_gap,
            worst_norm)};
}

Outcome holder(std::uint64_t seed) {
    Rng rng(derive_seed(seed, 5));
    std::normal_distribution<double> g;
    std::size_t violations = 0;
    double worst = -1e300;
    for (std::size_t k = 0; k < kHolderSamples; k++) {
        std::size_t d = 2 + k % 4;
        ComplexMatrix a = ComplexMatrix::zero(d);
        if (k % 2 == 0) {
            a = random_effect(d, rng);
        } else {
            Eigen::MatrixXcd m(d, d);
            for (std::size_t r = 0; r < d; r++) {
                for (std::size_t c = 0; c < d; c++) {
                    m(r, c) = Complex(g(rng), g(rng));
                }
            }
            a = ComplexMatrix(m);
        }
        auto rho = random_density(d, rng);
        double excess = trace_norm(a * rho) - operator_norm(a) * trace_norm(rho);
        worst = std::max(worst, excess);
        violations += excess > kHolderSlack ? 1 : 0;
    }
    return {
        violations == 0,
        fmt("%.0f samples, %.0f violations, max ||A rho||_1 - ||A|| ||rho||_1 = %.3g",
            double(kHolderSamples),
            double(violations),
            worst)};
}

Outcome orders(std::uint64_t seed) {
    ToleranceConfig tol;
    tol.sample_count = kOrderPairsPerDim;
    auto r = run_orders_campaign({2, 3, 4}, seed, tol);
    double agree = r.metrics.at("agreements");
    double neg = r.metrics.at("negatives");
    double wit = r.metrics.at("witnesses_verified");
    return {
        r.passed() && agree == 3.0 * kOrderPairsPerDim && wit == neg,
        fmt("s_leq == predicate_leq on %.0f/%.0f pairs, %.0f negatives all with verified witnesses",
            agree,
            3.0 * kOrderPairsPerDim,
            neg)};
}

Outcome completeness(std::uint64_t seed) {
    Rng rng(derive_seed(seed, 7));
    double worst = 0;
    for (std::size_t k = 0; k < kCompletePairs; k++) {
        std::size_t d = 2 + k % 4;
        auto f = random_predicate(d, 2 + k % 3, true, rng);
        auto c = random_positive_program(d, rng);
        auto w = wp(c, f);
        worst = std::max(worst, max_abs_diff(total_effect(w), ComplexMatrix::identity(d)));
    }
    return {
        worst <= kCompleteTol,
        fmt("%.0f complete predicates through TP programs, max |sum wp - I| %.3g", double(kCompletePairs), worst)};
}

Outcome chains(std::uint64_t seed) {
    Rng rng(derive_seed(seed, 8));
    double worst = 0;
    bool dominated = true;
    for (std::size_t k = 0; k < kChains; k++) {
        std::size_t d = 2 + k % 4;
        auto f = random_predicate(d, 2 + k % 3, k % 2 == 0, rng);
        std::vector<Predicate> chain;
        for (int n = 1; n <= kChainLength; n++) {
            chain.push_back(f.scaled(1 - std::ldexp(1.0, -n)));
        }
        auto sup = chain_sup(chain);
        for (const auto &g : chain) {
            dominated = dominated && predicate_leq(g, sup);
        }
        for (std::size_t i = 0; i < f.space().size(); i++) {
            worst = std::max(worst, max_abs_diff(sup.effect(i), f.effect(i)));
        }
    }
    return {
        dominated && worst <= kChainTol,
        fmt("%.0f geometric chains, sup dominates all elements, max distance to limit %.3g <= 2^-20",
            double(kChains),
            worst)};
}

Outcome composition(std::uint64_t seed) {
    ToleranceConfig tol;
    tol.sample_count = kComposePairs;
    auto r = run_compose_campaign({3}, seed, tol);
    double dev = r.metrics.at("max_deviation");
    return {
        r.passed() && r.trials == kComposePairs && dev <= kComposeTol,
        fmt("%.0f program pairs at d=3, max deviation %.3g <= %.0e", double(r.trials), dev, kComposeTol)};
}

Outcome cp_discrimination(std::uint64_t seed) {
    auto t = transpose_program(2);
    double choi_min = min_eigenvalue(to_choi(t));
    ToleranceConfig tol;
    tol.sample_count = kPositivitySamples;
    auto v = is_positive_sampled(t, tol, derive_seed(seed, 10));
    bool transpose_ok = std::abs(choi_min + 1) <= kChoiTol && !is_completely_positive(t) &&
                        v.kind == PositivityVerdict::Kind::no_counterexample && v.samples >= kPositivitySamples;

    Rng rng(derive_seed(seed, 11));
    std::size_t certified = 0;
    std::vector<QuantumProgram> kraus_maps{depolarizing(0.5), amplitude_damping(0.3)};
    for (std::size_t k = 0; k < kCpClassified; k++) {
        kraus_maps.push_back(random_cp_program(2 + k % 4, rng));
    }
    for (const auto &c : kraus_maps) {
        certified += is_positive_sampled(c, tol, 0).kind == PositivityVerdict::Kind::certified_cp ? 1 : 0;
    }
    return {
        transpose_ok && certified == kraus_maps.size(),
        fmt("transpose Choi min eig %.12g, %.0f pure samples without counterexample; ", choi_min, double(v.samples)) +
            fmt("%.0f/%.0f Kraus maps certified_cp", double(certified), double(kraus_maps.size()))};
}

Outcome worked_examples(std::uint64_t) {
    const Complex i1(0, 1);
    auto z = z_predicate();
    // Depolarizing p = 0.5 as the Pauli mixture (1 - 3p/4) I + (p/4)(X, Y, Z).
    double p = 0.5;
    Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity(), x, y, zz;
    x << 0, 1, 1, 0;
    y << 0, -i1, i1, 0;
    zz << 1, 0, 0, -1;
    std::vector<Eigen::MatrixXcd> dep{
        std::sqrt(1 - 3 * p / 4) * id, std::sqrt(p / 4) * x, std::sqrt(p / 4) * y, std::sqrt(p / 4) * zz};
    // Amplitude damping gamma = 0.3.
    double gamma = 0.3;
    Eigen::Matrix2cd k0, k1;
    k0 << 1, 0, 0, std::sqrt(1 - gamma);
    k1 << 0, std::sqrt(gamma), 0, 0;
    std::vector<Eigen::MatrixXcd> ad{k0, k1};

    auto wd = wp(depolarizing(p), z);
    auto wa = wp(amplitude_damping(gamma), z);
    double worst = 0;
    auto check = [&](const ComplexMatrix &got, const std::vector<Eigen::MatrixXcd> &ops, const ComplexMatrix &f,
                     std::vector<Complex> closed) {
        worst = std::max(worst, oracle::max_abs_diff(got.eigen(), oracle::kraus_dual(ops, f.eigen())));
        worst = std::max(worst, max_abs_diff(got, ComplexMatrix::diagonal(closed)));
    };
    check(wd.effect("0"), dep, z.effect("0"), {0.75, 0.25});
    check(wd.effect("1"), dep, z.effect("1"), {0.25, 0.75});
    check(wa.effect("0"), ad, z.effect("0"), {1, 0.3});
    check(wa.effect("1"), ad, z.effect("1"), {0, 0.7});
    return {
        worst <= kWorkedTol,
        fmt("depolarizing(0.5) and amplitude_damping(0.3), max diff to closed form and Kraus oracle %.3g", worst)};
}

}  // namespace

int main(int argc, char **argv) {
    std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : kDefaultSeed;
    std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));

    struct Criterion {
        int id;
        const char *name;
        std::function<Outcome(std::uint64_t)> run;
    };
    std::vector<Criterion> criteria{
        {1, "duality identity", duality},
        {2, "wp membership and majorization", weakest},
        {3, "representation agreement", routes},
        {4, "operator norm equals spectral radius", norms},
        {5, "trace-norm inequality", holder},
        {6, "order equivalence", orders},
        {7, "completeness preservation", completeness},
        {8, "chain supremum", chains},
        {9, "composition law", composition},
        {10, "CP discrimination", cp_discrimination},
        {11, "worked examples", worked_examples},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(seed);
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf(
            "[%s] %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
