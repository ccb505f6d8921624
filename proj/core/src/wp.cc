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

#include "qwp/wp.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qwp/error.h"

namespace qwp {

namespace {

double expectation(const ComplexMatrix &op, const ComplexMatrix &rho) {
    return (op.eigen() * rho.eigen()).trace().real();
}

void require_fits(const QuantumProgram &c, const Predicate &f) {
    if (c.dim() != f.dim()) {
        throw DimensionError(
            "program dim " + std::to_string(c.dim()) + " does not match predicate dim " + std::to_string(f.dim()));
    }
}

void require_same_space(const Predicate &a, const Predicate &b) {
    if (!(a.space() == b.space())) {
        throw SpaceMismatchError("predicates are defined over different outcome spaces");
    }
    if (a.dim() != b.dim()) {
        throw DimensionError(
            "predicate dimension mismatch (" + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
}

// Adjoint action without validation; shared by wp and the checks that
// already validated their inputs.
Predicate dual_action(const QuantumProgram &c, const Predicate &f) {
    QuantumProgram dual = adjoint(c);
    std::vector<ComplexMatrix> effects;
    effects.reserve(f.effects().size());
    for (const auto &e : f.effects()) {
        effects.push_back(dual.apply_operator(e));
    }
    return Predicate(f.space(), std::move(effects));
}

}  // namespace

Predicate wp(const QuantumProgram &c, const Predicate &f, const ToleranceConfig &tol) {
    require_fits(c, f);
    auto report = validate_predicate(f, tol);
    if (!report.ok()) {
        const auto &v = report.violations.front();
        throw InvalidPredicateError("postcondition is not a valid predicate: " + (v.atom ? *v.atom + ": " : "") + v.message);
    }
    if (!is_trace_preserving(c, tol)) {
        throw TracePreservationError("program '" + c.label() + "' is not trace preserving");
    }
    return dual_action(c, f);
}

Predicate wp_kraus(const QuantumProgram &c, const Predicate &f) {
    require_fits(c, f);
    std::vector<ComplexMatrix> effects;
    effects.reserve(f.effects().size());
    for (const auto &e : f.effects()) {
        effects.push_back(kraus_adjoint_apply(c, e));
    }
    return Predicate(f.space(), std::move(effects));
}

AuditedWp wp_audited(const QuantumProgram &c, const Predicate &f, const ToleranceConfig &tol, std::uint64_t seed) {
    Predicate result = wp(c, f, tol);
    PositivityVerdict verdict = is_positive_sampled(c, tol, seed);
    std::vector<std::string> warnings;
    switch (verdict.kind) {
        case PositivityVerdict::Kind::counterexample:
            throw PositivityError("program '" + c.label() + "' is not positive: sampled pure state maps outside E(H)");
        case PositivityVerdict::Kind::no_counterexample:
            warnings.push_back(
                "program is not completely positive; positivity rests on " + std::to_string(verdict.samples) +
                " sampled pure states without a counterexample, not on a proof");
            break;
        case PositivityVerdict::Kind::certified_cp:
            break;
    }
    return {std::move(result), std::move(verdict), std::move(warnings)};
}

std::vector<double> duality_residual(
    const QuantumProgram &c, const Predicate &f, const DensityState &rho, const ToleranceConfig &tol) {
    require_fits(c, f);
    if (rho.dim() != c.dim()) {
        throw DimensionError("state dim does not match program dim");
    }
    Predicate g = wp(c, f, tol);
    DensityState out = apply(c, rho, tol);
    std::vector<double> residual;
    residual.reserve(f.effects().size());
    for (std::size_t i = 0; i < f.effects().size(); i++) {
        double lhs = expectation(g.effect(i), rho.matrix());
        double rhs = expectation(f.effect(i), out.matrix());
        residual.push_back(std::abs(lhs - rhs));
    }
    return residual;
}

HoareTriple::HoareTriple(Predicate pre_, QuantumProgram prog_, Predicate post_)
    : pre(std::move(pre_)), prog(std::move(prog_)), post(std::move(post_)) {
    require_same_space(pre, post);
    require_fits(prog, post);
}

const char *to_string(VerificationReport::Verdict verdict) {
    return verdict == VerificationReport::Verdict::holds ? "holds" : "fails";
}

VerificationReport is_precondition(
    const Predicate &g, const QuantumProgram &c, const Predicate &f, const ToleranceConfig &tol, std::uint64_t seed) {
    require_same_space(g, f);
    require_fits(c, f);
    Predicate w = wp(c, f, tol);

    VerificationReport report{VerificationReport::Verdict::holds, f.space(), std::nullopt, {}, {}, seed, tol};
    std::size_t n = f.space().size();
    std::vector<Eigen::VectorXcd> probes;
    double worst = std::numeric_limits<double>::infinity();
    std::size_t worst_atom = 0;
    Eigen::VectorXcd worst_vec;
    for (std::size_t i = 0; i < n; i++) {
        auto eig = hermitian_eigen(w.effect(i) - g.effect(i), tol);
        report.margins.push_back(eig.values(0));
        probes.push_back(eig.vectors.col(0));
        if (eig.values(0) < worst) {
            worst = eig.values(0);
            worst_atom = i;
            worst_vec = eig.vectors.col(0);
        }
    }

    Rng rng(seed);
    for (int k = 0; k < 4; k++) {
        probes.push_back(random_pure_vector(c.dim(), rng));
    }
    report.residuals.assign(n, 0.0);
    for (const auto &psi : probes) {
        ComplexMatrix rho = ComplexMatrix::outer(psi);
        ComplexMatrix out = c.apply_operator(rho);
        for (std::size_t i = 0; i < n; i++) {
            double r = std::abs(expectation(w.effect(i), rho) - expectation(f.effect(i), out));
            report.residuals[i] = std::max(report.residuals[i], r);
        }
    }

    if (worst < -tol.eig_tol) {
        report.verdict = VerificationReport::Verdict::fails;
        DensityState rho = DensityState::pure(worst_vec);
        ComplexMatrix out = c.apply_operator(rho.matrix());
        report.witness = PreconditionWitness{
            worst_atom, rho, expectation(g.effect(worst_atom), rho.matrix()),
            expectation(f.effect(worst_atom), out)};
    }
    return report;
}

VerificationReport verify_triple(const HoareTriple &t, const ToleranceConfig &tol, std::uint64_t seed) {
    return is_precondition(t.pre, t.prog, t.post, tol, seed);
}

Predicate shrinkage_candidate(const Predicate &w, const std::vector<ComplexMatrix> &shrink, const ToleranceConfig &tol) {
    if (shrink.size() != w.effects().size()) {
        throw DimensionError("shrinkage_candidate: need one shrink factor per atom");
    }
    std::vector<ComplexMatrix> effects;
    effects.reserve(shrink.size());
    for (std::size_t i = 0; i < shrink.size(); i++) {
        ComplexMatrix root = psd_sqrt(w.effect(i), tol);
        ComplexMatrix keep = ComplexMatrix::identity(w.dim()) - shrink[i];
        ComplexMatrix g = root * keep * root;
        // Symmetrize away rounding so downstream hermitian checks see exact symmetry.
        effects.push_back((g + g.adjoint()) * Complex(0.5));
    }
    return Predicate(w.space(), std::move(effects));
}

Predicate random_shrinkage_candidate(const Predicate &w, Rng &rng, const ToleranceConfig &tol) {
    std::vector<ComplexMatrix> shrink;
    for (std::size_t i = 0; i < w.effects().size(); i++) {
        shrink.push_back(random_effect(w.dim(), rng));
    }
    return shrinkage_candidate(w, shrink, tol);
}

Predicate bump_candidate(const Predicate &w, double eps, Rng &rng) {
    std::vector<ComplexMatrix> effects;
    for (const auto &e : w.effects()) {
        ComplexMatrix p = random_psd(w.dim(), rng);
        double norm = operator_norm_hermitian(p);
        effects.push_back(e + p * Complex(eps / norm));
    }
    return Predicate(w.space(), std::move(effects));
}

WeakestReport weakest_check(
    const QuantumProgram &c,
    const Predicate &f,
    const ToleranceConfig &tol,
    std::uint64_t seed,
    std::size_t states_per_trial) {
    Predicate w = wp(c, f, tol);
    WeakestReport report;
    report.seed = seed;
    report.membership = is_precondition(w, c, f, tol, seed).holds();
    report.all_dominated = report.membership;

    for (std::size_t t = 0; t < tol.sample_count; t++) {
        Rng rng(derive_seed(seed, t));
        Predicate g = random_shrinkage_candidate(w, rng, tol);
        bool ok = true;
        for (std::size_t s = 0; s < states_per_trial; s++) {
            DensityState rho(random_density(c.dim(), rng), tol);
            DensityState out = apply(c, rho, tol);
            for (std::size_t i = 0; i < f.effects().size(); i++) {
                double excess = expectation(g.effect(i), rho.matrix()) - expectation(f.effect(i), out.matrix());
                report.max_sampled_excess = std::max(report.max_sampled_excess, excess);
                ok = ok && excess <= tol.eig_tol;
            }
        }
        ok = ok && predicate_leq(g, w, tol);
        report.trials++;
        if (!ok) {
            report.failures++;
            report.all_dominated = false;
        }
    }
    return report;
}

double wp_compose_check(
    const QuantumProgram &c1, const QuantumProgram &c2, const Predicate &f, const ToleranceConfig &tol) {
    if (c1.dim() != c2.dim()) {
        throw DimensionError("wp_compose_check: program dims differ");
    }
    Predicate direct = wp(seq(c1, c2), f, tol);
    Predicate stepwise = wp(c1, wp(c2, f, tol), tol);
    double dev = 0;
    for (std::size_t i = 0; i < f.effects().size(); i++) {
        dev = std::max(dev, max_abs_diff(direct.effect(i), stepwise.effect(i)));
    }
    return dev;
}

ComplexMatrix dp_reduction(const QuantumProgram &c, const ComplexMatrix &m, const ToleranceConfig &tol) {
    if (!c.kraus()) {
        throw DomainError("dp_reduction: program '" + c.label() + "' has no Kraus representation");
    }
    if (!is_hermitian(m, tol)) {
        throw DomainError("dp_reduction: effect is not hermitian");
    }
    if (!is_psd(m, tol) || !loewner_leq(m, ComplexMatrix::identity(m.dim()), tol)) {
        throw DomainError("dp_reduction: effect must satisfy 0 <= m <= I");
    }
    Predicate single(OutcomeSpace({"F1"}), {m});
    return wp(c, single, tol).effect(0);
}

}  // namespace qwp
