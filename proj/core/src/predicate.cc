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

#include "qwp/predicate.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "qwp/error.h"

namespace qwp {

namespace {

void require_comparable(const Predicate &f, const Predicate &g) {
    if (!(f.space() == g.space())) {
        throw SpaceMismatchError("predicates are defined over different outcome spaces");
    }
    if (f.dim() != g.dim()) {
        throw DimensionError(
            "predicate dimension mismatch (" + std::to_string(f.dim()) + " vs " + std::to_string(g.dim()) + ")");
    }
}

double expectation(const ComplexMatrix &op, const DensityState &rho) {
    return (op.eigen() * rho.matrix().eigen()).trace().real();
}

// Smallest eigenpair of g_i - f_i for one atom.
std::pair<double, Eigen::VectorXcd> deficit_min(
    const ComplexMatrix &fi, const ComplexMatrix &gi, const ToleranceConfig &tol) {
    auto eig = hermitian_eigen(gi - fi, tol);
    return {eig.values(0), eig.vectors.col(0)};
}

}  // namespace

OutcomeSpace::OutcomeSpace(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) {
        throw DomainError("outcome space must have at least one atom");
    }
    std::vector<std::string> sorted = atoms_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw DomainError("duplicate outcome label '" + *dup + "'");
    }
}

std::size_t OutcomeSpace::index_of(const std::string &label) const {
    auto it = std::find(atoms_.begin(), atoms_.end(), label);
    if (it == atoms_.end()) {
        throw UnknownLabelError("unknown outcome label '" + label + "'");
    }
    return static_cast<std::size_t>(it - atoms_.begin());
}

Predicate::Predicate(OutcomeSpace space, std::vector<ComplexMatrix> effects)
    : space_(std::move(space)), effects_(std::move(effects)) {
    if (effects_.size() != space_.size()) {
        throw DimensionError(
            "predicate has " + std::to_string(effects_.size()) + " effects for " + std::to_string(space_.size()) +
            " atoms");
    }
    for (std::size_t k = 1; k < effects_.size(); k++) {
        if (effects_[k].dim() != effects_[0].dim()) {
            throw DimensionError(
                "mixed effect dimensions: atom '" + space_.atoms()[k] + "' has dim " +
                std::to_string(effects_[k].dim()) + ", expected " + std::to_string(effects_[0].dim()));
        }
    }
}

Predicate Predicate::scaled(double factor) const {
    std::vector<ComplexMatrix> out;
    out.reserve(effects_.size());
    for (const auto &e : effects_) {
        out.push_back(e * Complex(factor));
    }
    return Predicate(space_, std::move(out));
}

ValidationReport validate_predicate(const Predicate &p, const ToleranceConfig &tol) {
    ValidationReport report;
    bool all_hermitian = true;
    for (std::size_t k = 0; k < p.space().size(); k++) {
        const auto &label = p.space().atoms()[k];
        const auto &e = p.effect(k);
        if (!is_hermitian(e, tol)) {
            all_hermitian = false;
            report.violations.push_back({label, "effect not hermitian"});
            continue;
        }
        double lo = min_eigenvalue(e, tol);
        if (lo < -tol.eig_tol) {
            std::ostringstream msg;
            msg << "effect not PSD (min eigenvalue " << lo << ")";
            report.violations.push_back({label, msg.str()});
        }
    }
    if (all_hermitian) {
        auto eig = hermitian_eigen(total_effect(p), tol);
        double hi = eig.values(eig.values.size() - 1);
        if (hi > 1.0 + tol.eig_tol) {
            std::ostringstream msg;
            msg << "F_total <= I fails (max eigenvalue of summed effects " << hi << ")";
            report.violations.push_back({std::nullopt, msg.str()});
        }
    }
    return report;
}

ComplexMatrix effect_of_set(const Predicate &p, const std::set<std::string> &subset) {
    ComplexMatrix acc = ComplexMatrix::zero(p.dim());
    for (const auto &label : subset) {
        acc = acc + p.effect(p.space().index_of(label));
    }
    return acc;
}

ComplexMatrix total_effect(const Predicate &p) {
    ComplexMatrix acc = ComplexMatrix::zero(p.dim());
    for (const auto &e : p.effects()) {
        acc = acc + e;
    }
    return acc;
}

bool is_complete(const Predicate &p, const ToleranceConfig &tol) {
    return max_abs_diff(total_effect(p), ComplexMatrix::identity(p.dim())) <= tol.residual_tol;
}

bool predicate_leq(const Predicate &f, const Predicate &g, const ToleranceConfig &tol) {
    require_comparable(f, g);
    for (std::size_t k = 0; k < f.space().size(); k++) {
        if (!loewner_leq(f.effect(k), g.effect(k), tol)) {
            return false;
        }
    }
    return true;
}

std::optional<OrderWitness> order_witness(const Predicate &f, const Predicate &g, const ToleranceConfig &tol) {
    require_comparable(f, g);
    double worst = std::numeric_limits<double>::infinity();
    std::size_t worst_atom = 0;
    Eigen::VectorXcd worst_vec;
    for (std::size_t k = 0; k < f.space().size(); k++) {
        auto [lo, vec] = deficit_min(f.effect(k), g.effect(k), tol);
        if (lo < worst) {
            worst = lo;
            worst_atom = k;
            worst_vec = vec;
        }
    }
    if (worst >= -tol.eig_tol) {
        return std::nullopt;
    }
    DensityState rho = DensityState::pure(worst_vec);
    return OrderWitness{
        worst_atom, rho, expectation(f.effect(worst_atom), rho), expectation(g.effect(worst_atom), rho)};
}

bool s_leq(const Predicate &f, const Predicate &g, const ToleranceConfig &tol) {
    require_comparable(f, g);
    for (std::size_t k = 0; k < f.space().size(); k++) {
        // The state minimizing Tr(rho (g_k - f_k)) over E(H) is the eigenvector
        // of the smallest eigenvalue; checking it checks every state.
        auto [lo, vec] = deficit_min(f.effect(k), g.effect(k), tol);
        (void)lo;
        DensityState rho = DensityState::pure(vec);
        double lhs = sat(rho, f, tol).weights[k];
        double rhs = sat(rho, g, tol).weights[k];
        if (lhs > rhs + tol.eig_tol) {
            return false;
        }
    }
    return true;
}

double SatMeasure::mass(const std::set<std::string> &subset) const {
    double acc = 0;
    for (const auto &label : subset) {
        acc += weights[space.index_of(label)];
    }
    return acc;
}

double SatMeasure::total() const {
    double acc = 0;
    for (double w : weights) {
        acc += w;
    }
    return acc;
}

SatMeasure sat(const DensityState &rho, const Predicate &p, const ToleranceConfig &tol) {
    if (rho.dim() != p.dim()) {
        throw DimensionError(
            "sat: state dim " + std::to_string(rho.dim()) + " vs predicate dim " + std::to_string(p.dim()));
    }
    SatMeasure m{p.space(), {}, false};
    m.weights.reserve(p.space().size());
    bool nonnegative = true;
    bool some_positive = false;
    for (const auto &e : p.effects()) {
        double w = expectation(e, rho);
        m.weights.push_back(w);
        nonnegative = nonnegative && w >= -tol.residual_tol;
        some_positive = some_positive || w > tol.residual_tol;
    }
    m.satisfied = nonnegative && some_positive;
    return m;
}

Predicate chain_sup(const std::vector<Predicate> &chain, const ToleranceConfig &tol) {
    if (chain.empty()) {
        throw DomainError("chain_sup: empty chain");
    }
    for (std::size_t k = 1; k < chain.size(); k++) {
        if (!predicate_leq(chain[k - 1], chain[k], tol)) {
            throw DomainError("chain_sup: chain is not monotone at position " + std::to_string(k));
        }
    }
    return chain.back();
}

}  // namespace qwp
