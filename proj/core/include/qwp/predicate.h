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

#ifndef QWP_PREDICATE_H
#define QWP_PREDICATE_H

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qwp/matrix.h"
#include "qwp/state.h"
#include "qwp/tolerance.h"

namespace qwp {

/// Finite outcome set. Outcome "sets" are subsets of these atoms, and
/// additivity over disjoint sets is finite additivity over atoms.
class OutcomeSpace {
   public:
    /// Throws DomainError for an empty or duplicated label list.
    explicit OutcomeSpace(std::vector<std::string> atoms);

    const std::vector<std::string> &atoms() const {
        return atoms_;
    }
    std::size_t size() const {
        return atoms_.size();
    }
    /// Throws UnknownLabelError.
    std::size_t index_of(const std::string &label) const;

    bool operator==(const OutcomeSpace &) const = default;

   private:
    std::vector<std::string> atoms_;
};

/// A POVM-valued quantum predicate: one effect per atom.
///
/// Construction only checks structure (one effect per atom, equal dims).
/// Positivity and F_total <= I are checked by validate_predicate, so that
/// invalid input can be inspected and reported.
class Predicate {
   public:
    /// Throws DimensionError on a count mismatch or mixed effect dims.
    Predicate(OutcomeSpace space, std::vector<ComplexMatrix> effects);

    const OutcomeSpace &space() const {
        return space_;
    }
    const std::vector<ComplexMatrix> &effects() const {
        return effects_;
    }
    const ComplexMatrix &effect(std::size_t atom) const {
        return effects_.at(atom);
    }
    const ComplexMatrix &effect(const std::string &label) const {
        return effects_.at(space_.index_of(label));
    }
    std::size_t dim() const {
        return effects_.front().dim();
    }

    /// Every effect multiplied by `factor`.
    Predicate scaled(double factor) const;

   private:
    OutcomeSpace space_;
    std::vector<ComplexMatrix> effects_;
};

struct Violation {
    std::optional<std::string> atom;  // empty for whole-predicate violations
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const {
        return violations.empty();
    }
};

/// ok iff every effect is hermitian with min eigenvalue >= -eig_tol and the
/// total effect has max eigenvalue <= 1 + eig_tol.
ValidationReport validate_predicate(const Predicate &p, const ToleranceConfig &tol = {});

/// Sum of the effects of the named atoms; the empty set gives zero.
ComplexMatrix effect_of_set(const Predicate &p, const std::set<std::string> &subset);

/// Sum over all atoms.
ComplexMatrix total_effect(const Predicate &p);

/// max-entry |F_total - I| <= residual_tol.
bool is_complete(const Predicate &p, const ToleranceConfig &tol = {});

/// Per-atom Loewner order. Throws SpaceMismatchError / DimensionError.
bool predicate_leq(const Predicate &f, const Predicate &g, const ToleranceConfig &tol = {});

/// A state that separates two predicates: Tr(rho f_atom) > Tr(rho g_atom).
struct OrderWitness {
    std::size_t atom;
    DensityState state;
    double lhs;  // Tr(rho f_atom)
    double rhs;  // Tr(rho g_atom)
};

/// The eigenvector state of the most negative eigenvalue over all atoms of
/// g_i - f_i, or nullopt when f <= g atomwise.
std::optional<OrderWitness> order_witness(const Predicate &f, const Predicate &g, const ToleranceConfig &tol = {});

/// Satisfiability order: for every atom and every state, sat(rho, f) <= sat(rho, g).
/// Evaluated through satisfiability at the worst-case state of each atom,
/// which makes the quantifier over states exact. Always agrees with
/// predicate_leq.
bool s_leq(const Predicate &f, const Predicate &g, const ToleranceConfig &tol = {});

/// The measure A -> Tr(rho F_A), stored as per-atom weights.
struct SatMeasure {
    OutcomeSpace space;
    std::vector<double> weights;
    /// All weights >= -residual_tol and at least one > residual_tol.
    bool satisfied = false;

    double mass(const std::set<std::string> &subset) const;
    double total() const;
};

SatMeasure sat(const DensityState &rho, const Predicate &p, const ToleranceConfig &tol = {});

/// Supremum of a finite monotone chain (its last element). Throws
/// DomainError for an empty or non-monotone chain and SpaceMismatchError
/// when elements live on different spaces.
Predicate chain_sup(const std::vector<Predicate> &chain, const ToleranceConfig &tol = {});

}  // namespace qwp

#endif  // QWP_PREDICATE_H
