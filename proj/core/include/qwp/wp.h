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

#ifndef QWP_WP_H
#define QWP_WP_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwp/matrix.h"
#include "qwp/predicate.h"
#include "qwp/program.h"
#include "qwp/random.h"
#include "qwp/state.h"
#include "qwp/tolerance.h"

namespace qwp {

/// Weakest precondition G = C* F, atom by atom through the superoperator
/// adjoint.
///
/// Throws DimensionError when dims differ, InvalidPredicateError when `f`
/// fails validate_predicate, and TracePreservationError when `c` is not
/// trace preserving. Positivity of `c` is not audited here (see wp_audited).
Predicate wp(const QuantumProgram &c, const Predicate &f, const ToleranceConfig &tol = {});

/// The same transformer through the Kraus route, G_i = sum_k K_k^dagger F_i K_k.
/// Performs no validation; throws DomainError when `c` has no Kraus view.
Predicate wp_kraus(const QuantumProgram &c, const Predicate &f);

struct AuditedWp {
    Predicate result;
    PositivityVerdict positivity;
    std::vector<std::string> warnings;
};

/// wp plus a sampled positivity audit of `c`. A counterexample to
/// positivity is an error (PositivityError); an uncertified verdict
/// (no_counterexample) only adds a warning.
AuditedWp wp_audited(const QuantumProgram &c, const Predicate &f, const ToleranceConfig &tol, std::uint64_t seed);

/// Per-atom |Tr(wp(c, f)_i rho) - Tr(f_i C(rho))|.
std::vector<double> duality_residual(
    const QuantumProgram &c, const Predicate &f, const DensityState &rho, const ToleranceConfig &tol = {});

/// {pre} prog {post}. Throws SpaceMismatchError or DimensionError when the
/// parts do not fit together.
struct HoareTriple {
    HoareTriple(Predicate pre, QuantumProgram prog, Predicate post);

    Predicate pre;
    QuantumProgram prog;
    Predicate post;
};

struct PreconditionWitness {
    std::size_t atom;
    DensityState state;
    double lhs;  // Tr(g_atom rho)
    double rhs;  // Tr(f_atom C(rho))
};

struct VerificationReport {
    enum class Verdict { holds, fails };

    Verdict verdict = Verdict::holds;
    OutcomeSpace space;
    std::optional<PreconditionWitness> witness;
    /// Per atom: max duality residual over the deficit eigenstates and a few
    /// seeded random states.
    std::vector<double> residuals;
    /// Per atom: min eigenvalue of wp(c, f)_i - g_i. Negative beyond eig_tol
    /// means the atom fails.
    std::vector<double> margins;
    std::uint64_t seed = 0;
    ToleranceConfig tol;

    bool holds() const {
        return verdict == Verdict::holds;
    }
};

const char *to_string(VerificationReport::Verdict verdict);

/// Whether g is a precondition of f under c, i.e. g <=_s wp(c, f). On
/// failure the witness is the eigenvector state of the most negative
/// eigenvalue of wp(c, f)_i - g_i, with both sides of the defining
/// inequality evaluated at it. `g` itself need not be a valid predicate.
VerificationReport is_precondition(
    const Predicate &g,
    const QuantumProgram &c,
    const Predicate &f,
    const ToleranceConfig &tol = {},
    std::uint64_t seed = 0);

VerificationReport verify_triple(const HoareTriple &t, const ToleranceConfig &tol = {}, std::uint64_t seed = 0);

/// G_i = W_i^(1/2) (I - R_i) W_i^(1/2). For 0 <= R_i <= I the result is PSD
/// and G_i <= W_i, so G is a precondition whenever W = wp(c, f).
Predicate shrinkage_candidate(const Predicate &w, const std::vector<ComplexMatrix> &shrink, const ToleranceConfig &tol = {});
/// shrinkage_candidate with random effects R_i.
Predicate random_shrinkage_candidate(const Predicate &w, Rng &rng, const ToleranceConfig &tol = {});
/// W_i + eps P_i with P_i random PSD of unit operator norm.
Predicate bump_candidate(const Predicate &w, double eps, Rng &rng);

struct WeakestReport {
    std::size_t trials = 0;
    /// Every candidate passed the sampled duality-side inequality and is
    /// dominated by wp(c, f).
    bool all_dominated = true;
    /// wp(c, f) is itself a precondition.
    bool membership = false;
    std::size_t failures = 0;
    /// max over trials, atoms and sampled states of Tr(G_i rho) - Tr(F_i C(rho)).
    double max_sampled_excess = -1;
    std::uint64_t seed = 0;
};

/// tol.sample_count shrinkage candidates, each checked on `states_per_trial`
/// sampled states through Tr(G_i rho) <= Tr(F_i C(rho)) and then against
/// wp(c, f) in the predicate order. Trial k uses derive_seed(seed, k).
WeakestReport weakest_check(
    const QuantumProgram &c,
    const Predicate &f,
    const ToleranceConfig &tol,
    std::uint64_t seed,
    std::size_t states_per_trial = 50);

/// max over atoms of max-entry |wp(seq(c1, c2), f) - wp(c1, wp(c2, f))|.
double wp_compose_check(
    const QuantumProgram &c1, const QuantumProgram &c2, const Predicate &f, const ToleranceConfig &tol = {});

/// One-atom special case: wraps 0 <= m <= I as a single-outcome predicate,
/// runs wp and unwraps. Requires a Kraus view of `c` (DomainError
/// otherwise) and throws DomainError when m is out of range.
ComplexMatrix dp_reduction(const QuantumProgram &c, const ComplexMatrix &m, const ToleranceConfig &tol = {});

}  // namespace qwp

#endif  // QWP_WP_H
