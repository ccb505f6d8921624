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

#ifndef QWP_PROGRAM_H
#define QWP_PROGRAM_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qwp/matrix.h"
#include "qwp/state.h"
#include "qwp/tolerance.h"

namespace qwp {

// Vectorization is column stacking throughout: vec(|i><j|) = e_j (x) e_i,
// i.e. entry (i, j) of a d x d operator sits at index j * d + i. A
// superoperator S acts as vec(C(X)) = S vec(X), and a Kraus operator K
// contributes conj(K) (x) K.

Eigen::VectorXcd vectorize(const ComplexMatrix &m);
ComplexMatrix devectorize(const Eigen::VectorXcd &v);

/// A linear map on d x d operators, stored as its d^2 x d^2 superoperator.
/// A Kraus list is kept alongside when the program was built from one.
///
/// Trace preservation and positivity are properties that can be queried,
/// not construction invariants: the adjoint of a program (unital but in
/// general not trace preserving) uses the same type.
class QuantumProgram {
   public:
    /// Throws DimensionError unless `super` is d^2 x d^2 and every Kraus
    /// operator is d x d.
    QuantumProgram(
        ComplexMatrix super, std::optional<std::vector<ComplexMatrix>> kraus = std::nullopt, std::string label = {});

    std::size_t dim() const {
        return dim_;
    }
    const ComplexMatrix &super() const {
        return super_;
    }
    const std::optional<std::vector<ComplexMatrix>> &kraus() const {
        return kraus_;
    }
    const std::string &label() const {
        return label_;
    }

    /// devec(S vec(m)) for an arbitrary d x d operator.
    ComplexMatrix apply_operator(const ComplexMatrix &m) const;

   private:
    std::size_t dim_;
    ComplexMatrix super_;
    std::optional<std::vector<ComplexMatrix>> kraus_;
    std::string label_;
};

struct IdentityMap {};
struct TransposeMap {};
/// rho -> (1 - p) rho + p Tr(rho) I / d, p in [0, 1].
struct Depolarizing {
    double p;
};
/// Qubit amplitude damping, gamma in [0, 1].
struct AmplitudeDamping {
    double gamma;
};
using NamedProgram = std::variant<IdentityMap, TransposeMap, Depolarizing, AmplitudeDamping>;

struct KrausSource {
    std::vector<ComplexMatrix> ops;
};
struct UnitarySource {
    ComplexMatrix u;
};
struct ChoiSource {
    ComplexMatrix choi;
};
struct SuperSource {
    ComplexMatrix super;
};
using ProgramSource = std::variant<KrausSource, UnitarySource, ChoiSource, SuperSource, NamedProgram>;

/// Builds the canonical superoperator from any supported source. Throws
/// DimensionError when the source disagrees with `dim`, DomainError for
/// a non-unitary unitary or out-of-range named parameter, and
/// TracePreservationError for a Choi matrix whose output partial trace is
/// not the identity.
QuantumProgram build_program(
    const ProgramSource &source, std::size_t dim, const ToleranceConfig &tol = {}, std::string label = {});

QuantumProgram identity_program(std::size_t dim);
QuantumProgram transpose_program(std::size_t dim);
/// Kraus form uses the d^2 Weyl operators X^a Z^b.
QuantumProgram depolarizing(double p, std::size_t dim = 2);
QuantumProgram amplitude_damping(double gamma);
QuantumProgram unitary_program(const ComplexMatrix &u, const ToleranceConfig &tol = {});
QuantumProgram kraus_program(std::vector<ComplexMatrix> ops, std::string label = "kraus");

/// C(rho). Throws DimensionError, TracePreservationError when the output
/// trace is off by more than residual_tol, and PositivityError when the
/// output has an eigenvalue below -10 * eig_tol.
DensityState apply(const QuantumProgram &c, const DensityState &rho, const ToleranceConfig &tol = {});

/// Hilbert-Schmidt adjoint: superoperator S^dagger; Kraus {K_i^dagger}
/// when Kraus operators are known.
QuantumProgram adjoint(const QuantumProgram &c);

/// sum_i K_i^dagger f K_i, computed from the Kraus list without touching the
/// superoperator. Throws DomainError when the program has no Kraus view.
ComplexMatrix kraus_adjoint_apply(const QuantumProgram &c, const ComplexMatrix &f);

/// adjoint(c)(I) == I within residual_tol.
bool is_trace_preserving(const QuantumProgram &c, const ToleranceConfig &tol = {});

/// J(C) = sum_ij C(|i><j|) (x) |i><j|.
ComplexMatrix to_choi(const QuantumProgram &c);
/// Inverse of to_choi (no trace-preservation check).
ComplexMatrix choi_to_super(const ComplexMatrix &choi);

bool is_completely_positive(const QuantumProgram &c, const ToleranceConfig &tol = {});

/// Three-valued positivity verdict. no_counterexample is evidence, not a
/// proof: general positivity of a linear map is not decided here.
struct PositivityVerdict {
    enum class Kind { certified_cp, no_counterexample, counterexample };
    Kind kind = Kind::no_counterexample;
    std::size_t samples = 0;
    /// Smallest eigenvalue of C(|psi><psi|) seen over all samples.
    double min_eigenvalue = 0;
    std::optional<Eigen::VectorXcd> counterexample;
};

const char *to_string(PositivityVerdict::Kind kind);

/// certified_cp when the Choi matrix is PSD. Otherwise C(|psi><psi|) is
/// tested on every computational-basis state, every Fourier-basis state and
/// tol.sample_count Haar-random pure states; the first psi whose image has
/// an eigenvalue below -eig_tol is returned.
PositivityVerdict is_positive_sampled(const QuantumProgram &c, const ToleranceConfig &tol, std::uint64_t seed);

/// Run c1, then c2.
QuantumProgram seq(const QuantumProgram &c1, const QuantumProgram &c2);

/// weight * c1 + (1 - weight) * c2. Throws DomainError for weight outside [0, 1].
QuantumProgram mix(double weight, const QuantumProgram &c1, const QuantumProgram &c2);

/// rho -> sum_m B_m(M_m rho M_m^dagger). Throws DomainError for an incomplete
/// instrument (sum M^dagger M != I) or mismatched list lengths.
QuantumProgram measure_branch(
    const std::vector<ComplexMatrix> &instrument,
    const std::vector<QuantumProgram> &branches,
    const ToleranceConfig &tol = {});

}  // namespace qwp

#endif  // QWP_PROGRAM_H
